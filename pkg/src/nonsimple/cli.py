"""Command line entry point: ``python -m nonsimple <command> ...``."""
from __future__ import annotations

import argparse
import logging
import sys
import time
from pathlib import Path

from . import bounds as bd
from .classifier import DEFAULT_K_TEST, CertifiedSimple, classify_parameter, primes_tested
from .errors import BelowThresholdError, InvalidInputError, NonsimpleError
from .harness import (
    ScanConfig,
    format_report,
    load_family,
    parse_key_value_file,
    read_scan_csv,
    report,
    run_scan,
)
from .heights import format_rat, mult_height, parse_rat
from .hyperelliptic import FamilySpec, GenusTwoCurve
from .igusa import igusa_invariants, j_height
from .symplectic import (
    SympModule,
    isotropic_count,
    lagrangian_count,
    verify_kernel_lemma,
)


def _add_bound_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--g", type=int, default=2)
    p.add_argument("--d", type=int, default=1)
    p.add_argument("--dK", type=int, default=1)
    p.add_argument("--kappa", type=float, default=4.0)
    p.add_argument("--c", type=float, default=1.0)
    p.add_argument("--Ciota", type=float, default=1.0)
    p.add_argument("--Cprime", type=float, default=1.0)
    p.add_argument("--ell0", type=int, default=5)


def _params(args, gB: int = 1) -> bd.BoundParams:
    return bd.BoundParams(
        g=args.g, gB=gB, gC=args.g - gB, d=args.d, d_K=args.dK, c=args.c, kappa=args.kappa,
        C_iota=args.Ciota, C_prime=args.Cprime, ell0=args.ell0,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nonsimple", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("scan", help="classify all t of bounded height in a family")
    p.add_argument("--config", type=Path, help="key = value file; flags override it")
    p.add_argument("--family", type=Path)
    p.add_argument("--height-bound", type=int)
    p.add_argument("--primes", type=int)
    p.add_argument("--height-mode", choices=["parameter", "j-proxy"])
    p.add_argument("--workers", type=int)
    p.add_argument("--cache", type=Path)
    p.add_argument("--out", type=Path)
    p.add_argument("--k-max", type=int, help="check P_k for k = 2..k_max (default 60)")

    p = sub.add_parser("classify", help="classify a single parameter")
    p.add_argument("--f", required=True, help='coefficients of f, highest degree first, e.g. "1,0,0,0,1"')
    p.add_argument("--t", required=True)
    p.add_argument("--primes", type=int, default=100)

    p = sub.add_parser("report", help="summarize a scan CSV against the bound curves")
    p.add_argument("--in", dest="infile", type=Path, required=True)
    p.add_argument("--grid", required=True, help="comma-separated increasing height bounds")
    p.add_argument("--height-mode", choices=["parameter", "j-proxy"], default="parameter")
    p.add_argument("--C", type=float, default=1.0, help="EEHK constant C")
    p.add_argument("--D", type=float, default=1.0, help="EEHK constant D")
    _add_bound_flags(p)

    p = sub.add_parser("bounds", help="evaluate the bound chain at one B")
    p.add_argument("--B", required=True, help='height bound; "e1000" means e^1000')
    p.add_argument("--case", choices=["diagonal", "parabolic", "fourth"])
    p.add_argument("--gB", type=int, default=1)
    _add_bound_flags(p)

    p = sub.add_parser("verify", help="exhaustive structural checks")
    vsub = p.add_subparsers(dest="what", required=True)
    v = vsub.add_parser("symplectic")
    v.add_argument("--g", type=int, required=True)
    v.add_argument("--ell", type=int, required=True)
    v.add_argument("--m", type=int, required=True)

    p = sub.add_parser("invariants", help="Igusa-Clebsch invariants and j-height of y^2 = F(x)")
    p.add_argument("--f", required=True)
    return parser


def cmd_scan(args) -> int:
    conf = parse_key_value_file(args.config) if args.config else {}

    def pick(name, flag_value, cast=str, default=None):
        if flag_value is not None:
            return flag_value
        if name in conf:
            return cast(conf[name])
        return default

    family_path = pick("family", args.family, Path)
    B = pick("height_bound", args.height_bound, int)
    P = pick("primes", args.primes, int)
    out = pick("out", args.out, Path)
    if family_path is None or B is None or P is None or out is None:
        raise InvalidInputError("scan needs --family, --height-bound, --primes and --out")
    k_max = pick("k_max", args.k_max, int, 60)
    config = ScanConfig(
        family=load_family(family_path),
        B_max=B,
        P_max=P,
        K_test=tuple(range(2, k_max + 1)),
        height_mode=pick("height_mode", args.height_mode, str, "parameter"),
        workers=pick("workers", args.workers, int, 1),
        cache_path=pick("cache", args.cache, Path),
        out_path=out,
    )
    stats = {}
    start = time.perf_counter()
    records = run_scan(config, stats)
    counts = {s: sum(r.status == s for r in records) for s in ("simple", "candidate", "degenerate")}
    print(
        f"{len(records)} parameters: {counts['simple']} simple, {counts['candidate']} candidate, "
        f"{counts['degenerate']} degenerate ({stats['computed']} computed, {stats['cached']} cached, "
        f"{time.perf_counter() - start:.1f} s) -> {config.out_path}"
    )
    return 0


def cmd_classify(args) -> int:
    family = FamilySpec(args.f)
    t = parse_rat(args.t)
    c = classify_parameter(family, t, args.primes, DEFAULT_K_TEST)
    print(f"t = {format_rat(t)}  H(t) = {mult_height(t)}  status = {c.status}")
    if isinstance(c, CertifiedSimple):
        cert = c.certificate
        print(f"certificate: p = {cert.p}, c1 = {cert.c1}, c2 = {cert.c2}, k checked up to {max(cert.k_checked)}")
    for rec in c.records:
        print(f"  p = {rec.p}: N1 = {rec.N1}, N2 = {rec.N2}, c1 = {rec.c1}, c2 = {rec.c2}")
    print(f"primes tested: {primes_tested(c)}")
    return 0


def cmd_report(args) -> int:
    records = read_scan_csv(args.infile)
    try:
        grid = [int(x) for x in args.grid.split(",") if x.strip()]
    except ValueError as exc:
        raise InvalidInputError(f"bad grid {args.grid!r}") from exc
    rep = report(
        records, grid, _params(args), eehk_C=args.C, eehk_D=args.D,
        height="j_proxy" if args.height_mode == "j-proxy" else "parameter",
    )
    sys.stdout.write(format_report(rep))
    return 0


def _f(x) -> str:
    return "n/a" if x is None else f"{x:.6f}"


def cmd_bounds(args) -> int:
    log_B = bd.parse_log_B(args.B)
    params = _params(args, args.gB)
    if args.case == "diagonal":
        cases = [bd.CoverCase.diagonal(args.gB, args.g - args.gB)]
    elif args.case:
        cases = [bd.CoverCase(args.case)]
    else:
        cases = bd.all_cases(args.g)
    try:
        total = bd.total_bound_log(log_B, params)
    except BelowThresholdError:
        total = None
    eehk = bd.eehk_bound_log(log_B, args.g)
    lines = [
        "# constants kappa, c, C_iota, ell0 are placeholders; compare shapes, not values",
        "case\tell\tcover_degree_log\tlifted_height_log\tcase_bound_log\ttotal_log\teehk_log",
    ]
    for case in cases:
        try:
            cb = bd.case_bound(log_B, case, params)
            cols = [str(cb.ell), _f(cb.cover_degree_log), _f(cb.height_log), _f(cb.bound_log)]
        except BelowThresholdError as exc:
            if args.case:
                raise
            cols = ["n/a", "n/a", "n/a", f"below B0 (log B0 = {exc.log_B0:.6g})"]
        lines.append("\t".join([str(case), *cols, _f(total), _f(eehk)]))
    print("\n".join(lines))
    return 0


def cmd_verify(args) -> int:
    M = SympModule(args.g, args.ell, args.m)
    rep = verify_kernel_lemma(M)
    print(f"(g, ell, m) = ({M.g}, {M.ell}, {M.m}): {rep.subgroups} maximal isotropic subgroups")
    print(f"  branch W = M[ell^(m/2)]: {rep.full_torsion_branch}")
    print(f"  branch ell^(k-1) W isotropic in M[ell]: {rep.isotropic_branch}")
    print(f"  violations: {len(rep.violations)}")
    for gens, why in rep.violations[:10]:
        print(f"    {gens}: {why}")
    print(f"  wall time: {rep.seconds:.3f} s")
    for note in rep.notes:
        print(f"  note: {note}")
    print(f"  isotropic subspace counts over F_{M.ell}: " + ", ".join(
        f"k={k}: {isotropic_count(M.g, M.ell, k)}" for k in range(1, M.g + 1)))
    print(f"  prod_(i=1..g) (ell^i + 1) = {lagrangian_count(M.g, M.ell)} matches only k = g (Lagrangian stabilizer)")
    return 0 if rep.ok else 1


def cmd_invariants(args) -> int:
    curve = GenusTwoCurve(args.f)
    inv = igusa_invariants(curve)
    for name in ("I2", "I4", "I6", "I10"):
        print(f"{name} = {format_rat(getattr(inv, name))}")
    for name in ("j1", "j2", "j3"):
        print(f"{name} = {format_rat(getattr(inv, name))}")
    print(f"H_j = {j_height(curve)}")
    return 0


COMMANDS = {
    "scan": cmd_scan,
    "classify": cmd_classify,
    "report": cmd_report,
    "bounds": cmd_bounds,
    "verify": cmd_verify,
    "invariants": cmd_invariants,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return COMMANDS[args.command](args)
    except NonsimpleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
