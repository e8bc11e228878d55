"""Family scans over all parameters of bounded height, with a resumable cache and reports."""
from __future__ import annotations

import csv
import hashlib
import io
import logging
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Optional, Sequence

import numpy as np

from .bounds import BoundParams, eehk_bound_log, total_bound_log
from .classifier import (
    DEFAULT_K_TEST,
    certifying_prime,
    classify_parameter,
    primes_tested,
)
from .errors import BelowThresholdError, CacheIOError, InvalidInputError
from .heights import enumerate_rationals, format_rat, mult_height, parse_rat
from .hyperelliptic import DEFAULT_LOOP_BOUND, FamilySpec, specialize
from .igusa import j_height

log = logging.getLogger(__name__)

CSV_COLUMNS = ("t", "H_t", "H_j", "status", "certifying_prime", "primes_tested")
HEIGHT_MODES = ("parameter", "j_proxy")


@dataclass
class ScanConfig:
    family: FamilySpec
    B_max: int
    P_max: int
    K_test: tuple[int, ...] = DEFAULT_K_TEST
    height_mode: str = "parameter"
    workers: int = 1
    cache_path: Optional[Path] = None
    out_path: Optional[Path] = None
    loop_bound: int = DEFAULT_LOOP_BOUND

    def __post_init__(self):
        if self.B_max < 1:
            raise InvalidInputError("B_max must be at least 1")
        if self.P_max < 3:
            raise InvalidInputError("P_max must be at least 3")
        if self.height_mode == "j-proxy":
            self.height_mode = "j_proxy"
        if self.height_mode not in HEIGHT_MODES:
            raise InvalidInputError(f"height mode must be one of {HEIGHT_MODES}")
        if self.workers < 1:
            raise InvalidInputError("workers must be positive")
        self.K_test = tuple(sorted({int(k) for k in self.K_test}))
        self.cache_path = Path(self.cache_path) if self.cache_path else None
        self.out_path = Path(self.out_path) if self.out_path else None


@dataclass(frozen=True)
class ScanRecord:
    t: Fraction
    H_t: int
    H_j: Optional[int]
    status: str
    certifying_prime: Optional[int]
    primes_tested: int

    def as_row(self) -> list[str]:
        return [
            format_rat(self.t),
            str(self.H_t),
            "" if self.H_j is None else str(self.H_j),
            self.status,
            "" if self.certifying_prime is None else str(self.certifying_prime),
            str(self.primes_tested),
        ]


def cache_key(family: FamilySpec, t, P_max: int, K_test: Iterable[int]) -> str:
    text = "|".join(
        [
            ",".join(map(str, family.f_coeffs)),
            format_rat(Fraction(t)),
            str(P_max),
            ",".join(map(str, sorted(set(K_test)))),
        ]
    )
    return hashlib.sha256(text.encode()).hexdigest()[:32]


class ScanCache:
    """Append-only cache file with lines ``key,t,status,certifying_prime,primes_tested``.

    Malformed lines (for example a truncated final write) are skipped on load.
    """

    def __init__(self, path: Optional[Path]):
        self.path = Path(path) if path else None
        self.entries: dict[str, tuple[str, Optional[int], int]] = {}
        self._fh = None

    def load(self) -> "ScanCache":
        if self.path is None or not self.path.exists():
            return self
        with open(self.path, encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, 1):
                parts = line.rstrip("\n").split(",")
                try:
                    key, _t, status, cp, pt = parts
                    parse_rat(_t)
                    if status not in ("simple", "candidate", "degenerate") or not line.endswith("\n"):
                        raise ValueError(line)
                    self.entries[key] = (status, int(cp) if cp else None, int(pt))
                except (ValueError, InvalidInputError):
                    log.warning("skipping malformed cache line %d in %s", lineno, self.path)
        return self

    def open(self) -> None:
        if self.path is None:
            return
        try:
            needs_newline = self.path.exists() and self.path.stat().st_size > 0 and not _ends_with_newline(self.path)
            self._fh = open(self.path, "a", encoding="utf-8")
            if needs_newline:
                self._fh.write("\n")
        except OSError as exc:
            raise CacheIOError(f"cannot open cache {self.path}: {exc}") from exc

    def append(self, key: str, t, status: str, cp: Optional[int], pt: int) -> None:
        self.entries[key] = (status, cp, pt)
        if self._fh is not None:
            self._fh.write(f"{key},{format_rat(t)},{status},{'' if cp is None else cp},{pt}\n")
            self._fh.flush()

    def close(self) -> None:
        if self._fh is not None:
            self._fh.close()
            self._fh = None


def _ends_with_newline(path: Path) -> bool:
    with open(path, "rb") as fh:
        fh.seek(-1, os.SEEK_END)
        return fh.read(1) == b"\n"


def _check_writable(path: Optional[Path], what: str) -> None:
    if path is None:
        return
    parent = path.parent if str(path.parent) else Path(".")
    if path.exists():
        ok = path.is_file() and os.access(path, os.W_OK)
    else:
        ok = parent.is_dir() and os.access(parent, os.W_OK)
    if not ok:
        raise CacheIOError(f"{what} path {path} is not writable")


def _classify_task(args) -> tuple[str, Optional[int], int]:
    family, t, P_max, K_test, loop_bound = args
    c = classify_parameter(family, t, P_max, K_test, loop_bound)
    return c.status, certifying_prime(c), primes_tested(c)


def _j_height_or_none(family: FamilySpec, t: Fraction) -> Optional[int]:
    if family.is_root(t):
        return None
    return j_height(specialize(family, t))


def run_scan(config: ScanConfig, stats: Optional[dict] = None) -> list[ScanRecord]:
    """Classify every t with H(t) <= B_max (optionally also H_j <= B_max).

    ``stats``, if given, receives the counts of computed and cached classifications.
    """
    _check_writable(config.cache_path, "cache")
    _check_writable(config.out_path, "output")
    family = config.family
    params = enumerate_rationals(config.B_max)
    hj = {t: _j_height_or_none(family, t) for t in params}
    if config.height_mode == "j_proxy":
        params = [t for t in params if hj[t] is not None and hj[t] <= config.B_max]

    cache = ScanCache(config.cache_path).load()
    keys = {t: cache_key(family, t, config.P_max, config.K_test) for t in params}
    todo = [t for t in params if keys[t] not in cache.entries]
    if stats is not None:
        stats["computed"] = len(todo)
        stats["cached"] = len(params) - len(todo)

    cache.open()
    try:
        tasks = [(family, t, config.P_max, config.K_test, config.loop_bound) for t in todo]
        if config.workers > 1 and len(tasks) > 1:
            with ProcessPoolExecutor(max_workers=config.workers) as pool:
                results = pool.map(_classify_task, tasks, chunksize=max(1, len(tasks) // (8 * config.workers)))
                for t, res in zip(todo, results):
                    cache.append(keys[t], t, *res)
        else:
            for t, task in zip(todo, tasks):
                cache.append(keys[t], t, *_classify_task(task))
    finally:
        cache.close()

    records = []
    for t in params:
        status, cp, pt = cache.entries[keys[t]]
        records.append(ScanRecord(t, mult_height(t), hj[t], status, cp, pt))
    records.sort(key=lambda r: (r.H_t, r.t))
    if config.out_path is not None:
        write_scan_csv(records, config.out_path)
    return records


def scan_csv_text(records: Sequence[ScanRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in records:
        writer.writerow(r.as_row())
    return buf.getvalue()


def write_scan_csv(records: Sequence[ScanRecord], path) -> None:
    try:
        Path(path).write_text(scan_csv_text(records), encoding="utf-8")
    except OSError as exc:
        raise CacheIOError(f"cannot write {path}: {exc}") from exc


def read_scan_csv(path) -> list[ScanRecord]:
    try:
        with open(path, newline="", encoding="utf-8") as fh:
            rows = list(csv.DictReader(fh))
    except OSError as exc:
        raise CacheIOError(f"cannot read {path}: {exc}") from exc
    out = []
    for row in rows:
        try:
            out.append(
                ScanRecord(
                    parse_rat(row["t"]),
                    int(row["H_t"]),
                    int(row["H_j"]) if row["H_j"] else None,
                    row["status"],
                    int(row["certifying_prime"]) if row["certifying_prime"] else None,
                    int(row["primes_tested"]),
                )
            )
        except (KeyError, ValueError) as exc:
            raise InvalidInputError(f"malformed scan row {row}") from exc
    return out


@dataclass(frozen=True)
class ReportRow:
    B: int
    candidates: int
    simple: int
    degenerate: int
    total: int
    total_bound_log: Optional[float]
    eehk_bound_log: float


@dataclass
class Report:
    rows: list[ReportRow]
    kappa_emp: Optional[float]
    notes: list[str] = field(default_factory=list)


def fit_kappa(grid: Sequence[int], candidate_counts: Sequence[int]) -> Optional[float]:
    """Least-squares slope of log(1 + count) against log log B, over points with a candidate."""
    xs, ys = [], []
    for B, n in zip(grid, candidate_counts):
        if B > math.e and n >= 1:
            xs.append(math.log(math.log(B)))
            ys.append(math.log1p(n))
    if len(xs) < 2 or len(set(xs)) < 2:
        return None
    slope, _ = np.polyfit(xs, ys, 1)
    return float(slope)


def report(
    records: Sequence[ScanRecord],
    B_grid: Sequence[int],
    params: BoundParams,
    eehk_C: float = 1.0,
    eehk_D: float = 1.0,
    B_max: Optional[int] = None,
    height: str = "parameter",
) -> Report:
    grid = [int(B) for B in B_grid]
    if any(b2 <= b1 for b1, b2 in zip(grid, grid[1:])) or (grid and grid[0] < 1):
        raise InvalidInputError("grid must be increasing positive integers")
    scan_range = B_max if B_max is not None else max((r.H_t for r in records), default=None)
    if scan_range is not None and records and grid and grid[-1] > scan_range:
        raise InvalidInputError(f"grid point {grid[-1]} exceeds the scanned range {scan_range}")
    if height not in ("parameter", "j_proxy"):
        raise InvalidInputError("height must be 'parameter' or 'j_proxy'")

    def h(r: ScanRecord):
        return r.H_t if height == "parameter" else r.H_j

    rows = []
    for B in grid:
        inside = [r for r in records if h(r) is not None and h(r) <= B]
        counts = {s: sum(r.status == s for r in inside) for s in ("candidate", "simple", "degenerate")}
        try:
            tb = total_bound_log(math.log(B), params)
        except BelowThresholdError:
            tb = None
        rows.append(
            ReportRow(
                B,
                counts["candidate"],
                counts["simple"],
                counts["degenerate"],
                len(inside),
                tb,
                eehk_bound_log(math.log(B), params.g, eehk_C, eehk_D),
            )
        )
    kappa = fit_kappa(grid, [r.candidates for r in rows])
    notes = [
        "kappa_emp: slope of log(1 + candidates) on log log B, using grid points with at least one candidate.",
        "Bound columns are natural logs; constants are placeholders, so only shapes are comparable.",
        "total_bound_log is n/a where B is below the level-optimizer threshold B0.",
    ]
    return Report(rows, kappa, notes)


def _fmt(x: Optional[float]) -> str:
    return "n/a" if x is None else f"{x:.4f}"


def format_report(rep: Report) -> str:
    header = ("B", "candidates", "simple", "degenerate", "total", "total_bound_log", "eehk_bound_log")
    lines = ["\t".join(header)]
    for r in rep.rows:
        lines.append(
            "\t".join(
                [str(r.B), str(r.candidates), str(r.simple), str(r.degenerate), str(r.total),
                 _fmt(r.total_bound_log), _fmt(r.eehk_bound_log)]
            )
        )
    lines.append(f"kappa_emp\t{_fmt(rep.kappa_emp)}")
    lines.extend(f"# {n}" for n in rep.notes)
    return "\n".join(lines) + "\n"


def parse_key_value_file(path) -> dict[str, str]:
    """Lines ``key = value``; '#' starts a comment."""
    out = {}
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CacheIOError(f"cannot read {path}: {exc}") from exc
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise InvalidInputError(f"{path}:{lineno}: expected 'key = value'")
        key, value = line.split("=", 1)
        out[key.strip().replace("-", "_")] = value.strip()
    return out


def load_family(path) -> FamilySpec:
    kv = parse_key_value_file(path)
    if "f" not in kv:
        raise InvalidInputError(f"{path}: missing 'f = ...' line")
    return FamilySpec(kv["f"], kv.get("label", ""))
