"""
Bound curves in log space
=========================

Evaluate the cover-degree / height / point-count chain for each cover case
and compare with the older (g^2 D log 2B)^(11 g^2) bound.  Constants are
placeholders, so only the shapes mean anything.
"""
from nonsimple.bounds import (
    PARABOLIC,
    BoundParams,
    CoverCase,
    all_cases,
    case_bound,
    eehk_bound_log,
    log_B0,
    optimize_level,
    total_bound_log,
)
from nonsimple.errors import BelowThresholdError

P = BoundParams(ell0=2)
print("level for B = e^1000:", optimize_level(1000.0, PARABOLIC, P))

for case in all_cases(2):
    print(case, "log B0 =", log_B0(case, P))

for log_B in (1e3, 1e4, 1e5, 1e6):
    row = [f"{log_B:8.0e}"]
    for case in (CoverCase.diagonal(1, 1), PARABOLIC):
        cb = case_bound(log_B, case, P)
        row.append(f"{case}: l={cb.ell} bound={cb.bound_log:.1f}")
    row.append(f"eehk={eehk_bound_log(log_B, 2):.1f}")
    print("  ".join(row))

# the fourth-power cover only becomes admissible far out
try:
    total_bound_log(1e6, P)
except BelowThresholdError as exc:
    print("total undefined:", exc)
for log_B in (1e11, 1e13, 1e15):
    print(f"log B = {log_B:.0e}: total {total_bound_log(log_B, P):.1f}, eehk {eehk_bound_log(log_B, 2):.1f}")
