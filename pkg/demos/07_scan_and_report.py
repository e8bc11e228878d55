"""
A small census
==============

Classify every fiber of y^2 = (x^4 + 1)(x - t) with H(t) <= 8, then tabulate
candidate counts against the bound curves.
"""
import tempfile
from pathlib import Path

from nonsimple.bounds import BoundParams
from nonsimple.harness import ScanConfig, format_report, report, run_scan
from nonsimple.hyperelliptic import FamilySpec

tmp = Path(tempfile.mkdtemp())
config = ScanConfig(FamilySpec("1,0,0,0,1"), B_max=8, P_max=100, cache_path=tmp / "cache.txt", out_path=tmp / "scan.csv")

stats = {}
records = run_scan(config, stats)
print(stats)
print((tmp / "scan.csv").read_text().splitlines()[:6])

# a second run is served entirely from the cache
run_scan(config, stats)
print(stats)

for r in records:
    if r.status != "simple":
        print(r)

print(format_report(report(records, [2, 4, 8], BoundParams(), B_max=8)))
