"""
The whole catalog
=================

Recompute all 32 groups, print the K-group tables, and compare with the
stored reference values.
"""

from collections import Counter

from lowerk import assemble, verify_all
from lowerk.catalog import entries
from lowerk.cli import run_captured

by_ideal = Counter(e.ideal_vertices for e in entries())
print("groups by number of ideal vertices:", dict(sorted(by_ideal.items())))

for e in entries():
    r = assemble(e.diagram).normalized()
    print(f"{e.name:16} Km1 = {str(r[-1]):10} K0t = {str(r[0]):34} Wh = {r[1]}")

report = verify_all()
print(report.summary())
for f in report.failures():
    print("  ", f.name, "->", f.mismatch)

# the same table through the command line
code, out, _ = run_captured(["tables", "--which", "6"])
print(out)
