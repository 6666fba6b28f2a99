"""
Running the verification suites
===============================

Each suite records one check per instance with expected and observed values.
A failing record carries a witness that is enough to replay it.
"""

from oddstab import run_suite

rep = run_suite("formulas", ns=(20, 50, 100))
print("formulas", rep.summary)

rep = run_suite("decomposition", count=5, regime=False)
print("planted corpus", rep.summary, f"{rep.wall_time:.2f}s")

rep = run_suite("turan")
for rec in rep.records:
    print(rec.name, rec.params, "expected", rec.expected, "observed", rec.observed, "ok" if rec.passed else "FAIL")
