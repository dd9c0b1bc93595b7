"""Run every registered theorem suite on one space and tabulate the outcome.

Run:  python demos/suite_sweep.py [ring] [mode] [count]
      e.g. python demos/suite_sweep.py gfp:3 random 200
"""
import sys

from wbc import RingSpec
from wbc.harness.generate import InstanceSpace
from wbc.harness.suites import SUITES, run_suite

ring = RingSpec.parse(sys.argv[1] if len(sys.argv) > 1 else "gfp:2")
mode = sys.argv[2] if len(sys.argv) > 2 else "exhaustive"
count = int(sys.argv[3]) if len(sys.argv) > 3 else 200
space = InstanceSpace(ring, 2, mode, seed=0, count=count)

print(f"{'suite':<22}{'tested':>8}{'skipped':>9}{'failures':>10}{'secs':>7}")
for name in SUITES:
    r = run_suite(name, space)
    print(f"{name:<22}{r.tested:>8}{r.skipped:>9}{len(r.failures):>10}{r.elapsed:>7.1f}")
