"""Run every theorem check on a small universe and print the reports.

Run: python demos/04_theorem_sweeps.py [nmax]
"""

from __future__ import annotations

import sys

from prismdom import verify

nmax = int(sys.argv[1]) if len(sys.argv) > 1 else 5

# %% Each check returns a result with the universe it swept, counts, and notes.
for check_id in verify.CHECKS:
    r = verify.run_check(check_id, nmax=nmax, seed=0)
    print(r.summary(), f"({r.elapsed:.1f}s)")
    for key, value in sorted(r.stats.items()):
        if value:
            print(f"    {key}: {value}")
    for note in r.notes:
        print("    note:", note)
    if not r.passed:
        print("    counterexample:", r.counterexample)
