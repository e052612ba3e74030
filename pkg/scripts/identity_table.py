"""Run the identity suites and print a markdown summary table."""

from __future__ import annotations

import argparse
import time

from riordankit.identities import SUITE_NAMES, SuiteBounds, run_suite


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=SuiteBounds.n_max)
    ap.add_argument("--p-max", type=int, default=SuiteBounds.p_max)
    ap.add_argument("--r-max", type=int, default=SuiteBounds.r_max)
    ap.add_argument("--perturb-beta", action="store_true", help="negative control")
    a = ap.parse_args(argv)
    bounds = SuiteBounds(p_max=a.p_max, r_max=a.r_max, n_max=a.n_max, perturb_beta=a.perturb_beta)

    print("| suite | grid | cases | passed | skipped | seconds | first failure |")
    print("|---|---|---:|---:|---:|---:|---|")
    failed = 0
    for name in SUITE_NAMES:
        start = time.perf_counter()
        rep = run_suite([name], bounds)[0]
        secs = time.perf_counter() - start
        failed += rep.failed
        ff = rep.first_failure
        where = "" if ff is None else f"{ff.name} {ff.params}: {ff.lhs} != {ff.rhs}"
        print(f"| {name} | {rep.grid} | {rep.total} | {rep.passed} | {rep.skipped} | {secs:.2f} | {where} |")
    return 1 if failed else 0


if __name__ == "__main__":
    raise SystemExit(main())
