"""Sweep every catalog array over a (p, r) grid and compare the
generating-function one-pth arrays against direct index extraction.

    python3 scripts/oracle_sweep.py --order 24 --p-max 4 --r-max 3
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from riordankit import catalog
from riordankit.onepth import OnePthSpec, Orientation, first_mismatch, onepth, oracle, parent_order_required


@dataclass(frozen=True)
class SweepConfig:
    order: int = 24
    p_max: int = 4
    r_max: int = 3
    arrays: tuple[str, ...] = catalog.ARRAY_NAMES


def sweep(cfg: SweepConfig):
    rows = []
    for name in cfg.arrays:
        for orientation in Orientation:
            for p in range(1, cfg.p_max + 1):
                for r in range(cfg.r_max + 1):
                    M = (cfg.order - r) // p
                    if M < 0:
                        continue
                    start = time.perf_counter()
                    R = catalog.array(name, parent_order_required(p, r, M))
                    spec = OnePthSpec(p, r, orientation)
                    bad = first_mismatch(onepth(R, spec, order=M).matrix(M + 1), oracle(R, spec, M + 1))
                    rows.append((name, orientation.value, p, r, M + 1, bad, time.perf_counter() - start))
    return rows


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--order", type=int, default=SweepConfig.order)
    ap.add_argument("--p-max", type=int, default=SweepConfig.p_max)
    ap.add_argument("--r-max", type=int, default=SweepConfig.r_max)
    ap.add_argument("--array", action="append", choices=catalog.ARRAY_NAMES)
    a = ap.parse_args(argv)
    cfg = SweepConfig(a.order, a.p_max, a.r_max, tuple(a.array or catalog.ARRAY_NAMES))

    failures = 0
    print(f"{'array':<14} {'orient':<10} {'p':>2} {'r':>2} {'rows':>4} {'ms':>7}  result")
    for name, orient, p, r, rows, bad, secs in sweep(cfg):
        failures += bad is not None
        verdict = "MATCH" if bad is None else "MISMATCH at ({},{}): {} vs {}".format(*bad)
        print(f"{name:<14} {orient:<10} {p:>2} {r:>2} {rows:>4} {secs * 1e3:7.1f}  {verdict}")
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
