"""Print column 0 of the horizontal (p, r) arrays of each catalog array.

For p = 2, r = 0 these are the central entries d[2n, n]: central binomial
coefficients for Pascal, central Delannoy numbers for Delannoy, and so on.
Each column is cross-checked against the parent entries it should equal.
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from riordankit import catalog
from riordankit.onepth import horizontal_onepth, parent_order_required
from riordankit.series import format_series


@dataclass(frozen=True)
class CentralConfig:
    terms: int = 10
    p: int = 2
    r: int = 0


def central_column(name: str, cfg: CentralConfig):
    M = cfg.terms - 1
    R = catalog.array(name, parent_order_required(cfg.p, cfg.r, M))
    col = horizontal_onepth(R, cfg.p, cfg.r, order=M).column(0)
    direct = [R.entry(cfg.p * n + cfg.r, (cfg.p - 1) * n + cfg.r) for n in range(cfg.terms)]
    return col, list(col.coeffs) == direct


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--terms", type=int, default=CentralConfig.terms)
    ap.add_argument("-p", type=int, default=CentralConfig.p)
    ap.add_argument("-r", type=int, default=CentralConfig.r)
    a = ap.parse_args(argv)
    cfg = CentralConfig(a.terms, a.p, a.r)

    ok = True
    for name in catalog.ARRAY_NAMES:
        col, same = central_column(name, cfg)
        ok &= same
        print(f"{name:<14} {format_series(col)}  [{'ok' if same else 'DIFFERS'}]")
    return 0 if ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
