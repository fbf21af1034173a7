#!/usr/bin/env python3
"""Enumerate the finite truncated groups over the small quotient algebras and
report orders, lower central series, derived series, and filtration bounds.

Usage: python3 scripts/sweep_finite_groups.py [--p P] [--max-order N]
"""

import argparse
import sys
import time
from dataclasses import dataclass, field

sys.path.insert(0, "src")

from steenrodgroup.grouptheory import (
    check_filtration_bounds,
    derived_series,
    enumerate_group,
    ev_subgroup_series,
    lower_central_series,
)
from steenrodgroup.hopf import milnor_quotient


@dataclass
class SweepConfig:
    grid: list = field(default_factory=lambda: [(2, 1), (2, 2), (3, 0), (3, 1)])
    prime: int | None = None
    limit: int = 100_000


def run(cfg: SweepConfig) -> int:
    failed = 0
    for p, n in cfg.grid:
        if cfg.prime and p != cfg.prime:
            continue
        hp = milnor_quotient(p, n)
        t0 = time.monotonic()
        G = enumerate_group(hp.algebra, n, p, limit=cfg.limit)
        lcs = lower_central_series(G)
        dser = derived_series(G)
        bounds_ok = check_filtration_bounds(G)
        dt = time.monotonic() - t0
        print(
            f"p={p} n={n} {hp.label:8s} order={G.order:6d} "
            f"lcs={lcs.sizes} class={lcs.length} (bound {lcs.bound}, ok={lcs.ok}) "
            f"derived={dser.sizes} filtration_ok={bounds_ok} [{dt:.2f}s]"
        )
        if p != 2:
            ev = ev_subgroup_series(hp.algebra, n, p)
            print(
                f"          eps-free subgroup: sizes={ev.sizes} "
                f"class={ev.length} (bound {ev.bound}, ok={ev.ok})"
            )
            if ev.ok is False:
                failed += 1
        if lcs.ok is False or not bounds_ok:
            failed += 1
    return 1 if failed else 0


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p", type=int, default=None, help="restrict to one prime")
    ap.add_argument("--limit", type=int, default=100_000)
    args = ap.parse_args()
    return run(SweepConfig(prime=args.p, limit=args.limit))


if __name__ == "__main__":
    raise SystemExit(main())
