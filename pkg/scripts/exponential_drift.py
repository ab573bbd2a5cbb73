#!/usr/bin/env python3
"""Norm drift of the truncated group exponential vs parameter size.

For a fixed random field, applies exp(iX) at increasing parameter norms
and truncation orders and tabulates the relative l2-norm drift, showing
where the Taylor truncation stops being unitary in practice.

Usage: python scripts/exponential_drift.py [--bandwidth N] [--seed S]
"""

import argparse
import math

import numpy as np

from wzernike.algebra import group_exponential
from wzernike.selfcheck import random_field


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--bandwidth", type=int, default=6)
    ap.add_argument("--seed", type=int, default=17)
    args = ap.parse_args()

    rng = np.random.default_rng(args.seed)
    f = random_field(rng, args.bandwidth)
    scales = (0.01, 0.05, 0.1, 0.2, 0.5)
    orders = (4, 8, 12, 16)

    print(f"{'|a|':>6}  " + "  ".join(f"K={k:<2}       " for k in orders))
    for s in scales:
        params = tuple(s * x / math.sqrt(3) for x in (1.0, -0.7, 0.4))
        drifts = []
        for k in orders:
            g = group_exponential("A", params, k, f)
            drifts.append(abs(g.l2_norm() / f.l2_norm() - 1.0))
        print(f"{s:>6.2f}  " + "  ".join(f"{d:.3e}" for d in drifts))


if __name__ == "__main__":
    main()
