#!/usr/bin/env python3
"""Render |W_{u,v}| for every mode with u+v <= N as PGM images.

Usage: python scripts/mode_gallery.py [--bandwidth N] [--size S] [--outdir DIR]
"""

import argparse
from pathlib import Path

from wzernike.basis import modes_upto
from wzernike.io import write_pgm
from wzernike.transform import CoeffField, polar_to_raster


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--bandwidth", type=int, default=4)
    ap.add_argument("--size", type=int, default=128)
    ap.add_argument("--outdir", default="gallery")
    args = ap.parse_args()

    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    for mode in modes_upto(args.bandwidth):
        img = polar_to_raster(CoeffField.basis(mode.u, mode.v),
                              args.size, args.size)
        path = outdir / f"mode_u{mode.u}_v{mode.v}.pgm"
        write_pgm(path, img)
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
