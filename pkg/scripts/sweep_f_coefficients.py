#!/usr/bin/env python3
"""Sweep small polytopes for negative coefficients in the f-polynomial.

The interesting phenomenon is a negative coefficient strictly below the
leading one (the leading coefficient is c_1 and goes negative already for a
pyramid over the 3-cube).  This scans a catalog of pyramids, prisms, dilates
and products of small seeds and prints every hit.

Usage: python scripts/sweep_f_coefficients.py [--max-pyr R] [--max-dilate T]
"""

from __future__ import annotations

import argparse

from defectpoly import (
    cube,
    dilate,
    f_poly,
    lattice_pyramid,
    prism,
    product,
    simplex,
)


def seeds():
    for d in (1, 2, 3):
        yield f"simplex({d})", simplex(d)
    for d in (2, 3):
        yield f"cube({d})", cube(d)
    yield "prism(simplex(2))", prism(simplex(2))
    yield "simplex(2) x cube(1)", product(simplex(2), cube(1))


def catalog(max_pyr: int, max_dilate: int):
    for name, p in seeds():
        for t in range(1, max_dilate + 1):
            base_name = name if t == 1 else f"{t} * {name}"
            q = p if t == 1 else dilate(p, t)
            cur_name, cur = base_name, q
            for r in range(max_pyr + 1):
                yield cur_name, cur
                cur = lattice_pyramid(cur)
                cur_name = f"pyr({cur_name})"


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-pyr", type=int, default=4,
                    help="how many pyramid iterations per seed (default 4)")
    ap.add_argument("--max-dilate", type=int, default=2,
                    help="largest dilation factor per seed (default 2)")
    args = ap.parse_args()

    hits = 0
    scanned = 0
    for name, p in catalog(args.max_pyr, args.max_dilate):
        scanned += 1
        coeffs = f_poly(p).integer_coeffs()
        below_leading = coeffs[:p.dim]
        if any(c < 0 for c in below_leading):
            hits += 1
            neg = [(i, c) for i, c in enumerate(coeffs) if c < 0]
            print(f"{name}: f = {' '.join(str(c) for c in coeffs)}  "
                  f"negative at degrees {[i for i, _ in neg]}")
    print(f"scanned {scanned} polytopes, {hits} with a negative "
          f"non-leading coefficient")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
