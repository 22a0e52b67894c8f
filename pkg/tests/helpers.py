"""Shared oracles and the polytope corpus for the test suite.

The oracles are deliberately written by a different route than the library
code they check: determinants by cofactor expansion, rank from minors,
facets by exhaustive supporting-hyperplane search, face counts from closures
of facet-mask intersections, and point counts from plain box scans.  None of
them import anything from defectpoly beyond the public constructors.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product as iter_product
from math import gcd

from defectpoly import (
    Polytope,
    cayley,
    cube,
    dilate,
    hypersimplex,
    lattice_pyramid,
    prism,
    product,
    r_fold_pyramid,
    simplex,
    unimodular_image,
)

# ---------------------------------------------------------------- oracles


def det_cofactor(a):
    n = len(a)
    if n == 0:
        return 1
    if n == 1:
        return a[0][0]
    total = 0
    for j in range(n):
        if a[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in a[1:]]
        term = a[0][j] * det_cofactor(minor)
        total += term if j % 2 == 0 else -term
    return total


def rank_by_minors(a):
    """Largest k with a nonzero k x k minor; fine for shapes up to ~4x5."""
    m = len(a)
    n = len(a[0]) if m else 0
    for k in range(min(m, n), 0, -1):
        for rows in combinations(range(m), k):
            for cols in combinations(range(n), k):
                sub = [[a[i][j] for j in cols] for i in rows]
                if det_cofactor(sub) != 0:
                    return k
    return 0


def nullspace(a):
    """Basis of the rational right kernel, by Gauss-Jordan over Fractions."""
    m = len(a)
    n = len(a[0]) if m else 0
    mat = [[Fraction(x) for x in row] for row in a]
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if mat[i][c] != 0), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        pv = mat[r][c]
        mat[r] = [x / pv for x in mat[r]]
        for i in range(m):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    basis = []
    for fc in (c for c in range(n) if c not in pivots):
        v = [Fraction(0)] * n
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -mat[i][fc]
        basis.append(v)
    return basis


def affine_rank(points):
    """Dimension of the affine hull of integer points (0 for a single point)."""
    if len(points) <= 1:
        return 0
    base = points[0]
    diffs = [[x - b for x, b in zip(p, base)] for p in points[1:]]
    return rank_by_minors(diffs)


def _primitive_int(vec):
    den = 1
    for x in vec:
        den = den * x.denominator // gcd(den, x.denominator)
    ivec = [int(x * den) for x in vec]
    g = 0
    for x in ivec:
        g = gcd(g, x)
    return [x // g for x in ivec]


def facets_by_exhaustion(p):
    """Facet inequalities of P in chart coordinates, by brute force.

    Tries the hyperplane through every dim-sized vertex subset, keeps those
    supporting the polytope and tight on an affinely (dim-1)-dimensional
    vertex set.  Returns the same sorted (c0, c) shape as the library's
    per-face chart inequalities.
    """
    k = p.dim
    ys = p.vertex_chart_coords
    n = len(ys)
    found = set()
    for sub in combinations(range(n), k):
        rows = [(1,) + ys[i] for i in sub]
        kern = nullspace(rows)
        if len(kern) != 1:
            continue
        vec = _primitive_int(kern[0])
        c0, c = vec[0], vec[1:]
        vals = [c0 + sum(a * y for a, y in zip(c, yy)) for yy in ys]
        if all(v <= 0 for v in vals):
            c0, c = -c0, [-a for a in c]
            vals = [-v for v in vals]
        elif not all(v >= 0 for v in vals):
            continue
        tight = [ys[i] for i, v in enumerate(vals) if v == 0]
        if affine_rank(tight) == k - 1:
            found.add((c0, tuple(c)))
    return sorted(found)


def f_vector_by_closures(p):
    """f-vector from scratch: faces are the nonempty intersections of facet
    vertex sets (plus the whole polytope), dimensions from affine rank."""
    masks = p.facet_vertex_masks
    n = p.n_vertices
    full = (1 << n) - 1
    closed = {full}
    frontier = [full]
    while frontier:
        nxt = []
        for s in frontier:
            for m in masks:
                t = s & m
                if t and t not in closed:
                    closed.add(t)
                    nxt.append(t)
        frontier = nxt
    fv = [0] * (p.dim + 1)
    for s in closed:
        pts = [p.vertex_chart_coords[i] for i in range(n) if s >> i & 1]
        fv[affine_rank(pts)] += 1
    return tuple(fv)


def points_by_box_scan(p):
    """All lattice points of P by scanning the ambient bounding box."""
    d = p.ambient_dim
    lo = [min(v[j] for v in p.vertices) for j in range(d)]
    hi = [max(v[j] for v in p.vertices) for j in range(d)]
    return [x for x in iter_product(*(range(a, b + 1) for a, b in zip(lo, hi)))
            if p.contains(x)]


# ------------------------------------------------- randomized ingredients


def random_unimodular(rng, d, steps=6):
    """Unimodular integer matrix from random shear, swap and reflection moves."""
    u = [[1 if i == j else 0 for j in range(d)] for i in range(d)]
    if d == 0:
        return u
    for _ in range(steps):
        i = rng.randrange(d)
        j = rng.randrange(d)
        if i != j:
            c = rng.choice((-2, -1, 1, 2))
            u[i] = [x + c * y for x, y in zip(u[i], u[j])]
    if d > 1 and rng.random() < 0.5:
        i, j = rng.sample(range(d), 2)
        u[i], u[j] = u[j], u[i]
    if rng.random() < 0.5:
        i = rng.randrange(d)
        u[i] = [-x for x in u[i]]
    return u


def random_shift(rng, d):
    return [rng.randint(-9, 9) for _ in range(d)]


# ----------------------------------------------------------------- corpus


def small_corpus():
    """Around a hundred small labeled polytopes covering every construction."""
    import random

    seg = cube(1)
    out = [
        ("point in R^0", Polytope([()])),
        ("point in R^1", Polytope([(4,)])),
        ("point in R^3", Polytope([(1, -2, 5)])),
        ("shifted segment", Polytope([(-3,), (2,)])),
        ("skew edge", Polytope([(0, 0), (2, 2)])),
        ("simple non-smooth triangle", Polytope([(0, 0), (1, 0), (0, 3)])),
    ]
    for d in range(1, 6):
        out.append((f"simplex({d})", simplex(d)))
    for d in range(1, 5):
        out.append((f"cube({d})", cube(d)))
    for k in range(2, 7):
        out.append((f"segment[0,{k}]", dilate(seg, k)))
    for n in range(3, 6):
        for k in range(1, n):
            out.append((f"hypersimplex({k},{n})", hypersimplex(k, n)))
    out.append(("hypersimplex(1,6)", hypersimplex(1, 6)))
    out.append(("hypersimplex(5,6)", hypersimplex(5, 6)))

    out.append(("2*simplex(2)", dilate(simplex(2), 2)))
    out.append(("3*simplex(2)", dilate(simplex(2), 3)))
    out.append(("2*simplex(3)", dilate(simplex(3), 2)))
    out.append(("2*cube(2)", dilate(cube(2), 2)))
    out.append(("3*cube(2)", dilate(cube(2), 3)))
    out.append(("2*cube(3)", dilate(cube(3), 2)))

    for d in range(1, 4):
        out.append((f"prism(simplex({d}))", prism(simplex(d))))
    out.append(("prism(cube(2))", prism(cube(2))))
    out.append(("prism(2*simplex(2))", prism(dilate(simplex(2), 2))))
    out.append(("prism(prism(simplex(2)))", prism(prism(simplex(2)))))

    for d in range(1, 4):
        out.append((f"pyr(simplex({d}))", lattice_pyramid(simplex(d))))
    out.append(("pyr(cube(2))", lattice_pyramid(cube(2))))
    out.append(("pyr(cube(3))", lattice_pyramid(cube(3))))
    out.append(("pyr(prism(simplex(2)))", lattice_pyramid(prism(simplex(2)))))
    out.append(("pyr(segment[0,2])", lattice_pyramid(dilate(seg, 2))))
    out.append(("pyr(segment[0,3])", lattice_pyramid(dilate(seg, 3))))
    out.append(("pyr(2*cube(2))", lattice_pyramid(dilate(cube(2), 2))))
    out.append(("pyr(hypersimplex(2,4))", lattice_pyramid(hypersimplex(2, 4))))
    out.append(("pyr^2(simplex(2))", r_fold_pyramid(simplex(2), 2)))
    out.append(("pyr^2(cube(2))", r_fold_pyramid(cube(2), 2)))
    out.append(("pyr^2(cube(3))", r_fold_pyramid(cube(3), 2)))
    out.append(("pyr^3(cube(2))", r_fold_pyramid(cube(2), 3)))

    for a, b in iter_product((1, 2, 3), repeat=2):
        out.append((f"box[{a},{b}]", product(dilate(seg, a), dilate(seg, b))))
    for a, b, c in iter_product((1, 2), repeat=3):
        out.append((f"box[{a},{b},{c}]",
                    product(product(dilate(seg, a), dilate(seg, b)), dilate(seg, c))))
    for a, b, c in ((1, 1, 3), (1, 2, 3), (2, 2, 3), (1, 3, 3), (2, 3, 3), (3, 3, 3)):
        out.append((f"box[{a},{b},{c}]",
                    product(product(dilate(seg, a), dilate(seg, b)), dilate(seg, c))))
    out.append(("simplex(2) x seg", product(simplex(2), seg)))
    out.append(("simplex(2) x simplex(2)", product(simplex(2), simplex(2))))
    out.append(("cube(2) x simplex(2)", product(cube(2), simplex(2))))
    out.append(("simplex(3) x seg", product(simplex(3), seg)))

    pt = Polytope([(0,)])
    out.append(("cayley(pt, pt)", cayley([pt, pt])))
    out.append(("cayley(seg, pt)", cayley([seg, pt])))
    out.append(("cayley(seg, seg)", cayley([seg, seg])))
    out.append(("cayley(seg, seg, seg)", cayley([seg, seg, seg])))
    out.append(("cayley(seg, seg, pt, pt)", cayley([seg, seg, pt, pt])))
    out.append(("cayley(seg, 2seg, 3seg)",
                cayley([seg, dilate(seg, 2), dilate(seg, 3)])))
    out.append(("cayley(simplex(2), 2*simplex(2))",
                cayley([simplex(2), dilate(simplex(2), 2)])))
    out.append(("cayley(cube(2), cube(2))", cayley([cube(2), cube(2)])))
    out.append(("pyr(cayley(seg, seg))", lattice_pyramid(cayley([seg, seg]))))

    rng = random.Random(20240817)
    bases = [
        ("simplex(2)", simplex(2)),
        ("cube(2)", cube(2)),
        ("simplex(3)", simplex(3)),
        ("cube(3)", cube(3)),
        ("prism(simplex(2))", prism(simplex(2))),
        ("hypersimplex(2,4)", hypersimplex(2, 4)),
    ]
    for name, base in bases:
        for j in range(2):
            d = base.ambient_dim
            u = random_unimodular(rng, d)
            s = random_shift(rng, d)
            out.append((f"image{j} of {name}", unimodular_image(base, u, s)))

    return out
