"""Lattice geometry of polytopes and their faces.

All quantities are taken with respect to the lattice induced on each face's
affine hull (the saturation of the vertex-difference lattice), which is the
normalization that makes a unimodular simplex have volume one.  Everything is
exact; lattice point counts come from a depth-first scan with integer bound
propagation, never from a numeric LP.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product as iter_product
from math import gcd

from . import linalg
from .polynomial import Polynomial, interpolate
from .polytope import AffineChart, Face, Polytope, build_chart

__all__ = [
    "chart",
    "normalized_volume",
    "lattice_points",
    "count_lattice_points",
    "count_face_dilate",
    "dilate",
    "ehrhart",
    "is_smooth",
    "width",
    "search_width_one",
]


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _top_face(p: Polytope) -> Face:
    return p.face_lattice.top


def chart(p: Polytope, face: Face | None = None) -> AffineChart:
    """Integer-affine chart of a face's hull, based at its lowest-index vertex."""
    if face is None or face.dim == p.dim:
        return p.chart
    key = ("chart", face.vertex_indices)
    if key not in p._geom_cache:
        pts = [p.vertices[i] for i in face.vertex_indices]
        p._geom_cache[key] = build_chart(pts, pts[0])
    return p._geom_cache[key]


def _face_coords(p: Polytope, face: Face) -> dict[int, tuple[int, ...]]:
    """Chart coordinates of a face's vertices, keyed by vertex index."""
    key = ("coords", face.vertex_indices)
    if key not in p._geom_cache:
        c = chart(p, face)
        p._geom_cache[key] = {i: c.lattice_coords(p.vertices[i])
                              for i in face.vertex_indices}
    return p._geom_cache[key]


def _chart_inequalities(p: Polytope, face: Face) -> list[tuple[int, tuple[int, ...]]]:
    """The face's own facet inequalities, written in its chart coordinates.

    Every facet of a face arises by intersecting it with some polytope facet
    that does not contain it, so no fresh hull computation is needed.
    """
    key = ("ineqs", face.vertex_indices)
    if key in p._geom_cache:
        return p._geom_cache[key]
    c = chart(p, face)
    out = []
    if face.dim == p.dim:
        for a0, a in p.hrep.inequalities:
            # restriction of a primitive ambient normal need not stay
            # primitive in chart coordinates, so reduce here too
            raw = [a0 + _dot(a, c.origin), *(_dot(a, b) for b in c.basis)]
            g = 0
            for x in raw:
                g = gcd(g, x)
            out.append((raw[0] // g, tuple(x // g for x in raw[1:])))
    else:
        face_mask = sum(1 << i for i in face.vertex_indices)
        lattice = p.face_lattice
        for child in lattice.facets_of(face):
            child_mask = sum(1 << i for i in child.vertex_indices)
            for (a0, a), hmask in zip(p.hrep.inequalities, p.facet_vertex_masks):
                if face_mask & hmask == child_mask and face_mask & ~hmask != 0:
                    coeffs = tuple(_dot(a, b) for b in c.basis)
                    raw = [a0 + _dot(a, c.origin), *coeffs]
                    g = 0
                    for x in raw:
                        g = gcd(g, x)
                    out.append((raw[0] // g, tuple(x // g for x in raw[1:])))
                    break
            else:
                raise AssertionError("no polytope facet induces this face cover")
        if len(out) != len(lattice.facets_of(face)):
            raise AssertionError("face inequality count mismatch")
    p._geom_cache[key] = out
    return out


# -- normalized volume ---------------------------------------------------


def _pulling_triangulation(p: Polytope, face: Face, reverse: bool) -> tuple[tuple[int, ...], ...]:
    """Simplices (as vertex index tuples) of the pulling triangulation of a face.

    Each face recursively cones its lowest-index vertex (highest-index when
    `reverse`) over the triangulations of its facets avoiding that vertex.
    """
    key = ("tri", face.vertex_indices, reverse)
    if key in p._geom_cache:
        return p._geom_cache[key]
    vids = face.vertex_indices
    if len(vids) == face.dim + 1:
        result: tuple[tuple[int, ...], ...] = (vids,)
    else:
        pick = max(vids) if reverse else min(vids)
        simplices = []
        for child in p.face_lattice.facets_of(face):
            if pick in child.vertex_indices:
                continue
            for s in _pulling_triangulation(p, child, reverse):
                simplices.append(s + (pick,))
        result = tuple(simplices)
    p._geom_cache[key] = result
    return result


def normalized_volume(p: Polytope, face: Face | None = None, order: str = "lowest") -> int:
    """Lattice-normalized volume of a face: dim! times its chart volume.

    A unimodular simplex has volume 1 and every 0-face has volume 1.  The
    `order` switch selects the pulling vertex order ("lowest" or "highest");
    both must give the same number, which the test suite exploits.
    """
    if order not in ("lowest", "highest"):
        raise ValueError(f"unknown pulling order {order!r}")
    if face is None:
        face = _top_face(p)
    if face.dim == 0:
        return 1
    key = ("lvol", face.vertex_indices, order)
    if key in p._geom_cache:
        return p._geom_cache[key]
    coords = _face_coords(p, face)
    total = 0
    for simplex in _pulling_triangulation(p, face, order == "highest"):
        base = coords[simplex[0]]
        edges = [list(_sub(coords[i], base)) for i in simplex[1:]]
        total += abs(linalg.det(edges))
    p._geom_cache[key] = total
    return total


# -- lattice point enumeration --------------------------------------------


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def _scan(ineqs, bounds, collect: bool):
    """Integer points satisfying c0 + c.y >= 0 within per-coordinate bounds.

    Depth-first with exact interval propagation: at each level the still-free
    coordinates contribute their best-case slack, so infeasible branches are
    cut early and the innermost level needs no point-by-point checks when
    only counting.
    """
    k = len(bounds)
    if k == 0:
        ok = all(c0 >= 0 for c0, _ in ineqs)
        return ([()] if ok else []) if collect else (1 if ok else 0)
    tmax = []
    for _, c in ineqs:
        suffix = [0] * (k + 1)
        for j in range(k - 1, -1, -1):
            lo, hi = bounds[j]
            suffix[j] = suffix[j + 1] + max(c[j] * lo, c[j] * hi)
        tmax.append(suffix)
    cols = [[(i, ineqs[i][1][j]) for i in range(len(ineqs)) if ineqs[i][1][j] != 0]
            for j in range(k)]
    points: list[tuple[int, ...]] = []
    count = 0

    def rec(j: int, partial: list[int], prefix: tuple[int, ...]):
        nonlocal count
        lo, hi = bounds[j]
        for i, (c0, c) in enumerate(ineqs):
            cj = c[j]
            slack = partial[i] + tmax[i][j + 1]
            if cj == 0:
                if slack < 0:
                    return
            elif cj > 0:
                lb = _ceil_div(-slack, cj)
                if lb > lo:
                    lo = lb
            else:
                ub = (slack) // (-cj)
                if ub < hi:
                    hi = ub
        if lo > hi:
            return
        if j == k - 1:
            if collect:
                for y in range(lo, hi + 1):
                    points.append(prefix + (y,))
            else:
                count += hi - lo + 1
            return
        cur = partial[:]
        for i, cj in cols[j]:
            cur[i] += cj * lo
        for y in range(lo, hi + 1):
            rec(j + 1, cur, prefix + (y,) if collect else prefix)
            for i, cj in cols[j]:
                cur[i] += cj
    rec(0, [c0 for c0, _ in ineqs], ())
    return points if collect else count


def count_lattice_points(p: Polytope) -> int:
    """Number of ambient lattice points in the polytope."""
    if p.dim == 0:
        return 1
    ineqs = _chart_inequalities(p, _top_face(p))
    ys = p.vertex_chart_coords
    bounds = [(min(y[j] for y in ys), max(y[j] for y in ys)) for j in range(p.dim)]
    return _scan(ineqs, bounds, collect=False)


def lattice_points(p: Polytope) -> list[tuple[int, ...]]:
    """All lattice points of the polytope, in lexicographic ambient order."""
    if p.dim == 0:
        return [p.vertices[0]]
    c = p.chart
    ineqs = _chart_inequalities(p, _top_face(p))
    ys = p.vertex_chart_coords
    bounds = [(min(y[j] for y in ys), max(y[j] for y in ys)) for j in range(p.dim)]
    pts = []
    for y in _scan(ineqs, bounds, collect=True):
        pts.append(tuple(o + sum(y[i] * c.basis[i][j] for i in range(p.dim))
                         for j, o in enumerate(c.origin)))
    pts.sort()
    return pts


def dilate(p: Polytope, t: int) -> Polytope:
    """The dilation t*P for a positive integer t."""
    if not isinstance(t, int) or t < 1:
        raise ValueError(f"dilation factor must be a positive integer, got {t!r}")
    return Polytope([tuple(t * x for x in v) for v in p.vertices])


def ehrhart(p: Polytope, face: Face | None = None) -> Polynomial:
    """Ehrhart polynomial of a face: t -> #(lattice points of t*F).

    Interpolated exactly from the counts at t = 0 .. dim(F).  Dilating a face
    only rescales the constant term of its chart inequalities, so a single
    facet computation serves every t.
    """
    if face is None:
        face = _top_face(p)
    if face.dim == 0:
        return Polynomial((Fraction(1),))
    key = ("ehrhart", face.vertex_indices)
    if key in p._geom_cache:
        return p._geom_cache[key]
    k = face.dim
    ineqs = _chart_inequalities(p, face)
    coords = list(_face_coords(p, face).values())
    lo = [min(y[j] for y in coords) for j in range(k)]
    hi = [max(y[j] for y in coords) for j in range(k)]
    samples: list[tuple[int, int]] = [(0, 1)]
    for t in range(1, k + 1):
        scaled = [(t * c0, c) for c0, c in ineqs]
        bounds = [(t * lo[j], t * hi[j]) for j in range(k)]
        samples.append((t, _scan(scaled, bounds, collect=False)))
    poly = interpolate(samples)
    p._geom_cache[key] = poly
    return poly


def count_face_dilate(p: Polytope, face: Face, t: int) -> int:
    """Direct lattice point count of t*F, bypassing the Ehrhart polynomial."""
    if t < 0:
        raise ValueError("dilation factor must be nonnegative")
    if t == 0 or face.dim == 0:
        return 1
    k = face.dim
    ineqs = [(t * c0, c) for c0, c in _chart_inequalities(p, face)]
    coords = list(_face_coords(p, face).values())
    bounds = [(t * min(y[j] for y in coords), t * max(y[j] for y in coords))
              for j in range(k)]
    return _scan(ineqs, bounds, collect=False)


# -- smoothness, width ------------------------------------------------------


def is_smooth(p: Polytope) -> bool:
    """Simple, and at every vertex the primitive edge directions form a
    basis of the chart lattice (edge matrix of determinant +-1)."""
    if not p.is_simple():
        return False
    k = p.dim
    if k == 0:
        return True
    coords = p.vertex_chart_coords
    neighbours: dict[int, list[int]] = {i: [] for i in range(p.n_vertices)}
    for edge in p.face_lattice.faces_of_dim(1):
        i, j = edge.vertex_indices
        neighbours[i].append(j)
        neighbours[j].append(i)
    for i, adj in neighbours.items():
        dirs = [linalg.primitive_vector(_sub(coords[j], coords[i])) for j in adj]
        if abs(linalg.det(dirs)) != 1:
            return False
    return True


def width(p: Polytope, w) -> int:
    """Spread max(w.x) - min(w.x) of an integer functional over the vertices."""
    if len(w) != p.ambient_dim:
        raise ValueError("direction has the wrong ambient dimension")
    if all(x == 0 for x in w):
        raise ValueError("width direction must be nonzero")
    vals = [_dot(w, v) for v in p.vertices]
    return max(vals) - min(vals)


def search_width_one(p: Polytope, bound: int) -> tuple[int, ...] | None:
    """First chart-lattice functional with entries in [-bound, bound] along
    which the polytope has width one, or None if the scan finds none.

    The scan is exhaustive over the box and deterministic (lexicographic,
    opposite directions deduplicated), but it is only a bounded heuristic: a
    miss proves nothing beyond the box.  Runtime grows like (2*bound+1)^dim.
    """
    if not isinstance(bound, int) or bound < 1:
        raise ValueError(f"search bound must be a positive integer, got {bound!r}")
    k = p.dim
    if k == 0:
        return None
    coords = p.vertex_chart_coords
    for w in iter_product(range(-bound, bound + 1), repeat=k):
        lead = next((x for x in w if x != 0), None)
        if lead is None or lead < 0:
            continue
        g = 0
        for x in w:
            g = gcd(g, x)
        if g != 1:
            continue
        vals = [_dot(w, y) for y in coords]
        if max(vals) - min(vals) == 1:
            return w
    return None
