"""Lattice polytopes given by integer vertices, with exact facet and face data.

The facet enumeration runs the double description method over the rationals
inside an integer-affine chart of the affine hull, so nothing is ever rounded.
The face lattice is recovered from vertex-facet incidences by the usual
closure construction.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import gcd
from typing import Iterable, Iterator, Sequence

from . import linalg

__all__ = ["AffineChart", "Face", "FaceLattice", "HRep", "Polytope", "build_chart"]


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _primitive_scaled(vec: Sequence[Fraction]) -> list[int]:
    """Primitive integer vector that is a positive rational multiple of vec."""
    mult = 1
    for x in vec:
        mult = mult * x.denominator // gcd(mult, x.denominator)
    ints = [int(x * mult) for x in vec]
    return linalg.primitive_vector(ints)


@dataclass(frozen=True)
class AffineChart:
    """Integer coordinates on the affine hull of a lattice point set.

    `origin` is a lattice point on the hull and `basis` is a basis of the
    saturated difference lattice, so the chart restricts to a bijection
    between Z^d on the hull and Z^k.
    """

    origin: tuple[int, ...]
    basis: tuple[tuple[int, ...], ...]
    _proj: tuple[tuple[Fraction, ...], ...] = field(repr=False)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def ambient_dim(self) -> int:
        return len(self.origin)

    def coords(self, point) -> tuple[Fraction, ...]:
        """Chart coordinates of an ambient point; raises off the affine hull."""
        if len(point) != self.ambient_dim:
            raise ValueError("point has the wrong ambient dimension")
        diff = [Fraction(x) - o for x, o in zip(point, self.origin)]
        y = tuple(_dot(row, diff) for row in self._proj)
        # verify membership: the projector is only a left inverse on the hull
        for j, o in enumerate(self.origin):
            if sum(y[i] * self.basis[i][j] for i in range(self.dim)) != diff[j]:
                raise ValueError(f"point {tuple(point)} is not in the affine hull")
        return y

    def lattice_coords(self, point) -> tuple[int, ...]:
        """Integer chart coordinates; raises if the point is not a chart lattice point."""
        y = self.coords(point)
        if any(c.denominator != 1 for c in y):
            raise ValueError(f"point {tuple(point)} is not in the chart lattice")
        return tuple(int(c) for c in y)

    def point_at(self, coords) -> tuple:
        """Ambient point with the given chart coordinates."""
        if len(coords) != self.dim:
            raise ValueError("coordinate vector has the wrong chart dimension")
        return tuple(o + sum(c * b[j] for c, b in zip(coords, self.basis))
                     for j, o in enumerate(self.origin))


def build_chart(points: Sequence[Sequence[int]], origin: Sequence[int]) -> AffineChart:
    """Chart of the affine hull of `points`, based at `origin`."""
    origin = tuple(int(x) for x in origin)
    diffs = [_sub(p, origin) for p in points]
    diffs = [d for d in diffs if any(d)]
    basis = [tuple(row) for row in linalg.saturate(diffs)]
    k = len(basis)
    if k == 0:
        proj: tuple = ()
    else:
        gram = [[_dot(b1, b2) for b2 in basis] for b1 in basis]
        ginv = linalg.inverse(gram)
        proj = tuple(
            tuple(sum(ginv[i][l] * basis[l][j] for l in range(k)) for j in range(len(origin)))
            for i in range(k)
        )
    return AffineChart(origin, tuple(basis), proj)


@dataclass(frozen=True)
class HRep:
    """Halfspace description: a0 + a.x >= 0 inequalities plus hull equations.

    Inequality and equation normals are primitive integer vectors; equations
    b0 + b.x = 0 cut out the affine hull and are empty for full-dimensional
    polytopes.
    """

    inequalities: tuple[tuple[int, tuple[int, ...]], ...]
    equations: tuple[tuple[int, tuple[int, ...]], ...]


@dataclass(frozen=True)
class Face:
    """A face identified by its (sorted) vertex index set."""

    vertex_indices: tuple[int, ...]
    dim: int


class FaceLattice:
    """All nonempty faces of a polytope, graded by dimension.

    `levels[k]` lists the k-faces in a deterministic order; cover relations
    are stored as the facet ("children") lists of each face.
    """

    def __init__(self, levels, children):
        self.levels: tuple[tuple[Face, ...], ...] = tuple(tuple(l) for l in levels)
        self._children: dict[tuple[int, ...], tuple[Face, ...]] = dict(children)
        self._by_vertices = {f.vertex_indices: f for level in self.levels for f in level}

    @property
    def dim(self) -> int:
        return len(self.levels) - 1

    @property
    def top(self) -> Face:
        return self.levels[-1][0]

    @property
    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(level) for level in self.levels)

    def faces_of_dim(self, k: int) -> list[Face]:
        if k < 0 or k > self.dim:
            return []
        return list(self.levels[k])

    def facets_of(self, face: Face) -> tuple[Face, ...]:
        """The faces covered by `face` (its own facets)."""
        return self._children.get(face.vertex_indices, ())

    def face_with_vertices(self, vertex_indices: Iterable[int]) -> Face | None:
        return self._by_vertices.get(tuple(sorted(vertex_indices)))

    def __iter__(self) -> Iterator[Face]:
        for level in self.levels:
            yield from level

    def __len__(self) -> int:
        return sum(len(level) for level in self.levels)


class Polytope:
    """An immutable lattice polytope stored as its exact vertex list.

    The constructor trusts its input to be the extreme points (constructions
    guarantee this by design); use :meth:`from_vertices` for arbitrary point
    sets, which strips duplicates and non-extreme points.  Derived data
    (facets, face lattice, charts) is computed lazily once and cached; the
    object itself is never mutated afterwards, so sharing between threads is
    harmless.
    """

    def __init__(self, vertices: Sequence[Sequence[int]]):
        rows = []
        for row in vertices:
            entries = []
            for x in row:
                if not isinstance(x, int):
                    raise ValueError(f"vertex entries must be integers, got {x!r}")
                entries.append(int(x))
            rows.append(tuple(entries))
        if not rows:
            raise ValueError("a polytope needs at least one vertex")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("all vertices must have the same length")
        if len(set(rows)) != len(rows):
            raise ValueError("vertex rows must be distinct")
        self.vertices: tuple[tuple[int, ...], ...] = tuple(rows)
        self._geom_cache: dict = {}

    # -- basic shape ----------------------------------------------------

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def ambient_dim(self) -> int:
        return len(self.vertices[0])

    @cached_property
    def chart(self) -> AffineChart:
        """Chart of the affine hull, based at the first vertex."""
        return build_chart(self.vertices, self.vertices[0])

    @cached_property
    def dim(self) -> int:
        return self.chart.dim

    @cached_property
    def vertex_chart_coords(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self.chart.lattice_coords(v) for v in self.vertices)

    def __eq__(self, other):
        return isinstance(other, Polytope) and self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    def __repr__(self):
        return f"Polytope(n_vertices={self.n_vertices}, ambient_dim={self.ambient_dim})"

    # -- construction from untrusted points -------------------------------

    @classmethod
    def from_vertices(cls, rows: Sequence[Sequence[int]]) -> "Polytope":
        """Polytope spanned by arbitrary lattice points.

        Duplicate rows and non-extreme points are dropped (with a warning);
        the surviving rows keep their input order.
        """
        seen = set()
        pts = []
        dupes = 0
        for row in rows:
            t = tuple(int(x) for x in row)
            if t in seen:
                dupes += 1
                continue
            seen.add(t)
            pts.append(t)
        if not pts:
            raise ValueError("a polytope needs at least one vertex")
        hull = cls(pts)  # validates shapes; extremality checked next
        k = hull.dim
        if k == 0 or len(pts) == k + 1:
            kept = pts  # a point, or a simplex: every row is extreme
            dropped = 0
        else:
            ys = hull.vertex_chart_coords
            ineqs = _dd_facets(ys, k)
            kept = []
            for p, y in zip(pts, ys):
                tight = [c for c0, c in ineqs if c0 + _dot(c, y) == 0]
                if linalg.rank(tight) == k:
                    kept.append(p)
            dropped = len(pts) - len(kept)
        if dupes or dropped:
            warnings.warn(
                f"dropped {dupes} duplicate and {dropped} non-extreme input point(s)",
                stacklevel=2,
            )
        if kept is pts and dupes == 0:
            return hull
        return cls(kept)

    # -- halfspace description --------------------------------------------

    @cached_property
    def hrep(self) -> HRep:
        """Facet inequalities and affine-hull equations, exact and primitive."""
        d = self.ambient_dim
        k = self.dim
        v0 = self.vertices[0]
        equations = []
        if k < d:
            diffs = [list(_sub(v, v0)) for v in self.vertices[1:]]
            if diffs:
                sf = linalg.snf(diffs)
                r = sum(1 for i in range(min(len(sf.s), d)) if sf.s[i][i] != 0)
                kernel = [[sf.v[i][j] for i in range(d)] for j in range(r, d)]
            else:
                kernel = linalg.identity(d)
            canon = linalg.hnf(kernel).h
            for b in canon:
                if any(b):
                    equations.append((-_dot(b, v0), tuple(b)))
            equations.sort()
            if len(equations) != d - k:
                raise AssertionError("affine hull equation count mismatch")
        inequalities = []
        if k > 0:
            chart = self.chart
            for c0, c in _dd_facets(self.vertex_chart_coords, k):
                # lift the chart normal tangentially back to ambient coordinates
                a = [sum(Fraction(c[i]) * chart._proj[i][j] for i in range(k))
                     for j in range(d)]
                a0 = Fraction(c0) - _dot(a, chart.origin)
                scaled = _primitive_scaled([a0] + a)
                inequalities.append((scaled[0], tuple(scaled[1:])))
            inequalities.sort()
        return HRep(tuple(inequalities), tuple(equations))

    def contains(self, point) -> bool:
        """Exact membership test for a rational ambient point."""
        if len(point) != self.ambient_dim:
            raise ValueError("point has the wrong ambient dimension")
        pt = [Fraction(x) for x in point]
        rep = self.hrep
        return all(b0 + _dot(b, pt) == 0 for b0, b in rep.equations) and \
            all(a0 + _dot(a, pt) >= 0 for a0, a in rep.inequalities)

    @cached_property
    def facet_vertex_masks(self) -> tuple[int, ...]:
        """Bitmask of incident vertices for each facet inequality, in order."""
        masks = []
        for a0, a in self.hrep.inequalities:
            m = 0
            for i, v in enumerate(self.vertices):
                if a0 + _dot(a, v) == 0:
                    m |= 1 << i
            masks.append(m)
        return tuple(masks)

    # -- face lattice ------------------------------------------------------

    @cached_property
    def face_lattice(self) -> FaceLattice:
        return _build_face_lattice(self)

    @cached_property
    def f_vector(self) -> tuple[int, ...]:
        return self.face_lattice.f_vector

    def faces_of_dim(self, k: int) -> list[Face]:
        return self.face_lattice.faces_of_dim(k)

    def is_simple(self) -> bool:
        """True when every vertex lies on exactly dim edges."""
        if self.dim == 0:
            return True
        degree = [0] * self.n_vertices
        for edge in self.face_lattice.faces_of_dim(1):
            for i in edge.vertex_indices:
                degree[i] += 1
        return all(deg == self.dim for deg in degree)


def _dd_facets(points: Sequence[tuple[int, ...]], k: int) -> list[tuple[int, tuple[int, ...]]]:
    """Facet inequalities (c0, c) of a full-dimensional lattice point set.

    Double description on the polar side: the homogenized points (1, y) act
    as constraints, and the extreme rays of the resulting cone are exactly
    the facets c0 + c.y >= 0 of the convex hull.  Adjacency of rays is decided
    by the standard combinatorial zero-set test.
    """
    rays = [(1,) + tuple(p) for p in points]
    m = k + 1
    # greedy linearly independent subset to seed a pointed simplicial cone
    reduced: list[tuple[int, list[Fraction]]] = []
    seed: list[int] = []
    for idx, r in enumerate(rays):
        vec = [Fraction(x) for x in r]
        for lead, row in reduced:
            if vec[lead] != 0:
                f = vec[lead] / row[lead]
                vec = [x - f * y for x, y in zip(vec, row)]
        lead = next((i for i, x in enumerate(vec) if x != 0), None)
        if lead is not None:
            reduced.append((lead, vec))
            seed.append(idx)
            if len(seed) == m:
                break
    if len(seed) != m:
        raise AssertionError("point set is not full-dimensional in its chart")
    order = seed + [i for i in range(len(rays)) if i not in seed]

    inv = linalg.inverse([list(rays[i]) for i in seed])
    duals: list[tuple[list[int], int]] = []  # (ray vector, zero-set bitmask)
    for j in range(m):
        col = [inv[l][j] for l in range(m)]
        duals.append((_primitive_scaled(col), ((1 << m) - 1) ^ (1 << j)))

    for pos in range(m, len(order)):
        r = rays[order[pos]]
        vals = [_dot(r, a) for a, _ in duals]
        if min(vals) >= 0:
            duals = [(a, z | (1 << pos) if vals[i] == 0 else z)
                     for i, (a, z) in enumerate(duals)]
            continue
        positive = [(a, z, v) for (a, z), v in zip(duals, vals) if v > 0]
        zero = [(a, z, v) for (a, z), v in zip(duals, vals) if v == 0]
        negative = [(a, z, v) for (a, z), v in zip(duals, vals) if v < 0]
        fresh = []
        for ap, zp, vp in positive:
            for an, zn, vn in negative:
                zc = zp & zn
                if zc.bit_count() < k - 1:
                    continue
                adjacent = True
                for ao, zo, _ in positive + zero + negative:
                    if ao is ap or ao is an:
                        continue
                    if zc & zo == zc:
                        adjacent = False
                        break
                if not adjacent:
                    continue
                comb = [vp * x_n - vn * x_p for x_p, x_n in zip(ap, an)]
                fresh.append((linalg.primitive_vector(comb), zc | (1 << pos)))
        duals = [(a, z | (1 << pos)) for a, z, v in zero] + \
                [(a, z) for a, z, v in positive] + fresh
    return sorted((a[0], tuple(a[1:])) for a, _ in duals)


def _build_face_lattice(p: Polytope) -> FaceLattice:
    n = p.n_vertices
    dim = p.dim
    if dim == 0:
        top = Face((0,), 0)
        return FaceLattice([[top]], {})
    fmasks = p.facet_vertex_masks
    full = (1 << n) - 1

    def closure(mask: int) -> int:
        c = full
        for fm in fmasks:
            if mask & ~fm == 0:
                c &= fm
        return c

    def mask_dim(mask: int) -> int:
        idx = [i for i in range(n) if mask >> i & 1]
        base = p.vertex_chart_coords[idx[0]]
        return linalg.rank([_sub(p.vertex_chart_coords[i], base) for i in idx[1:]])

    for i in range(n):
        if closure(1 << i) != 1 << i:
            raise AssertionError("an input row is not a vertex of the hull")

    levels_masks: list[list[int]] = [[1 << i for i in range(n)]]
    children_masks: dict[int, set[int]] = {}
    current = levels_masks[0]
    for k in range(dim):
        nxt: set[int] = set()
        for fmask in current:
            cands = {closure(fmask | (1 << v)) for v in range(n) if not fmask >> v & 1}
            minimal = [c for c in cands
                       if not any(o != c and o & ~c == 0 for o in cands)]
            for g in minimal:
                children_masks.setdefault(g, set()).add(fmask)
                nxt.add(g)
        current = sorted(nxt)
        for g in current:
            if mask_dim(g) != k + 1:
                raise AssertionError("face lattice is not graded by rank")
        levels_masks.append(current)
    if current != [full]:
        raise AssertionError("face lattice closure did not reach the whole polytope")

    def mask_face(mask: int, k: int) -> Face:
        return Face(tuple(i for i in range(n) if mask >> i & 1), k)

    levels = []
    by_mask: dict[int, Face] = {}
    for k, masks in enumerate(levels_masks):
        level = sorted((mask_face(m, k) for m in masks), key=lambda f: f.vertex_indices)
        levels.append(level)
        for f in level:
            by_mask[sum(1 << i for i in f.vertex_indices)] = f
    children = {}
    for g_mask, kids in children_masks.items():
        face = by_mask[g_mask]
        children[face.vertex_indices] = tuple(
            sorted((by_mask[m] for m in kids), key=lambda f: f.vertex_indices))
    return FaceLattice(levels, children)
