"""Standard ways of building lattice polytopes, and lattice equivalence.

Every constructor emits the exact vertex set, so the trusted Polytope
constructor applies; nothing here goes through the extreme-point filter.
"""

from __future__ import annotations

import os
from fractions import Fraction
from itertools import combinations, product as iter_product
from typing import Sequence

from . import linalg
from .polytope import Polytope

__all__ = [
    "VertexCapError",
    "simplex",
    "cube",
    "prism",
    "lattice_pyramid",
    "r_fold_pyramid",
    "hypersimplex",
    "cayley",
    "product",
    "unimodular_image",
    "lattice_equivalent",
]

VERTEX_CAP_ENV = "DEFECTPOLY_VERTEX_CAP"
DEFAULT_VERTEX_CAP = 10


class VertexCapError(RuntimeError):
    """Raised when an exhaustive search would exceed the vertex budget."""


def simplex(d: int) -> Polytope:
    """Standard d-simplex conv{0, e_1, ..., e_d}; d = 0 gives a single point."""
    if not isinstance(d, int) or d < 0:
        raise ValueError(f"simplex dimension must be a nonnegative integer, got {d!r}")
    rows = [tuple(0 for _ in range(d))]
    rows += [tuple(1 if j == i else 0 for j in range(d)) for i in range(d)]
    return Polytope(rows)


def cube(d: int) -> Polytope:
    """0/1 cube with 2^d vertices."""
    if not isinstance(d, int) or d < 1:
        raise ValueError(f"cube dimension must be a positive integer, got {d!r}")
    return Polytope(list(iter_product((0, 1), repeat=d)))


def product(p: Polytope, q: Polytope) -> Polytope:
    """Cartesian product, coordinates of p first."""
    return Polytope([v + w for v in p.vertices for w in q.vertices])


def prism(p: Polytope) -> Polytope:
    """Prism conv(P x {0} union P x {1})."""
    return product(p, cube(1))


def lattice_pyramid(p: Polytope) -> Polytope:
    """Pyramid: P embedded at height 0 plus the apex (v_0, 1)."""
    rows = [v + (0,) for v in p.vertices]
    rows.append(p.vertices[0] + (1,))
    return Polytope(rows)


def r_fold_pyramid(p: Polytope, r: int) -> Polytope:
    """lattice_pyramid applied r times; r = 0 returns p unchanged."""
    if not isinstance(r, int) or r < 0:
        raise ValueError(f"pyramid count must be a nonnegative integer, got {r!r}")
    for _ in range(r):
        p = lattice_pyramid(p)
    return p


def hypersimplex(k: int, n: int) -> Polytope:
    """All 0/1 vectors of length n with exactly k ones; requires 1 <= k <= n-1."""
    if not isinstance(k, int) or not isinstance(n, int) or not 1 <= k <= n - 1:
        raise ValueError(f"hypersimplex needs 1 <= k <= n-1, got k={k!r}, n={n!r}")
    rows = []
    for ones in combinations(range(n), k):
        rows.append(tuple(1 if i in ones else 0 for i in range(n)))
    return Polytope(rows)


def cayley(factors: Sequence[Polytope]) -> Polytope:
    """Cayley polytope conv union_j (Q_j x {e_j}) of factors in a common R^m.

    With k+1 factors the result lives in R^(m+k+1); each marker direction e_j
    has width one across it.
    """
    if not factors:
        raise ValueError("cayley needs at least one factor")
    m = factors[0].ambient_dim
    if any(q.ambient_dim != m for q in factors):
        raise ValueError("cayley factors must share an ambient dimension")
    k1 = len(factors)
    rows = []
    for j, q in enumerate(factors):
        marker = tuple(1 if i == j else 0 for i in range(k1))
        rows += [v + marker for v in q.vertices]
    return Polytope(rows)


def unimodular_image(p: Polytope, u: Sequence[Sequence[int]], s: Sequence[int]) -> Polytope:
    """Image x -> U x + s under a unimodular integer matrix and a translation."""
    d = p.ambient_dim
    if len(u) != d or any(len(row) != d for row in u):
        raise ValueError("transformation matrix shape does not match the ambient dimension")
    if len(s) != d:
        raise ValueError("translation length does not match the ambient dimension")
    if abs(linalg.det(u)) != 1:
        raise ValueError("transformation matrix is not unimodular")
    rows = [tuple(linalg.mat_vec(u, list(v))[i] + s[i] for i in range(d)) for v in p.vertices]
    return Polytope(rows)


def _vertex_degrees(p: Polytope) -> list[int]:
    deg = [0] * p.n_vertices
    for edge in p.face_lattice.faces_of_dim(1):
        for i in edge.vertex_indices:
            deg[i] += 1
    return deg


def _adjacency(p: Polytope) -> list[int]:
    adj = [0] * p.n_vertices
    for edge in p.face_lattice.faces_of_dim(1):
        i, j = edge.vertex_indices
        adj[i] |= 1 << j
        adj[j] |= 1 << i
    return adj


def lattice_equivalent(p: Polytope, q: Polytope) -> bool:
    """Whether some unimodular affine map carries p onto q.

    Exhaustive vertex-bijection search (factorial worst case), pruned by
    vertex degrees, edge adjacency and incremental affine consistency.  To
    keep runaway inputs out, polytopes with more vertices than the cap
    (DEFECTPOLY_VERTEX_CAP, default 10) raise VertexCapError.
    """
    cap = int(os.environ.get(VERTEX_CAP_ENV, DEFAULT_VERTEX_CAP))
    if p.n_vertices > cap or q.n_vertices > cap:
        raise VertexCapError(
            f"lattice_equivalent is exhaustive; {max(p.n_vertices, q.n_vertices)} "
            f"vertices exceed the cap of {cap} (raise {VERTEX_CAP_ENV} to override)")
    if p.n_vertices != q.n_vertices or p.dim != q.dim:
        return False
    n = p.n_vertices
    k = p.dim
    if k == 0:
        return True
    pc = p.vertex_chart_coords
    qc = q.vertex_chart_coords
    pdeg, qdeg = _vertex_degrees(p), _vertex_degrees(q)
    if sorted(pdeg) != sorted(qdeg):
        return False
    padj, qadj = _adjacency(p), _adjacency(q)

    # affine dependency structure of the source points, in index order:
    # homogenized rows (1, y) make affine dependence plain linear dependence
    hom = [(1,) + y for y in pc]
    independent: list[int] = []
    deps: list[tuple[list[int], list[Fraction]] | None] = []
    for j in range(n):
        if len(independent) < k + 1:
            sub = [list(hom[i]) for i in independent]
            if linalg.rank(sub + [list(hom[j])]) > len(independent):
                independent.append(j)
                deps.append(None)
                continue
        coeffs = linalg.solve(linalg.transpose([list(hom[i]) for i in independent]),
                              list(hom[j]))
        assert coeffs is not None
        deps.append((independent[:], coeffs))

    def admissible(j: int, cand: int, sigma: list[int], used: int) -> bool:
        if used >> cand & 1:
            return False
        if pdeg[j] != qdeg[cand]:
            return False
        for i in range(j):
            if (padj[j] >> i & 1) != (qadj[cand] >> sigma[i] & 1):
                return False
        dep = deps[j]
        if dep is not None:
            idxs, coeffs = dep
            target = [Fraction(x) for x in (1,) + qc[cand]]
            for t in range(k + 1):
                if sum(coeffs[l] * ((1,) + qc[sigma[idxs[l]]])[t]
                       for l in range(len(idxs))) != target[t]:
                    return False
        return True

    def unimodular_fit(sigma: list[int]) -> bool:
        i0 = independent[0]
        cols_p = [[pc[i][t] - pc[i0][t] for i in independent[1:]] for t in range(k)]
        cols_q = [[qc[sigma[i]][t] - qc[sigma[i0]][t] for i in independent[1:]]
                  for t in range(k)]
        ainv = linalg.inverse(cols_p)
        umap = [[sum(Fraction(cols_q[r][l]) * ainv[l][c] for l in range(k))
                 for c in range(k)] for r in range(k)]
        if any(x.denominator != 1 for row in umap for x in row):
            return False
        umap_int = [[int(x) for x in row] for row in umap]
        if abs(linalg.det(umap_int)) != 1:
            return False
        shift = [qc[sigma[i0]][t] - sum(umap_int[t][c] * pc[i0][c] for c in range(k))
                 for t in range(k)]
        return all(
            tuple(sum(umap_int[t][c] * pc[j][c] for c in range(k)) + shift[t]
                  for t in range(k)) == qc[sigma[j]]
            for j in range(n))

    def extend(j: int, sigma: list[int], used: int) -> bool:
        if j == n:
            return unimodular_fit(sigma)
        for cand in range(n):
            if admissible(j, cand, sigma, used):
                sigma.append(cand)
                if extend(j + 1, sigma, used | (1 << cand)):
                    return True
                sigma.pop()
        return False

    return extend(0, [], 0)
