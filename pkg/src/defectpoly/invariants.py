"""The alternating face-volume invariants c_t and the convolution polynomial f.

For a d-polytope P,

    c_t(P) = sum_{k=0..d} (-1)^(d-k) ((k+t)!/k!) sum_{F face, dim F = k} lvol(F)

where lvol is the lattice-normalized volume and the k = 0 stratum contributes
the number of vertices.  f(P, .) replaces the factorial weights by Ehrhart
polynomial convolutions:

    f(P, t) = sum_{k=1..d} (-1)^(d-k) (k+1)! t^(d-k) sum_{dim F = k} ehr(F, t)
              + (-1)^d n_vertices t^d,

a degree-d polynomial with integer coefficients whose leading coefficient is
c_1(P) and whose constant term is (d+1)!.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .geometry import ehrhart, is_smooth, normalized_volume
from .polynomial import Polynomial
from .polytope import Polytope

__all__ = [
    "ct_invariant",
    "f_poly",
    "pyramid_ct_closed_form",
    "is_defect",
    "InvariantReport",
    "report",
]


def _stratum_weight(d: int, k: int, t: int) -> int:
    """Signed weight (-1)^(d-k) * (k+t)!/k! of the dimension-k stratum."""
    w = 1
    for j in range(k + 1, k + t + 1):
        w *= j
    return w if (d - k) % 2 == 0 else -w


def ct_invariant(p: Polytope, t: int) -> int:
    """c_t(P) for a nonnegative integer t."""
    if not isinstance(t, int) or t < 0:
        raise ValueError(f"c_t needs a nonnegative integer t, got {t!r}")
    d = p.dim
    total = _stratum_weight(d, 0, t) * p.n_vertices
    for k in range(1, d + 1):
        stratum = sum(normalized_volume(p, face) for face in p.faces_of_dim(k))
        total += _stratum_weight(d, k, t) * stratum
    return total


def f_poly(p: Polytope) -> Polynomial:
    """The convolution polynomial f(P, t), coefficients ascending in t.

    Always returned with exactly dim + 1 coefficients; trailing zeros are
    meaningful (iterated pyramids really do kill the top coefficients).
    """
    d = p.dim
    coeffs = [Fraction(0)] * (d + 1)
    for k in range(1, d + 1):
        w = factorial(k + 1) * (1 if (d - k) % 2 == 0 else -1)
        for face in p.faces_of_dim(k):
            for j, c in enumerate(ehrhart(p, face).coeffs):
                coeffs[d - k + j] += w * c
    coeffs[d] += (-1) ** d * p.n_vertices
    if any(c.denominator != 1 for c in coeffs):
        raise AssertionError(f"f-polynomial came out non-integral: {coeffs}")
    return Polynomial(tuple(coeffs))


def pyramid_ct_closed_form(c0_base: int, base_dim: int, r: int) -> int:
    """c_r of the r-fold pyramid over a base with invariant c0_base.

        c_r(pyr^r(P)) = r! * c_0(P) + (-1)^(d+1) * r!        (d = dim P, r >= 1)

    Only valid for r >= 1; the r = 0 value is just c_0(P) itself and asking
    the closed form for it is almost certainly a caller bug.
    """
    if not isinstance(r, int) or r < 1:
        raise ValueError(f"the closed form needs r >= 1, got {r!r}")
    sign = 1 if (base_dim + 1) % 2 == 0 else -1
    return factorial(r) * c0_base + sign * factorial(r)


def is_defect(p: Polytope) -> bool:
    """Smooth with c_1 = 0."""
    return is_smooth(p) and ct_invariant(p, 1) == 0


@dataclass(frozen=True)
class InvariantReport:
    dim: int
    ambient_dim: int
    n_vertices: int
    f_vector: tuple[int, ...]
    is_simple: bool
    is_smooth: bool
    c0: int
    c1: int
    c_extra: tuple[tuple[int, int], ...]
    f_coefficients: tuple[int, ...]
    is_defect: bool

    def to_dict(self) -> dict:
        out = {"schema": 1}
        out["dim"] = self.dim
        out["ambient_dim"] = self.ambient_dim
        out["n_vertices"] = self.n_vertices
        out["f_vector"] = list(self.f_vector)
        out["is_simple"] = self.is_simple
        out["is_smooth"] = self.is_smooth
        out["c0"] = self.c0
        out["c1"] = self.c1
        out["c_extra"] = [[t, v] for t, v in self.c_extra]
        out["f_coefficients"] = list(self.f_coefficients)
        out["is_defect"] = self.is_defect
        return out

    def to_text(self) -> str:
        rows = [
            ("dim", str(self.dim)),
            ("ambient dim", str(self.ambient_dim)),
            ("vertices", str(self.n_vertices)),
            ("f-vector", " ".join(str(x) for x in self.f_vector)),
            ("simple", "true" if self.is_simple else "false"),
            ("smooth", "true" if self.is_smooth else "false"),
            ("c_0", str(self.c0)),
            ("c_1", str(self.c1)),
        ]
        for t, v in self.c_extra:
            rows.append((f"c_{t}", str(v)))
        rows.append(("f coefficients", " ".join(str(x) for x in self.f_coefficients)))
        rows.append(("defect", "true" if self.is_defect else "false"))
        pad = max(len(name) for name, _ in rows)
        return "\n".join(f"{name.ljust(pad)}  {val}" for name, val in rows)


def report(p: Polytope, extra_t: tuple[int, ...] = ()) -> InvariantReport:
    """Bundle of the headline invariants of a polytope.

    c1 is computed from the face sums directly, not read off f_poly, so the
    leading-coefficient identity stays an observable fact rather than a
    construction.
    """
    smooth = is_smooth(p)
    c0 = ct_invariant(p, 0)
    c1 = ct_invariant(p, 1)
    return InvariantReport(
        dim=p.dim,
        ambient_dim=p.ambient_dim,
        n_vertices=p.n_vertices,
        f_vector=p.f_vector,
        is_simple=p.is_simple(),
        is_smooth=smooth,
        c0=c0,
        c1=c1,
        c_extra=tuple((t, ct_invariant(p, t)) for t in extra_t),
        f_coefficients=f_poly(p).integer_coeffs(),
        is_defect=smooth and c1 == 0,
    )
