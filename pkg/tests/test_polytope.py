"""Polytope core: construction, H-representation, face lattice."""

from fractions import Fraction
from math import comb

import pytest

from defectpoly import Polytope, cube, hypersimplex, prism, simplex
from defectpoly.linalg import rank
from helpers import f_vector_by_closures, facets_by_exhaustion
from defectpoly.geometry import _chart_inequalities


# ------------------------------------------------------------ construction


def test_constructor_validates_input():
    with pytest.raises(ValueError):
        Polytope([])
    with pytest.raises(ValueError):
        Polytope([(1, 2), (3,)])
    with pytest.raises(ValueError):
        Polytope([(1, 2), (1, 2)])
    with pytest.raises(ValueError):
        Polytope([(1.5, 2)])


def test_from_vertices_keeps_extreme_points():
    p = Polytope.from_vertices([(0, 0), (1, 0), (0, 1), (1, 1)])
    assert p.n_vertices == 4


def test_from_vertices_strips_interior_point_with_warning():
    with pytest.warns(UserWarning, match="non-extreme"):
        p = Polytope.from_vertices([(0, 0), (2, 0), (0, 2), (2, 2), (1, 1)])
    assert p.vertices == ((0, 0), (2, 0), (0, 2), (2, 2))


def test_from_vertices_strips_duplicates_with_warning():
    with pytest.warns(UserWarning, match="duplicate"):
        p = Polytope.from_vertices([(0,), (1,), (0,)])
    assert p.vertices == ((0,), (1,))


def test_from_vertices_keeps_all_hypersimplex_rows():
    h = Polytope.from_vertices(hypersimplex(3, 6).vertices)
    assert h.n_vertices == 20
    # independent extremality certificate: the functional 2v - 1 is uniquely
    # maximized at v among 0/1 vectors with a fixed coordinate sum
    for v in h.vertices:
        w = [2 * x - 1 for x in v]
        vals = [sum(a * b for a, b in zip(w, u)) for u in h.vertices]
        best = max(vals)
        assert vals.count(best) == 1
        assert vals.index(best) == h.vertices.index(v)


def test_vertex_order_preserved():
    rows = [(1, 1), (0, 0), (1, 0), (0, 1)]
    assert Polytope.from_vertices(rows).vertices == tuple(rows)


def test_equality_and_hash_on_vertices():
    assert cube(2) == cube(2)
    assert hash(cube(2)) == hash(cube(2))
    assert cube(2) != simplex(2)


# -------------------------------------------------------------------- dim


def test_dim_point():
    assert Polytope([(9, 9)]).dim == 0


def test_dim_prism_over_triangle():
    assert prism(simplex(2)).dim == 3


def test_dim_hypersimplex_drops_one():
    assert hypersimplex(3, 6).dim == 5
    assert hypersimplex(3, 6).ambient_dim == 6


# ------------------------------------------------------------------- hrep


def test_cube2_hrep():
    ineqs = set(cube(2).hrep.inequalities)
    assert ineqs == {(0, (1, 0)), (0, (0, 1)), (1, (-1, 0)), (1, (0, -1))}
    assert cube(2).hrep.equations == ()


def test_simplex2_has_three_facets():
    assert len(simplex(2).hrep.inequalities) == 3


def test_hypersimplex_hrep_semantics():
    h = hypersimplex(3, 6)
    assert h.hrep.equations == ((-3, (1, 1, 1, 1, 1, 1)),)
    assert len(h.hrep.inequalities) == 12
    # the facets are exactly x_i >= 0 and x_i <= 1: compare tight vertex
    # sets, since inequality vectors are only canonical modulo the equation
    def tight(a0, a):
        return frozenset(i for i, v in enumerate(h.vertices)
                         if a0 + sum(c * x for c, x in zip(a, v)) == 0)
    lib = {tight(a0, a) for a0, a in h.hrep.inequalities}
    expected = {tight(0, tuple(1 if j == i else 0 for j in range(6)))
                for i in range(6)}
    expected |= {tight(1, tuple(-1 if j == i else 0 for j in range(6)))
                 for i in range(6)}
    assert lib == expected


def test_facets_match_exhaustive_oracle_small():
    for p in (cube(2), simplex(2), simplex(3), cube(3), prism(simplex(2)),
              hypersimplex(2, 4)):
        top = p.face_lattice.top
        assert sorted(_chart_inequalities(p, top)) == facets_by_exhaustion(p)


def test_facets_match_exhaustive_oracle_hypersimplex36():
    h = hypersimplex(3, 6)
    lib = sorted(_chart_inequalities(h, h.face_lattice.top))
    assert lib == facets_by_exhaustion(h)


def test_every_vertex_is_certified_by_tight_facets(corpus):
    # at each vertex, tight facet normals plus the equation normals span R^d
    for name, p in corpus:
        if p.ambient_dim == 0:
            continue
        eq_normals = [list(b) for _, b in p.hrep.equations]
        for v in p.vertices:
            tight = [list(a) for a0, a in p.hrep.inequalities
                     if a0 + sum(c * x for c, x in zip(a, v)) == 0]
            assert rank(tight + eq_normals) == p.ambient_dim, name


def test_all_vertices_satisfy_hrep(corpus):
    for name, p in corpus:
        for v in p.vertices:
            for a0, a in p.hrep.inequalities:
                assert a0 + sum(c * x for c, x in zip(a, v)) >= 0, name
            for b0, b in p.hrep.equations:
                assert b0 + sum(c * x for c, x in zip(b, v)) == 0, name


def test_equation_count_matches_codimension(corpus):
    for name, p in corpus:
        assert len(p.hrep.equations) == p.ambient_dim - p.dim, name


# ----------------------------------------------------------- face lattice


def test_cube3_f_vector():
    assert cube(3).f_vector == (8, 12, 6, 1)


def test_simplex_f_vector_binomials():
    for d in range(1, 5):
        fv = simplex(d).f_vector
        assert fv == tuple(comb(d + 1, k + 1) for k in range(d + 1))


def test_hypersimplex36_f_vector_matches_closure_oracle():
    h = hypersimplex(3, 6)
    assert h.f_vector == f_vector_by_closures(h)


def test_f_vector_matches_closure_oracle(corpus):
    for name, p in corpus:
        if p.n_vertices > 12:
            continue
        assert p.f_vector == f_vector_by_closures(p), name


def test_euler_relation(corpus):
    for name, p in corpus:
        assert sum((-1) ** k * fk for k, fk in enumerate(p.f_vector)) == 1, name


def test_vertex_level_is_singletons(corpus):
    for name, p in corpus:
        verts = p.faces_of_dim(0)
        assert len(verts) == p.n_vertices, name
        assert sorted(f.vertex_indices for f in verts) == \
            [(i,) for i in range(p.n_vertices)], name


def test_faces_of_dim_out_of_range_is_empty():
    assert cube(2).faces_of_dim(3) == []
    assert cube(2).faces_of_dim(-1) == []


def test_faces_of_top_dim_is_whole_polytope():
    for p in (cube(2), simplex(3), hypersimplex(2, 4)):
        top = p.faces_of_dim(p.dim)
        assert len(top) == 1
        assert top[0].vertex_indices == tuple(range(p.n_vertices))


def test_prism_over_triangle_has_nine_edges():
    assert len(prism(simplex(2)).faces_of_dim(1)) == 9


def test_cover_relations_are_graded_containment(corpus):
    for name, p in corpus:
        lat = p.face_lattice
        for face in lat:
            for child in lat.facets_of(face):
                assert child.dim == face.dim - 1, name
                assert set(child.vertex_indices) < set(face.vertex_indices), name


def test_cube_and_octahedron_f_vectors_reverse():
    # hypersimplex(2,4) is an octahedron, the dual of the cube; proper-face
    # counts must reverse
    c = cube(3).f_vector[:-1]
    o = hypersimplex(2, 4).f_vector[:-1]
    assert c == tuple(reversed(o))


# --------------------------------------------------------------- simple


def test_is_simple_examples():
    assert cube(3).is_simple()
    assert not hypersimplex(3, 6).is_simple()
    assert Polytope([(3, 1)]).is_simple()


# -------------------------------------------------------------- contains


def test_contains_rational_and_integer_points():
    c = cube(3)
    assert c.contains((Fraction(1, 2), Fraction(1, 2), Fraction(1, 2)))
    assert not c.contains((2, 0, 0))
    h = hypersimplex(3, 6)
    for v in h.vertices:
        assert h.contains(v)
    assert not h.contains((1, 1, 1, 0, 0, 1))  # coordinate sum 4, off the hull
    assert not h.contains((3, 0, 0, 0, 0, 0))  # on the hyperplane, outside


def test_contains_checks_ambient_dimension():
    with pytest.raises(ValueError):
        cube(2).contains((1, 1, 1))
