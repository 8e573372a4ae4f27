import itertools
import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bstar.complexes import (Complex, FaceCountError, cone, contrastar, deletion,
                             from_facets, get_max_faces, join, link, parse,
                             predicates, set_max_faces, skeleton, to_json, to_text)
from bstar.constructions import cross_polytope, example_2_10_i, simplex
from oracles import closure, faces_by_dim


def as_face_sets(c: Complex):
    """All faces as frozensets of labels (for oracle comparison)."""
    out = set()
    for d in range(-1, c.dim + 1):
        for f in c.faces(d):
            out.add(frozenset(c.labels[v] for v in f))
    return out


def isomorphic(a: Complex, b: Complex) -> bool:
    """Brute-force isomorphism check for small complexes."""
    if a.n_vertices != b.n_vertices or sorted(
            len(f) for f in a.facets) != sorted(len(f) for f in b.facets):
        return False
    bf = set(b.facets)
    for perm in itertools.permutations(range(b.n_vertices)):
        if all(tuple(sorted(perm[v] for v in f)) in bf for f in a.facets) \
                and len(a.facets) == len(b.facets):
            return True
    return False


def test_from_facets_dedup():
    c = from_facets([{"a", "b"}, {"b", "c"}, {"a", "b"}])
    assert c.n_vertices == 3
    assert c.facets == ((0, 1), (1, 2))
    assert c.labels == ("a", "b", "c")


def test_from_facets_full_triangle():
    c = from_facets([{"a", "b", "c"}])
    assert c.dim == 2
    assert sum(len(c.faces(d)) for d in range(0, 3)) == 7


def test_from_facets_dominated_faces_removed():
    c = from_facets([[0, 1], [0, 1, 2], [2]])
    assert c.facets == ((0, 1, 2),)


def test_example_graph_counts():
    c = example_2_10_i()
    assert c.dim == 1
    assert c.n_vertices == 5
    assert len(c.facets) == 6


def test_from_facets_rejects_empty():
    with pytest.raises(ValueError, match="no facets"):
        from_facets([])
    with pytest.raises(ValueError, match="no facets"):
        from_facets([[]])


def test_faces_examples(octahedron):
    assert len(octahedron.faces(2)) == 8
    # oracle: subset closure
    fb = faces_by_dim(closure(octahedron.facets))
    assert len(fb[2]) == 8 and len(fb[1]) == 12
    assert from_facets([{"a", "b", "c"}]).faces(1) == [(0, 1), (0, 2), (1, 2)]
    assert octahedron.faces(5) == []
    assert octahedron.faces(-1) == [()]


def test_link_examples(octahedron, torus):
    lk = link(octahedron, [0])
    assert isomorphic(lk, from_facets([(0, 1), (1, 2), (2, 3), (0, 3)]))
    edge_link = link(from_facets([{"a", "b", "c"}]), [0, 1])
    assert edge_link.facets == ((0,),)
    for v in range(7):
        lkv = link(torus, [v])
        assert lkv.f_vector() == (1, 6, 6)
        assert len(predicates(lkv).components) == 1
    with pytest.raises(ValueError, match="not a face"):
        link(octahedron, [0, 1])  # antipodal pair
    assert link(octahedron, []) == octahedron


def test_deletion_examples(octahedron):
    c = example_2_10_i()
    p = c.labels.index("p")
    rest = deletion(c, [p])
    assert as_face_sets(rest) == {frozenset(), frozenset("a"), frozenset("b"),
                                  frozenset("c"), frozenset("d"),
                                  frozenset("ab"), frozenset("cd")}
    rim = deletion(octahedron, [0])
    assert rim.f_vector() == (1, 5, 8, 4)
    assert deletion(octahedron, []) == octahedron


def test_deletion_to_empty_complex():
    c = from_facets([[0, 1]])
    empty = deletion(c, [0, 1])
    assert empty.dim == -1
    assert empty.n_vertices == 0
    assert empty.faces(-1) == [()]


def test_contrastar_examples(octahedron, torus):
    full = from_facets([{"a", "b", "c"}])
    assert isomorphic(contrastar(full, [0, 1, 2]),
                      from_facets([(0, 1), (0, 2), (1, 2)]))
    for v in range(6):
        assert contrastar(octahedron, [v]) == deletion(octahedron, [v])
    with pytest.raises(ValueError):
        contrastar(octahedron, [])


def test_skeleton_examples(torus):
    tetra = simplex(3)
    assert skeleton(tetra, 2).facets == tuple(
        tuple(sorted(f)) for f in itertools.combinations(range(4), 3))
    octa = cross_polytope(3)
    g = skeleton(octa, 1)
    assert g.f_vector() == (1, 6, 12)
    k7 = skeleton(torus, 1)
    assert k7.f_vector() == (1, 7, 21)
    assert skeleton(octa, 2) == octa
    with pytest.raises(ValueError):
        skeleton(octa, -1)


def test_join_examples(octahedron):
    s0 = cross_polytope(1)
    square = join(s0, s0)
    assert isomorphic(square, cross_polytope(2))
    octa = join(square, s0)
    assert isomorphic(octa, octahedron)
    pt = from_facets([["x"]])
    c = join(pt, from_facets([(0, 1), (1, 2)]))
    assert c.dim == 2 and c.n_vertices == 4


def test_join_associative_up_to_relabeling():
    s0 = cross_polytope(1)
    edge = from_facets([(0, 1)])
    left = join(join(s0, edge), s0)
    right = join(s0, join(edge, s0))
    assert isomorphic(left, right)


def test_cone_examples(octahedron):
    assert isomorphic(cone(cross_polytope(1)), from_facets([(0, 1), (1, 2)]))
    c3 = from_facets([(0, 1), (0, 2), (1, 2)])
    assert cone(c3).f_vector() == (1, 4, 6, 3)
    ball = cone(octahedron)
    assert ball.n_vertices == 7 and ball.dim == 3


def test_predicates(octahedron, torus):
    po = predicates(octahedron)
    assert po.is_pure and po.is_flag and len(po.components) == 1
    assert len(po.graph_edges) == 12
    pt = predicates(torus)
    assert pt.is_pure and not pt.is_flag and len(pt.components) == 1
    two = predicates(from_facets([(0, 1), (2, 3)]))
    assert two.is_pure and two.is_flag and len(two.components) == 2
    mixed = predicates(from_facets([(0, 1, 2), (2, 3)]))
    assert not mixed.is_pure


def test_octahedron_minimal_nonfaces(octahedron):
    from bstar.complexes import _minimal_nonfaces

    assert _minimal_nonfaces(octahedron) == [(0, 1), (2, 3), (4, 5)]


# -- properties over random complexes ----------------------------------

@st.composite
def random_complexes(draw):
    n = draw(st.integers(2, 6))
    k = draw(st.integers(1, 5))
    facets = []
    for _ in range(k):
        size = draw(st.integers(1, min(4, n)))
        facets.append(draw(st.permutations(range(n)))[:size])
    return from_facets(facets)


@given(random_complexes())
@settings(max_examples=50, deadline=None)
def test_contrastar_of_vertex_is_deletion(c):
    for v in range(c.n_vertices):
        assert contrastar(c, [v]) == deletion(c, [v])


@given(random_complexes(), st.integers(0, 3), st.integers(0, 3))
@settings(max_examples=50, deadline=None)
def test_skeleton_composition(c, i, j):
    i, j = min(i, c.dim), min(j, c.dim)
    if min(i, j) < 0:
        return
    assert skeleton(skeleton(c, i), j) == skeleton(c, min(i, j))


@given(random_complexes())
@settings(max_examples=40, deadline=None)
def test_deletion_order_independent(c):
    verts = list(range(min(3, c.n_vertices)))
    if len(verts) < 2:
        return
    once = deletion(c, verts)
    step = c
    for v in sorted(verts, reverse=True):  # delete by original index, high first
        lbl = step.labels.index(c.labels[v])
        step = deletion(step, [lbl])
    assert step == once


@given(random_complexes())
@settings(max_examples=40, deadline=None)
def test_link_round_trip(c):
    for d in range(0, c.dim + 1):
        for face in c.faces(d):
            lk = link(c, face)
            face_labels = set(c.face_labels(face))
            for dd in range(0, lk.dim + 1):
                for t in lk.faces(dd):
                    union = set(lk.face_labels(t)) | face_labels
                    idx = [c.labels.index(lab) for lab in union]
                    assert c.is_face(idx)


@given(random_complexes())
@settings(max_examples=40, deadline=None)
def test_from_facets_idempotent(c):
    again = from_facets([c.face_labels(f) for f in c.facets])
    assert again == c


@given(random_complexes())
@settings(max_examples=40, deadline=None)
def test_join_f_polynomial_multiplies(c):
    other = from_facets([(0, 1)])
    j = join(c, other)
    # f-polynomials with the f_{-1}=1 term included
    def fpoly(x):
        f = x.f_vector()
        return f
    fa, fb, fj = fpoly(c), fpoly(other), fpoly(j)
    for k in range(len(fj)):
        conv = sum(fa[i] * fb[k - i] for i in range(len(fa))
                   if 0 <= k - i < len(fb))
        assert fj[k] == conv


def test_parse_round_trip(octahedron):
    text = to_json(octahedron)
    back = parse(text)
    assert isomorphic(back, octahedron)
    plain = to_text(octahedron)
    assert isomorphic(parse(plain), octahedron)
    with pytest.raises(ValueError):
        parse("{\"wrong\": []}")


def test_serialization_stable(torus):
    assert to_json(torus) == to_json(from_facets(
        [torus.face_labels(f) for f in torus.facets]))
    data = json.loads(to_json(torus))
    assert data["facets"] == sorted(data["facets"])


def test_face_guard():
    old = get_max_faces()
    set_max_faces(10)
    try:
        c = from_facets([range(6)])
        with pytest.raises(FaceCountError):
            c.f_vector()
    finally:
        set_max_faces(old)
