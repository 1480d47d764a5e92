import random
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from conftest import figure_complex
from cubechains.cubical import standard_cube
from cubechains.euclid import (CriticalRoute, EuclideanComplex, box_labels, box_order_ok,
                               cube_sequence_of_route, embed, embed_cube,
                               enumerate_critical_routes, is_critical_route, lift,
                               minimal_line, project, proper_multipartitions, random_euclidean,
                               random_sandwich, route_of_cube_sequence, route_to_sequence,
                               sequence_to_route, skeleton)
from cubechains.morse import critical
from cubechains.partitions import build_pk, ordered_partitions
from cubechains.wk import build_wk, enumerate_critical_sequences

SWISS = EuclideanComplex.box_minus((2, 2), [((1, 1), (2, 2))])


def routes(K):
    return sorted(enumerate_critical_routes(K), key=lambda r: (r.q, r.a, r.b))


def test_embed_unit_box():
    K = EuclideanComplex.box((1, 1, 1))
    C = embed(K)
    assert [a for a, _ in C.labels.labels] == [1, 2, 3]
    assert C.cubes == standard_cube(3).cubes


def test_embed_cube_word():
    k = (1, 2)
    labels = box_labels(k)
    assert labels.labels == ((1, 1), (2, 1), (2, 2))
    assert labels.word(embed_cube(((0, 1), (1, 2)), k)) == "*1*"
    assert labels.word(embed_cube(((0, 0), (0, 0)), k)) == "000"


def test_embedding_is_injective_and_face_closed():
    K = EuclideanComplex.box((2, 1, 2))
    C = embed(K)
    assert len(C) == len(K) and C.validate()


def test_project_and_lift():
    k = (2,)
    lam = ordered_partitions(0b11)
    first = [x for x in lam if len(x) == 2 and x[0] == 1][0]
    assert project(first, k) == [(1,), (1,)]
    for k in [(2, 1), (1, 1, 1), (2, 2)]:
        for mp in proper_multipartitions(k):
            p = lift(mp, k)
            assert project(p, k) == mp and box_order_ok(p, k)


def test_order_criterion_witness():
    k = (2,)
    # (1,2) in an earlier block than (1,1)
    bad = (0b10, 0b01)
    assert project(bad, k) == [(1,), (1,)]
    assert not box_order_ok(bad, k)


def test_cells_of_embedded_box_are_box_ordered():
    k = (2, 1)
    C = embed(EuclideanComplex.box(k))
    cells = set(build_pk(C).elements)
    assert cells == {p for p in ordered_partitions(C.labels.full) if box_order_ok(p, k)}
    assert len(cells) == len(proper_multipartitions(k))


def test_minimal_line():
    assert minimal_line((1, 1), (1, 1)) == {((1, 1), (1, 1))}
    line = minimal_line((0, 0), (2, 1))
    edges = sorted(c for c in line if c[0] != c[1])
    assert edges == [((0, 0), (1, 0)), ((1, 0), (2, 0)), ((2, 0), (2, 1))]
    with pytest.raises(ValueError):
        minimal_line((1, 0), (0, 1))


@given(st.lists(st.integers(0, 3), min_size=3, max_size=3),
       st.lists(st.integers(0, 3), min_size=3, max_size=3))
def test_minimal_line_in_box(a, d):
    b = [x + y for x, y in zip(a, d)]
    line = minimal_line(a, b)
    assert all(all(x <= p <= q <= y for p, q, x, y in zip(c[0], c[1], a, b)) for c in line)
    assert sum(1 for c in line if c[0] != c[1]) == sum(d)


def test_routes_full_box():
    rs = routes(EuclideanComplex.box((2, 3)))
    assert [(r.q, r.dim) for r in rs] == [(0, 0)]


def test_swiss_square():
    rs = routes(SWISS)
    assert [(r.q, r.dim) for r in rs] == [(0, 0), (1, 0)]
    assert rs[1] == CriticalRoute(a=((1, 1), (2, 2)), b=((0, 0), (2, 2)))
    cs = route_to_sequence(rs[1], SWISS)
    labels = box_labels((2, 2))
    assert labels.members(cs.E[0]) == ((1, 2), (2, 2))
    full = EuclideanComplex.box((2, 2))
    cs0 = route_to_sequence(routes(full)[0], full)
    assert cs0.E == () and cs0.F == (labels.full,)


def test_figure_routes():
    K = figure_complex()
    rs = routes(K)
    assert len(rs) == 3 and all(r.dim == 0 for r in rs)
    assert CriticalRoute(a=((1, 3), (5, 4)), b=((0, 0), (2, 4))) in rs
    for r in rs:
        assert is_critical_route(K, r)
        assert sequence_to_route(route_to_sequence(r, K), K) == r


def test_figure_literal_reconstruction():
    # keeping the edge [(2,0),(3,0)] adds two more routes
    rs = routes(figure_complex(literal=True))
    assert len(rs) == 5 and all(r.dim == 0 for r in rs)


def test_not_a_route():
    assert not is_critical_route(SWISS, CriticalRoute(a=((1, 0), (2, 2)), b=((0, 0), (2, 1))))
    with pytest.raises(ValueError):
        route_to_sequence(CriticalRoute(a=((2, 2),), b=((1, 1),)), SWISS)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32 - 1), st.sampled_from([(2, 2), (3, 2), (2, 1, 2)]))
def test_routes_match_critical_cells(seed, k):
    K = random_euclidean(k, random.Random(seed), p_hole=0.2)
    C = embed(K)
    P, W = build_wk(C)
    crit = critical(P, W)
    rs = enumerate_critical_routes(K)
    seqs = enumerate_critical_sequences(C)
    assert {route_to_sequence(r, K) for r in rs} == set(seqs)
    assert len(rs) == len(seqs)
    by_dim = {}
    for r in rs:
        by_dim[r.dim] = by_dim.get(r.dim, 0) + 1
    assert by_dim == {d: len(v) for d, v in crit.items()}


def test_skeleton():
    K = EuclideanComplex.box((2, 2))
    assert skeleton(K, 2) == K
    assert len(skeleton(standard_cube(3), 2)) == 26
    assert len(build_pk(standard_cube(3).skeleton(0))) == 0


def test_cube_sequences():
    full = EuclideanComplex.box((2, 2))
    r = routes(full)[0]
    assert cube_sequence_of_route(r, full) == []
    assert route_of_cube_sequence([], full) == r
    r = routes(SWISS)[1]
    assert cube_sequence_of_route(r, SWISS) == [(2, 2)]
    rng = random.Random(3)
    for _ in range(10):
        K = random_sandwich((2, 2, 2), rng)
        for r in enumerate_critical_routes(K):
            pts = cube_sequence_of_route(r, K)
            assert route_of_cube_sequence(pts, K) == r
            assert all(tuple(x - 1 for x in r.b[j]) == r.a[j - 1] for j in range(1, r.q + 1))
    with pytest.raises(ValueError):
        cube_sequence_of_route(routes(figure_complex())[0], figure_complex())
