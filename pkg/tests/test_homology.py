import random
from itertools import combinations, permutations
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from cubechains.cubical import standard_cube
from cubechains.euclid import EuclideanComplex, embed
from cubechains.homology import (BettiReport, betti, conf_counts, euler_characteristic,
                                 generalized_conf_counts, homology_report, poset_betti,
                                 reduce_boundary, smith_diagonal)
from cubechains.partitions import build_pk
from cubechains.poset import ResourceLimitError, SimplicialComplex
from cubechains.wk import critical_inductive

# six-vertex triangulation of the real projective plane (hemi-icosahedron)
RP2 = [(1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 6, 2), (2, 3, 5), (3, 4, 6), (4, 5, 2),
       (5, 6, 3), (6, 2, 4)]


def det(m):
    n = len(m)
    total = 0
    for p in permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if p[i] > p[j]:
                    sign = -sign
        prod = sign
        for i in range(n):
            prod *= m[i][p[i]]
        total += prod
    return total


def invariant_factors(m):
    """Via determinantal divisors d_k = gcd of k x k minors."""
    rows, cols = len(m), len(m[0])
    d = [1]
    for k in range(1, min(rows, cols) + 1):
        g = 0
        for r in combinations(range(rows), k):
            for c in combinations(range(cols), k):
                g = gcd(g, det([[m[i][j] for j in c] for i in r]))
        if g == 0:
            break
        d.append(g)
    return [d[i] // d[i - 1] for i in range(1, len(d))]


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4), st.integers(0, 2**32 - 1))
def test_smith_against_determinantal_divisors(r, c, seed):
    rng = random.Random(seed)
    m = [[rng.choice([0, 0, 1, -1, 2, 3, -4]) for _ in range(c)] for _ in range(r)]
    assert smith_diagonal(m) == invariant_factors(m)


def test_smith_known():
    assert smith_diagonal([[2, 4, 4], [-6, 6, 12], [10, -4, -16]]) == [2, 6, 12]
    assert smith_diagonal([[0, 0], [0, 0]]) == []


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_sparse_reduction_agrees_with_dense(seed):
    rng = random.Random(seed)
    rows, cols = rng.randint(1, 6), rng.randint(1, 6)
    m = [[rng.choice([0, 0, 0, 1, -1, 2]) for _ in range(cols)] for _ in range(rows)]
    columns = [{i: m[i][j] for i in range(rows) if m[i][j]} for j in range(cols)]
    rank, torsion, _ = reduce_boundary(columns, rows)
    diag = smith_diagonal(m)
    assert rank == len(diag) and torsion == [x for x in diag if x > 1]


def test_betti_basic():
    assert betti(SimplicialComplex.from_facets([("v",)])).betti == [1]
    circle = SimplicialComplex.from_facets([(0, 1), (1, 2), (0, 2)])
    assert betti(circle).betti == [1, 1]
    disk = SimplicialComplex.from_facets([(0, 1, 2)])
    assert betti(disk).betti == [1, 0, 0]
    assert betti(disk, max_dim=0).betti == [1]


def test_betti_torsion():
    rp2 = SimplicialComplex.from_facets(RP2)
    rep = betti(rp2)
    assert rep.betti == [1, 0, 0] and rep.torsion == [(1, 2)]
    assert rep.to_json() == {"betti": [1, 0, 0], "torsion": [[1, 2]], "method": "oracle"}


def test_betti_cap():
    sc = SimplicialComplex.from_facets([tuple(range(8))])
    with pytest.raises(ResourceLimitError):
        betti(sc, max_simplices=100)


def test_two_skeleton_of_cube3():
    rep = poset_betti(build_pk(standard_cube(3).skeleton(2)))
    assert rep.betti[:2] == [1, 1] and not any(rep.betti[2:])


def test_conf_counts():
    for n in range(1, 6):
        for s in range(1, n + 1):
            counts = conf_counts(n, s)
            assert counts[0] == 1
            assert all(q * (s + 1) <= n for q in counts)
    assert conf_counts(3, 2) == {0: 1, 1: 1}
    assert conf_counts(4, 3) == {0: 1, 1: 1}
    with pytest.raises(ValueError):
        conf_counts(2, 3)


@pytest.mark.parametrize("n,s", [(3, 1), (4, 1), (4, 2), (5, 2), (5, 3)])
def test_conf_counts_match_critical_cells(n, s):
    crit = critical_inductive(standard_cube(n).skeleton(s))
    expect = {q * (s - 1): c for q, c in conf_counts(n, s).items()}
    if s == 1:
        # every sequence has dimension 0
        assert list(crit) == [0] and len(crit[0]) == sum(conf_counts(n, s).values())
    else:
        assert {d: len(v) for d, v in crit.items()} == expect


def test_b531_against_oracle():
    b = conf_counts(5, 3)
    rep = poset_betti(build_pk(standard_cube(5).skeleton(3)), max_simplices=None)
    assert rep.betti[2] == b[1] and rep.betti[0] == 1


def test_generalized_counts():
    for n in (2, 3):
        for s in range(1, n + 1):
            assert generalized_conf_counts((1,) * n, s) == conf_counts(n, s)
    counts = generalized_conf_counts((2, 1), 1)
    assert counts[0] == 1
    C = embed(EuclideanComplex.box((2, 1)).skeleton(1))
    rep = poset_betti(build_pk(C), max_simplices=None)
    # s = 1: every route has dimension 0, so b_0 counts them all
    assert rep.betti[0] == sum(counts.values())
    assert not any(rep.betti[1:])


def test_homology_report_examples():
    rep = homology_report(standard_cube(4).skeleton(3))
    assert rep.method == "gap-exact" and rep.betti == [1, 0, conf_counts(4, 3)[1]]
    assert "exact via dimension gap" in rep.notes
    rep = homology_report(standard_cube(3).skeleton(2))
    assert rep.method == "oracle" and rep.betti == [1, 1]
    assert "bounds only (Morse inequalities)" in rep.notes
    rep = homology_report(standard_cube(3).skeleton(2), max_simplices=5)
    assert rep.method == "bounds-only"
    rep = homology_report(standard_cube(3))
    assert rep.method == "gap-exact" and rep.betti == [1]


def test_euler_matches_critical(corpus4):
    for K in corpus4[:20]:
        P = build_pk(K)
        if len(P) == 0:
            continue
        crit = critical_inductive(K)
        assert euler_characteristic(P) == sum((-1) ** d * len(v) for d, v in crit.items())


def test_report_json():
    assert BettiReport([1, 2], [(1, 3)], "oracle").dumps() == \
        '{"betti": [1, 2], "torsion": [[1, 3]], "method": "oracle"}'
