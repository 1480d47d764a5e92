import pytest

from cubechains.cubical import CubicalComplex, LabelSet
from cubechains.morse import (DiscreteVectorField, InvalidFieldError, MorseValue, critical,
                              critical_counts, cube_field, cube_poset, find_cycle, h_value,
                              in_top_part, is_gradient, permutahedron_field, product_field,
                              product_poset, simplex_field, simplex_poset, to_dot,
                              top_part_pairs, validate_morse_function)
from cubechains.partitions import permutahedron


def square_boundary():
    L = LabelSet([1, 2])
    K = CubicalComplex.from_words(L, ["*0", "0*", "1*", "*1"])
    return L, K, cube_poset(K)


def test_empty_field_is_gradient():
    _, _, P = square_boundary()
    V = DiscreteVectorField()
    assert is_gradient(P, V)
    assert sum(critical_counts(P, V).values()) == len(P)


def test_cycle_witness():
    L, K, P = square_boundary()
    c = L.parse_word
    # each vertex points along the edge leaving it counter-clockwise
    V = DiscreteVectorField([(c("00"), c("*0")), (c("10"), c("1*")),
                             (c("11"), c("*1")), (c("01"), c("0*"))])
    cyc = find_cycle(P, V)
    assert cyc is not None and cyc[0] == cyc[-1] and len(cyc) == 9
    for a, b in zip(cyc[0::2], cyc[1::2]):
        assert (a, b) in V
    # breaking one vector removes the cycle
    V2 = DiscreteVectorField([(c("00"), c("*0")), (c("10"), c("1*")), (c("11"), c("*1"))])
    assert is_gradient(P, V2)


def test_field_validation():
    L, K, P = square_boundary()
    c = L.parse_word
    with pytest.raises(InvalidFieldError):
        DiscreteVectorField([(c("00"), c("*0")), (c("00"), c("0*"))])
    with pytest.raises(InvalidFieldError):
        find_cycle(P, DiscreteVectorField([(c("00"), c("1*"))]))


def test_permutahedron_fields():
    assert len(permutahedron_field([])) == 0 and len(permutahedron([])) == 1
    P = permutahedron([1, 2, 3])
    V = permutahedron_field([1, 2, 3])
    assert len(V) == 6
    assert {d: [P.format(x) for x in v] for d, v in critical(P, V).items()} == {0: ["1|2|3"]}
    P4 = permutahedron([1, 2, 3, 4])
    V4 = permutahedron_field([1, 2, 3, 4])
    assert len(V4) == 37 and is_gradient(P4, V4)
    assert [P4.format(x) for x in critical(P4, V4)[0]] == ["1|2|3|4"]


def test_simplex_field():
    L = LabelSet([1, 2, 3, 4])
    P, V = simplex_poset(L), simplex_field(L)
    m = 1 << 3
    assert critical(P, V) == {0: [m]}
    assert validate_morse_function(P, V, lambda b: 0 if b & m else 1)
    assert not validate_morse_function(P, V, lambda b: 0)
    assert is_gradient(P, V)


def test_cube_field():
    L = LabelSet([1, 2, 3])
    P, V = cube_poset(CubicalComplex.full(L)), cube_field(L)
    assert critical(P, V) == {0: [(0, 0)]}
    assert is_gradient(P, V)


def test_product_of_cube_fields():
    # the max label m = 2 is the second factor: its vectors appear in every slice
    x, y = LabelSet([1]), LabelSet([2])
    P, V = cube_poset(CubicalComplex.full(x)), cube_field(x)
    Q, W = cube_poset(CubicalComplex.full(y)), cube_field(y)
    glue = lambda c: (c[0][0] | c[1][0] << 1, c[0][1] | c[1][1] << 1)
    assert product_field(P, V, Q, W).mapped(glue) == cube_field([1, 2])
    flip = lambda c: glue((c[1], c[0]))
    assert product_field(Q, W, P, V).mapped(flip) != cube_field([1, 2])
    assert is_gradient(product_poset(P, Q), product_field(P, V, Q, W))
    assert len(product_field(P, DiscreteVectorField(), Q, DiscreteVectorField())) == 0


def test_morse_value_order():
    a, b = MorseValue(2, 3), MorseValue(1, 1)
    assert a < b
    assert MorseValue(1, 2) < MorseValue(1, 3) < MorseValue(1, 1)
    assert sorted([MorseValue(0, 1), MorseValue(0, 2), MorseValue(3, 5)]) == \
        [MorseValue(3, 5), MorseValue(0, 2), MorseValue(0, 1)]
    with pytest.raises(ValueError):
        MorseValue(0, 0)


def test_h_is_morse_on_top_part():
    for n in range(1, 5):
        P = permutahedron(range(1, n + 1))
        top = P.subposet([x for x in P.elements if in_top_part(x)])
        V = DiscreteVectorField(top_part_pairs(P.support))
        assert validate_morse_function(top, V, h_value)
        assert is_gradient(top, V)


def test_dot_export():
    P = permutahedron([1, 2])
    text = to_dot(P, permutahedron_field([1, 2]))
    assert text.startswith("digraph") and '"2|1" -> "1,2" [style=bold' in text
