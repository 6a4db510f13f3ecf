
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from gcgraph.group import (
    GroupOrderCapExceeded,
    alternating,
    are_conjugate,
    associativity_holds,
    center,
    centralizer,
    class_of,
    close_generators,
    commutator_set,
    conjugacy_classes,
    cyclic,
    dihedral,
    involutions,
    is_complete_group,
    named_group,
    parse_group_spec,
    subset_normalizer,
    symmetric,
)
from gcgraph.perm import compose, parse_cycles

from oracles import commutator_set_oracle


@pytest.mark.parametrize(
    "G, order", [(symmetric(3), 6), (symmetric(4), 24), (alternating(4), 12), (cyclic(5), 5), (dihedral(8), 8), (dihedral(12), 12)]
)
def test_orders(G, order):
    assert len(G) == order
    assert G.elements[0].is_identity()


def test_table_matches_composition(S4):
    rng = np.random.default_rng(1)
    for i, j in rng.integers(0, 24, size=(200, 2)):
        assert G_prod(S4, i, j) == S4.mul(int(i), int(j))


def G_prod(G, i, j):
    return G.index(compose(G.elements[int(i)], G.elements[int(j)]))


def test_associativity(S4):
    assert associativity_holds(S4)


@given(st.integers(0, 23), st.integers(0, 23))
def test_inverse_and_labels(i, j):
    G = symmetric(4)
    assert G.mul(i, G.inverse(i)) == 0
    assert G.element(G.label_of(j)) == j


def test_group_specs():
    assert len(parse_group_spec("S4")) == 24
    assert len(parse_group_spec("name:A4")) == 12
    assert len(parse_group_spec("gens: (12),(123) degree:3")) == 6
    assert len(parse_group_spec("gens: (1234),(13) degree:4")) == 8
    with pytest.raises(ValueError):
        parse_group_spec("Q8")


def test_order_cap(monkeypatch):
    monkeypatch.setenv("GENCAYLEY_CAP", "100")
    with pytest.raises(GroupOrderCapExceeded):
        close_generators([parse_cycles("(12)", 5), parse_cycles("(12345)", 5)], degree=5)
    with pytest.raises(GroupOrderCapExceeded):
        named_group("S8")


def test_class_sizes():
    assert sorted(len(c.members) for c in conjugacy_classes(symmetric(4))) == [1, 3, 6, 6, 8]
    assert sorted(len(c.members) for c in conjugacy_classes(symmetric(5))) == [1, 10, 15, 20, 20, 24, 30]
    assert len(conjugacy_classes(symmetric(6))) == 11


def test_involution_classes(S4, S5):
    t, d = S4.element("(12)"), S4.element("(12)(34)")
    assert not are_conjugate(S4, t, d)
    assert len(involutions(S4)) == 9
    assert len(involutions(S5)) == 25
    assert len(class_of(S5, S5.element("(12)(34)"))) == 15


def test_center_and_centralizer(S4, D8):
    assert center(S4) == frozenset([0])
    assert len(center(D8)) == 2
    assert len(centralizer(S4, S4.element("(12)"))) == 4
    assert len(centralizer(S4, S4.element("(1234)"))) == 4


@pytest.mark.parametrize("name", ["S3", "S4", "S5"])
def test_commutator_set_oracle(name):
    G = named_group(name)
    for g in involutions(G):
        expect = {G.index(p) for p in commutator_set_oracle(G, G.elements[g])}
        assert commutator_set(G, g) == expect


def test_subset_normalizer(S4):
    S = S4.elements_from(["(12)", "(34)"])
    N = subset_normalizer(S4, S)
    assert all(frozenset(S4.conjugate(x, s) for s in S) == S for x in N)
    assert len(N) == 8


def test_completeness():
    assert is_complete_group(symmetric(3)).complete
    assert is_complete_group(symmetric(4)).complete
    s6 = is_complete_group(symmetric(6))
    assert not s6.complete and s6.witness is not None
    assert not is_complete_group(dihedral(8)).complete
    assert not is_complete_group(cyclic(3)).complete


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(["S3", "S4", "D8", "D12", "A4"]), st.data())
def test_conjugation_preserves_class(name, data):
    G = named_group(name)
    g = data.draw(st.integers(0, len(G) - 1))
    x = data.draw(st.integers(0, len(G) - 1))
    assert G.conjugate(x, g) in class_of(G, g)
    assert G.element_orders[G.conjugate(x, g)] == G.element_orders[g]
