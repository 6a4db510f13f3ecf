import numpy as np
import pytest

from gcgraph.aut import (
    S6_PHI_IMAGES,
    IncompleteAutList,
    aut_group_bruteforce,
    automorphisms,
    compose,
    conjugate_in_aut,
    conjugators,
    fix_subgroup,
    from_generator_images,
    identity_aut,
    inner,
    inner_witness,
    is_closed,
    is_homomorphism,
    is_involutory,
    parse_alpha,
    s6_delta,
    s6_phi,
)
from gcgraph.group import cyclic, dihedral, named_group, symmetric
from gcgraph.perm import cycle_type

from oracles import automorphisms_bruteforce_perm


@pytest.mark.parametrize("name, count", [("C3", 2), ("S3", 6), ("S4", 24), ("D8", 8), ("D12", 12), ("A4", 24), ("C5", 4)])
def test_aut_orders(name, count):
    auts = aut_group_bruteforce(named_group(name))
    assert len(auts) == count
    assert len(set(auts)) == count


@pytest.mark.parametrize("name", ["S3", "C3", "C5"])
def test_bruteforce_matches_bijection_oracle(name):
    G = named_group(name)
    if len(G) > 6:
        pytest.skip("oracle limited to order 6")
    ours = {tuple(a.table.tolist()) for a in aut_group_bruteforce(G)}
    assert ours == automorphisms_bruteforce_perm(G)


def test_inner_is_conjugation(S4):
    g = S4.element("(123)")
    s = inner(S4, g)
    for h in range(len(S4)):
        assert s(h) == S4.product(g, h, S4.inverse(g))
    assert inner_witness(S4, s) == g
    assert s.describe(S4) == "inner:(123)"


def test_inner_involutory_iff_involution(S4, S5):
    for G in (S4, S5):
        for g in range(len(G)):
            assert is_involutory(inner(G, g)) == (G.element_orders[g] == 2)


def test_identity_is_not_involutory(S3):
    assert not is_involutory(identity_aut(S3))


def test_fix_subgroup_is_centralizer(S4):
    g = S4.element("(12)(34)")
    fix = fix_subgroup(S4, inner(S4, g))
    assert len(fix) == 8


def test_phi_images_validate(S6):
    phi = s6_phi(S6)
    assert is_homomorphism(S6, phi.table, exhaustive=True)
    for src, dst in S6_PHI_IMAGES.items():
        assert S6.label_of(phi(S6.element(src))) == dst
    assert inner_witness(S6, phi) is None


def test_delta_involution_and_transposition_image(S6):
    delta = s6_delta(S6)
    assert is_involutory(delta)
    t = S6.element("(12)")
    # the stated value (12)(36)(45) is the image under phi; delta conjugates it by (12345)
    assert S6.label_of(s6_phi(S6)(t)) == "(12)(36)(45)"
    assert S6.label_of(delta(t)) == "(15)(23)(46)"
    assert cycle_type(S6.elements[delta(t)]) == cycle_type(S6.elements[S6.element("(12)(36)(45)")])
    # delta swaps the class of transpositions with that of triple transpositions
    for t in range(len(S6)):
        if cycle_type(S6.elements[t]) == (2, 1, 1, 1, 1):
            assert cycle_type(S6.elements[delta(t)]) == (2, 2, 2)


def test_s6_family_is_group(S6, aut_S6):
    assert len(aut_S6) == 1440
    assert len(set(aut_S6)) == 1440
    assert is_closed(S6, aut_S6)
    assert sum(a.kind in ("inner", "identity") for a in aut_S6) == 720
    assert sum(is_involutory(a) for a in aut_S6) == 75 + 36


def test_is_closed_rejects_subset(S4, aut_S4):
    assert is_closed(S4, aut_S4)
    assert not is_closed(S4, aut_S4[:-1])


def test_conjugators(S4, aut_S4):
    a, b = inner(S4, S4.element("(12)")), inner(S4, S4.element("(34)"))
    hits = conjugators(a, b, aut_S4)
    assert len(hits) == 4
    for i in hits:
        gam = aut_S4[int(i)]
        assert compose(gam, a) == compose(b, gam)
    d = inner(S4, S4.element("(12)(34)"))
    assert conjugate_in_aut(S4, a, d, aut_S4) is None


def test_conjugate_in_aut_checks_closure(S4, aut_S4):
    partial = [x for x in aut_S4 if not x.is_identity()][:5]
    with pytest.raises(IncompleteAutList):
        conjugate_in_aut(S4, partial[0], partial[1], partial)


def test_from_generator_images_rejects_non_hom(S3):
    gens = S3.generator_indices
    bad = [S3.element("(123)")] * len(gens)
    assert from_generator_images(S3, gens, bad) is None


def test_parse_alpha(S6):
    assert parse_alpha(S6, "id").is_identity()
    assert parse_alpha(S6, "inner:(12)").describe(S6) == "inner:(12)"
    assert parse_alpha(S6, "s6-delta:e") == s6_delta(S6)
    with pytest.raises(ValueError):
        parse_alpha(S6, "outer:(12)")


def test_automorphisms_dispatch():
    assert len(automorphisms(symmetric(5))) == 120
    assert len(automorphisms(dihedral(12))) == 12
    assert len(automorphisms(cyclic(7))) == 6


def test_orders_of_outer_elements(aut_S6):
    orders = {a.order() for a in aut_S6[720:]}
    assert orders <= {2, 4, 8, 10}
    assert np.all([a.order() in (1, 2, 3, 4, 5, 6) for a in aut_S6[:720]])
