import json

import pytest

from gcgraph.aut import automorphisms, inner
from gcgraph.classify import (
    ANCHORS,
    PreconditionError,
    not_gci_via_matching,
    omega_singleton_checks,
    restricted_gci_decide,
    s6_restricted_gci_refutation,
    verify_group,
)
from gcgraph.gencayley import enumerate_subsets
from gcgraph.group import are_conjugate, conjugacy_classes, cyclic, named_group, symmetric
from gcgraph.iso import gci_isomorphic


def test_s3_restricted_gci_yes(S3):
    status, report = restricted_gci_decide(S3, 6)
    assert status.value == "yes"
    assert report["g"] == "(12)"
    assert report["classes_by_valence"] == {0: 1, 1: 1, 2: 1, 3: 1}


def test_s3_valence_classes_are_gci_classes(S3):
    auts = automorphisms(S3)
    a = inner(S3, S3.element("(12)"))
    pairs = list(enumerate_subsets(S3, a, 3))
    for d in (1, 2, 3):
        same = [p for p in pairs if len(p.subset) == d]
        assert same
        for p in same:
            assert gci_isomorphic(S3, same[0], p, auts) is not None


@pytest.mark.parametrize("name", ["S4", "S5"])
def test_step_one_witness(name):
    G = named_group(name)
    status, _ = restricted_gci_decide(G)
    assert status.value == "no"
    assert status.witness["involutions"] == ["(12)", "(12)(34)"]
    a, b = (G.element(x) for x in status.witness["involutions"])
    cls = next(c.members for c in conjugacy_classes(G) if a in c.members)
    assert b not in cls and not are_conjugate(G, a, b)


def test_s6_refutation():
    ev = s6_restricted_gci_refutation()
    assert ev["candidates"] == 1440
    assert ev["successes"] == 0
    assert ev["matching (12)"] == ev["matching (12)(34)"] == "360K2"
    assert ev["target_type"] == [2, 2, 1, 1]
    assert [2, 2, 1, 1] not in ev["inner_image_type"] + ev["outer_image_type"]


def test_s6_decision_uses_aut_level(S6, aut_S6):
    status, report = restricted_gci_decide(S6, aut_list=aut_S6, complete=False)
    assert status.value == "no"
    assert "Aut(G)" in status.witness["reason"]


def test_not_gci_matching(S3, S4):
    for G in (S3, S4):
        w = not_gci_via_matching(G)
        assert w["components"] == len(G) // 2
    with pytest.raises(PreconditionError):
        not_gci_via_matching(cyclic(5))
    with pytest.raises(PreconditionError):
        restricted_gci_decide(cyclic(3))


def test_omega_singleton(S3, S4):
    r = omega_singleton_checks(S3, restricted_gci=True)
    assert r["forced"] and r["ok"]
    assert all(row["singleton"] for row in r["involutions"])
    r4 = omega_singleton_checks(S4)
    assert not r4["forced"]
    row = next(x for x in r4["involutions"] if x["g"] == "(12)")
    assert row["big_omega_size"] == 4
    assert omega_singleton_checks(cyclic(3))["involutions"] == []


def test_partial_status(S4):
    # S4 stops at step one whatever m is
    assert restricted_gci_decide(S4, 2)[0].value == "no"


def test_verify_group_s3():
    r = verify_group(symmetric(3))
    assert r.passed, [c.id for c in r.evidence if not c.passed]
    assert r.gci_status.value == "no"
    assert r.restricted_gci_status.value == "yes"
    data = r.to_json()
    assert set(data) == {"group", "m", "gci", "restricted_gci", "claims"}
    assert all(set(c) == {"id", "anchor", "pass", "witness"} for c in data["claims"])
    assert all(c["id"] in ANCHORS for c in data["claims"])
    json.dumps(data)


def test_verify_group_deterministic():
    a = verify_group(symmetric(5)).to_json()
    b = verify_group(symmetric(5)).to_json()
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)
    assert a["restricted_gci"]["status"] == "no"


def test_verify_group_s6():
    r = verify_group(symmetric(6))
    assert r.passed
    assert r.gci_status.value == "undecided"
    assert r.restricted_gci_status.value == "no"
