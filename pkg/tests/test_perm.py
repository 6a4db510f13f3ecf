import pytest
from hypothesis import given, strategies as st

from gcgraph.perm import (
    CycleSyntaxError,
    Permutation,
    compose,
    cycle_type,
    format_cycles,
    is_involution,
    parse_cycles,
)


def perms(degree):
    return st.permutations(list(range(degree))).map(lambda xs: Permutation(tuple(xs)))


def test_composition_applies_right_factor_first():
    p = parse_cycles("(12)", 3)
    q = parse_cycles("(13)", 3)
    assert format_cycles(compose(p, q)) == "(132)"
    assert compose(p, q)(1) == p(q(1))


def test_identity_tokens():
    for tok in ["e", "()", "(1)", "id", " ( ) "]:
        assert parse_cycles(tok, 4).is_identity()
    assert format_cycles(Permutation.identity(5)) == "e"


@pytest.mark.parametrize(
    "text, canonical",
    [("(21)", "(12)"), ("(34)(12)", "(12)(34)"), ("(231)", "(123)"), ("(2 3 1)", "(123)"), ("(12)(3)", "(12)")],
)
def test_canonical_form(text, canonical):
    assert format_cycles(parse_cycles(text, 4)) == canonical


@pytest.mark.parametrize("bad", ["(12", "12)", "(1a)", "(15)", "(11)", "(12)(23)", "x", ""])
def test_malformed(bad):
    with pytest.raises(CycleSyntaxError):
        parse_cycles(bad, 4)


def test_large_degree_needs_separators():
    assert format_cycles(parse_cycles("(1 10)", 10)) == "(1 10)"
    with pytest.raises(CycleSyntaxError):
        parse_cycles("(110)", 10)


def test_cycle_type_and_involution():
    p = parse_cycles("(12)(36)(45)", 6)
    assert cycle_type(p) == (2, 2, 2)
    assert is_involution(p)
    assert not is_involution(Permutation.identity(6))
    assert cycle_type(parse_cycles("(123)", 5)) == (3, 1, 1)


@given(perms(6))
def test_roundtrip(p):
    assert parse_cycles(format_cycles(p), 6) == p


@given(perms(5), perms(5), perms(5))
def test_associative(a, b, c):
    assert compose(compose(a, b), c) == compose(a, compose(b, c))


@given(perms(6))
def test_inverse(p):
    assert compose(p, p.inverse()).is_identity()
    assert p.inverse().inverse() == p


@given(perms(6))
def test_order_annihilates(p):
    q = Permutation.identity(6)
    for _ in range(p.order()):
        q = compose(q, p)
    assert q.is_identity()
