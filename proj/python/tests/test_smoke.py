import json
import os

import pytest

import synalg

FIXTURES = os.path.join(os.path.dirname(__file__), "..", "..", "tests", "fixtures")


def test_ab_star_values():
    a = synalg.Automaton.from_regex("(ab)*", "ab")
    assert a.size == 3
    assert a.accepts("abab") and not a.accepts("aba")
    syn = synalg.syntactic_monoid(a)
    assert syn.size == 6
    assert syn.elements == ["ε", "a", "b", "aa", "ab", "ba"]
    assert syn.is_valid()
    assert synalg.isomorphic(syn, synalg.syntactic_quotient_oracle(a))


def test_minimize_fixture():
    a = synalg.Automaton.from_file(os.path.join(FIXTURES, "ab_star.json"))
    assert len(a) == 6
    m = synalg.minimize(a)
    assert len(m) == 3
    assert json.loads(m.to_json())["variety"] == "set"


def test_lifts():
    parity = synalg.Automaton.from_file(os.path.join(FIXTURES, "two_state.json"))
    assert synalg.syntactic_monoid(synalg.lift(parity, "jsl")).size == 4
    assert synalg.syntactic_monoid(synalg.lift(parity, "vect", 3)).size == 9
    inv = synalg.lift(parity, "involution")
    assert inv.variety == synalg.lift(parity, "involution").variety
    assert synalg.syntactic_monoid(inv).size == 2
    assert synalg.syntactic_equivalent(parity, "aa", "_")


def test_duality_and_checks():
    a = synalg.Automaton.from_regex("a(a|b)*b", "ab")
    assert synalg.verify_syndual(a)
    assert synalg.verify_mindual(a)
    ok, text = synalg.run_checks(seed=42, instances=10, varieties=["set", "jsl"])
    assert ok, text


def test_errors():
    with pytest.raises(synalg.Error):
        synalg.Automaton.from_json('{"variety": "set", "foo": 1}')
    with pytest.raises(synalg.Error):
        synalg.Automaton.from_regex("(ab", "ab")
