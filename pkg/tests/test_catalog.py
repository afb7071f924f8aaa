"""The worked examples: frozen tables and field variations."""

import pytest

from partialhopf.actions import verify_module_algebra, verify_partial_action
from partialhopf.catalog import (
    CATALOG_NAMES,
    h4_adjoint,
    load_catalog,
    restricted_primitive_example,
    sweedler_h4,
)
from partialhopf.errors import CharTwo, InvalidGroup, NotPrime, ParseError
from partialhopf.fields import QQ, PrimeField
from partialhopf.groups import CayleyTable
from partialhopf.hopf import verify_hopf


def test_every_catalog_name_loads():
    for name in CATALOG_NAMES:
        entry = load_catalog(name)
        assert "hopf" in entry
        assert verify_hopf(entry["hopf"]).ok
        if "partial_action" in entry:
            assert verify_partial_action(entry["partial_action"]).ok
        if "action" in entry:
            assert verify_module_algebra(entry["action"]).ok


def test_catalog_rejects_unknown_names():
    with pytest.raises(ParseError):
        load_catalog("no-such-example")
    with pytest.raises(ParseError):
        load_catalog("kZ2-swap:7")


def test_restricted_p_suffix_and_field():
    entry = load_catalog("restricted-p:5")
    assert entry["hopf"].dim == 5
    with pytest.raises(ParseError):
        load_catalog("restricted-p", field=PrimeField(3))


def test_catalog_over_prime_fields():
    for name in ("kZ2-swap", "kZ2-trivial-partial", "kZ2-corner", "sweedler-h4"):
        entry = load_catalog(name, field=PrimeField(7))
        assert verify_hopf(entry["hopf"]).ok


def test_restricted_examples():
    for p in (2, 3, 5):
        hopf, action, ideal = restricted_primitive_example(p)
        assert hopf.dim == p
        assert action.algebra.dim == p + 1
        assert verify_hopf(hopf).ok
        assert verify_module_algebra(action).ok
    with pytest.raises(NotPrime):
        restricted_primitive_example(4)


def test_sweedler_needs_odd_characteristic():
    assert verify_hopf(sweedler_h4(PrimeField(3))[0]).ok
    with pytest.raises(CharTwo):
        sweedler_h4(PrimeField(2))


def test_adjoint_action_table_frozen():
    adj = h4_adjoint(QQ)
    one = QQ.one
    act = adj.act
    # e1 acts as the identity on the group-like part and kills h1, h2
    assert act[0][0] == [one, 0, 0, 0]
    assert act[0][1] == [0, one, 0, 0]
    assert all(not c for c in act[0][2])
    assert all(not c for c in act[0][3])
    # e2 does the reverse
    assert all(not c for c in act[1][0])
    assert all(not c for c in act[1][1])
    assert act[1][2] == [0, 0, one, 0]
    assert act[1][3] == [0, 0, 0, one]
    # h1 |> e1 = h1 - h2, h1 |> e2 = h2 - h1
    assert act[2][0] == [0, 0, one, -one]
    assert act[2][1] == [0, 0, -one, one]
    assert all(not c for c in act[2][2])
    assert all(not c for c in act[2][3])
    # h2 acts by zero outright
    for j in range(4):
        assert all(not c for c in act[3][j])


def test_bad_cayley_table_is_rejected():
    with pytest.raises(InvalidGroup):
        CayleyTable(2, [[0, 1], [1, 1]])
