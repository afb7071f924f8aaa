"""Partial coactions and both directions of dualization."""

import pytest

from partialhopf.actions import RightIdealSpec, as_partial, induce_partial, is_total
from partialhopf.catalog import (
    corner_projection_kZ2,
    h4_partial_example,
    kZ2_swap,
    restricted_primitive_example,
    trivial_partial_kZ2,
)
from partialhopf.coactions import (
    CoactionData,
    CoModuleIdealSpec,
    action_from_coaction,
    coaction_from_action,
    enveloping_coaction,
    restrict_coaction,
    verify_partial_coaction,
)
from partialhopf.errors import NoUnit, ShapeMismatch
from partialhopf.fields import QQ
from partialhopf.hopf import canonical_pairing, hopf_tensors_equal
from partialhopf.linalg import Subspace, unit_vec


def _catalog_partials():
    yield trivial_partial_kZ2(QQ)
    yield as_partial(kZ2_swap(QQ))
    yield corner_projection_kZ2(QQ)
    yield h4_partial_example(QQ)[1]
    hopf, action, ideal = restricted_primitive_example(3)
    yield induce_partial(action, ideal)


def test_round_trip_is_the_identity():
    for d in _catalog_partials():
        c = coaction_from_action(d)
        assert verify_partial_coaction(c).ok
        back = action_from_coaction(c, canonical_pairing(c.hopf))
        assert back.act == d.act
        assert hopf_tensors_equal(back.hopf, d.hopf)


def test_partial_flag_tracks_totality():
    for d in _catalog_partials():
        c = coaction_from_action(d)
        assert c.partial == (not is_total(d))


def test_restriction_of_the_swap_comodule():
    swap = as_partial(kZ2_swap(QQ))
    amb = coaction_from_action(swap)
    assert not amb.partial
    ideal = RightIdealSpec(swap.algebra,
                           Subspace.span(QQ, [unit_vec(QQ, 2, 0)], 2),
                           unit_vec(QQ, 2, 0))
    got = restrict_coaction(CoModuleIdealSpec(amb, ideal))
    want = coaction_from_action(trivial_partial_kZ2(QQ))
    assert got.rho == want.rho
    assert got.partial


def test_restriction_rejects_partial_ambient():
    c = coaction_from_action(trivial_partial_kZ2(QQ))
    d = trivial_partial_kZ2(QQ)
    ideal = RightIdealSpec(d.algebra, Subspace.span(QQ, [unit_vec(QQ, 1, 0)], 1),
                           unit_vec(QQ, 1, 0))
    with pytest.raises(ShapeMismatch):
        CoModuleIdealSpec(c, ideal)


def test_restriction_rejects_foreign_ideal():
    swap = as_partial(kZ2_swap(QQ))
    amb = coaction_from_action(swap)
    corner = corner_projection_kZ2(QQ)
    ideal = RightIdealSpec(corner.algebra,
                           Subspace.span(QQ, [unit_vec(QQ, 3, 2)], 3),
                           unit_vec(QQ, 3, 2))
    with pytest.raises(ShapeMismatch):
        CoModuleIdealSpec(amb, ideal)


def test_partial_coaction_needs_a_unit():
    _, _, env = h4_partial_example(QQ)
    B = env.glob.algebra                     # two-dimensional, no unit
    h = env.glob.hopf
    rho = [[[QQ.zero] * h.dim for _ in range(2)] for _ in range(2)]
    with pytest.raises(NoUnit):
        CoactionData(h, B, rho, partial=True)


def test_tampered_coaction_fails_with_witnesses():
    c = coaction_from_action(trivial_partial_kZ2(QQ))
    rho = [[list(r) for r in plane] for plane in c.rho]
    rho[0][0][0] = QQ.of(2)
    rep = verify_partial_coaction(CoactionData(c.hopf, c.algebra, rho, partial=True))
    assert not rep.ok
    assert all(chk.failures for chk in rep.failed_checks())


def test_enveloping_coaction_trivial():
    c = coaction_from_action(trivial_partial_kZ2(QQ))
    cb, theta, rep = enveloping_coaction(c)
    assert rep.ok
    assert cb.algebra.dim == 2
    assert not cb.partial
    assert hopf_tensors_equal(cb.hopf, c.hopf)
    assert theta.rows == 2 and theta.cols == 1


def test_enveloping_coaction_h4():
    c = coaction_from_action(h4_partial_example(QQ)[1])
    cb, theta, rep = enveloping_coaction(c)
    assert rep.ok
    assert cb.algebra.dim == 1
    assert not cb.partial
