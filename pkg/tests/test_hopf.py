"""Hopf algebra data: verification, duals, pairings, antipode inverses."""

import pytest

from partialhopf.catalog import kZ2_hopf, sweedler_h4
from partialhopf.errors import SingularAntipode
from partialhopf.fields import QQ, PrimeField
from partialhopf.groups import CayleyTable, group_algebra
from partialhopf.hopf import (
    CoalgebraData,
    HopfData,
    antipode_inverse,
    canonical_pairing,
    dual_hopf,
    hopf_tensors_equal,
    verify_hopf,
    verify_pairing,
)
from partialhopf.linalg import Matrix


def test_kz2_verifies():
    assert verify_hopf(kZ2_hopf()).ok


def test_group_algebras_verify():
    assert verify_hopf(group_algebra(CayleyTable.symmetric(3), QQ)).ok
    assert verify_hopf(group_algebra(CayleyTable.cyclic(3), PrimeField(7))).ok


def test_h4_both_presentations_verify():
    idem, orig, C = sweedler_h4(QQ)
    assert verify_hopf(orig).ok
    assert verify_hopf(idem).ok
    # the change of basis really carries one presentation to the other
    from partialhopf.transport import transport_hopf
    moved = transport_hopf(orig, C, names=list(idem.basis_names))
    assert hopf_tensors_equal(moved, idem)


def test_h4_idempotent_tables():
    h, _, _ = sweedler_h4(QQ)
    e1, e2, h1, h2 = 0, 1, 2, 3
    one = QQ.one

    def prod(i, j):
        return h.mult[i][j]

    assert prod(e1, e1)[e1] == 1 and sum(1 for c in prod(e1, e1) if c) == 1
    assert all(not c for c in prod(e1, e2))
    assert all(not c for c in prod(e1, h1))         # e1 h1 = 0
    assert prod(e2, h1) == [0, 0, one, 0]           # e2 h1 = h1
    assert prod(h1, e1) == [0, 0, one, 0]           # h1 e1 = h1
    assert all(not c for c in prod(h1, e2))
    assert all(not c for c in prod(h1, h1))
    assert all(not c for c in prod(h1, h2))
    assert h.unit == [one, one, QQ.zero, QQ.zero]

    assert h.counit == [one, QQ.zero, QQ.zero, QQ.zero]

    # comultiplication planes, written out in full
    def delta(i):
        return {(j, k): c for j, row in enumerate(h.comult[i]) for k, c in enumerate(row) if c}

    assert delta(e1) == {(e1, e1): 1, (e2, e2): 1}
    assert delta(e2) == {(e1, e2): 1, (e2, e1): 1}
    assert delta(h1) == {(e1, h1): 1, (e2, h2): -1, (h1, e1): 1, (h2, e2): 1}
    assert delta(h2) == {(e1, h2): 1, (e2, h1): -1, (h1, e2): 1, (h2, e1): 1}

    assert h.antipode.col(e1) == [one, 0, 0, 0]
    assert h.antipode.col(e2) == [0, one, 0, 0]
    assert h.antipode.col(h1) == [0, 0, 0, -one]    # S(h1) = -h2
    assert h.antipode.col(h2) == [0, 0, one, 0]     # S(h2) = h1


def test_h4_antipode_inverse_frozen():
    h, _, _ = sweedler_h4(QQ)
    sinv = antipode_inverse(h)
    assert sinv.col(2) == [0, 0, 0, QQ.one]     # S^-1(h1) = h2
    assert sinv.col(3) == [0, 0, -QQ.one, 0]    # S^-1(h2) = -h1
    assert sinv.mul(h.antipode) == Matrix.identity(QQ, 4)


def test_broken_antipode_is_caught():
    h = kZ2_hopf()
    bad = HopfData(h.algebra, h.coalgebra, Matrix.build(QQ, [[1, 0], [1, 1]]))
    rep = verify_hopf(bad)
    assert not rep.ok
    names = {c.name for c in rep.failed_checks()}
    assert "antipode-left" in names or "antipode-right" in names
    for c in rep.failed_checks():
        assert c.failures  # every failed check carries witnesses


def test_scaled_counit_is_caught():
    h = kZ2_hopf()
    two = QQ.of(2)
    co = CoalgebraData(h.dim, h.comult, [two * c for c in h.counit])
    rep = verify_hopf(HopfData(h.algebra, co, h.antipode))
    assert not rep.ok
    assert any(c.name == "counit" for c in rep.failed_checks())


def test_dual_is_an_involution():
    for h in (kZ2_hopf(), sweedler_h4(QQ)[0]):
        dd = dual_hopf(dual_hopf(h))
        assert hopf_tensors_equal(dd, h)
        assert verify_hopf(dual_hopf(h)).ok


def test_canonical_pairing():
    h, _, _ = sweedler_h4(QQ)
    p = canonical_pairing(h)
    assert verify_pairing(p, require_nondegenerate=True).ok


def test_rank_one_pairing_is_degenerate():
    # <x, y> = eps(x) y(1) satisfies the pairing axioms but is degenerate
    h = kZ2_hopf()
    hd = dual_hopf(h)
    gram = Matrix(QQ, [[h.counit[i] * h.unit[j] for j in range(2)] for i in range(2)])
    from partialhopf.hopf import PairingData
    p = PairingData(h, hd, gram)
    assert verify_pairing(p).ok
    rep = verify_pairing(p, require_nondegenerate=True)
    assert not rep.ok
    assert any(c.name == "nondegenerate" for c in rep.failed_checks())


def test_singular_antipode_raises():
    h = kZ2_hopf()
    bad = HopfData(h.algebra, h.coalgebra, Matrix.build(QQ, [[1, 1], [1, 1]]))
    with pytest.raises(SingularAntipode):
        antipode_inverse(bad)
