"""Module algebras, partial actions, induction, quotients, group data."""

import pytest

from partialhopf.actions import (
    PartialActionData,
    RightIdealSpec,
    as_partial,
    check_equivalence,
    induce_partial,
    is_total,
    partial_action_from_group,
    quotient_module_algebra,
    verify_module_algebra,
    verify_partial_action,
)
from partialhopf.algebras import AlgebraData
from partialhopf.catalog import (
    corner_projection_kZ2,
    h4_adjoint,
    h4_partial_example,
    kZ2_swap,
    restricted_primitive_example,
    trivial_partial_kZ2,
)
from partialhopf.errors import (
    GroupAxiomViolation,
    NoUnit,
    NotARightIdeal,
    NotAnIdeal,
    NotASubmodule,
)
from partialhopf.fields import QQ, PrimeField
from partialhopf.groups import CayleyTable
from partialhopf.linalg import Matrix, Subspace, unit_vec


def test_module_algebras_verify():
    assert verify_module_algebra(kZ2_swap(QQ)).ok
    assert verify_module_algebra(kZ2_swap(PrimeField(7))).ok
    assert verify_module_algebra(h4_adjoint(QQ)).ok


def test_partial_actions_verify():
    for d in (trivial_partial_kZ2(QQ), corner_projection_kZ2(QQ)):
        assert verify_partial_action(d).ok


def test_total_implies_partial():
    d = as_partial(kZ2_swap(QQ))
    assert verify_partial_action(d).ok
    assert is_total(d)


def test_trivial_partial_is_not_total():
    d = trivial_partial_kZ2(QQ)
    assert verify_partial_action(d).ok
    assert not is_total(d)


def test_corner_action_is_genuinely_partial():
    assert not is_total(corner_projection_kZ2(QQ))


def test_tampered_action_fails_with_witnesses():
    d = corner_projection_kZ2(QQ)
    act = [[list(r) for r in plane] for plane in d.act]
    act[1][2][2] = QQ.of(2)  # g scales E22, breaking multiplicativity
    rep = verify_partial_action(PartialActionData(d.hopf, d.algebra, act))
    assert not rep.ok
    assert all(c.failures for c in rep.failed_checks())


def test_induced_h4_partial_frozen():
    _, partial, _ = h4_partial_example(QQ)
    assert partial.algebra.dim == 1
    assert partial.act[0][0][0] == 1            # e1 . e1bar = e1bar
    for i in (1, 2, 3):
        assert not partial.act[i][0][0]         # e2, h1, h2 all act by zero
    assert is_total(partial)
    assert verify_partial_action(partial).ok


def test_induced_restricted_kills_the_unit():
    for p in (2, 3, 5):
        hopf, action, ideal = restricted_primitive_example(p)
        part = induce_partial(action, ideal)
        one = part.algebra.unit
        assert part.apply_basis(0, one) == one
        for k in range(1, p):
            z = part.apply_basis(k, one)
            assert all(not c for c in z)        # x^k . 1 = 0
        assert is_total(part)


def test_right_ideal_spec_rejects_non_ideal():
    d = corner_projection_kZ2(QQ)
    A = d.algebra
    # span{E11} is not a right ideal: E11 E12 = E12 escapes
    bad = RightIdealSpec(A, Subspace.span(QQ, [unit_vec(QQ, 3, 0)], 3), unit_vec(QQ, 3, 0))
    with pytest.raises(NotARightIdeal):
        bad.validate()


def test_right_ideal_spec_needs_a_unit():
    d = corner_projection_kZ2(QQ)
    # span{E12} is a right ideal but E12^2 = 0, so no unit exists in it
    ideal = RightIdealSpec(d.algebra, Subspace.span(QQ, [unit_vec(QQ, 3, 1)], 3),
                           unit_vec(QQ, 3, 1))
    with pytest.raises(NoUnit):
        ideal.validate()


def test_quotient_reproduces_catalog_quotient():
    bbar, _, _ = h4_partial_example(QQ)
    adj = h4_adjoint(QQ)
    got, proj = quotient_module_algebra(adj, [unit_vec(QQ, 4, 3)])
    assert got.algebra.dim == 3
    assert proj.rows == 3 and proj.cols == 4
    assert got.algebra.mult == bbar.algebra.mult
    assert got.act == bbar.act


def test_quotient_rejects_non_ideal():
    adj = h4_adjoint(QQ)
    with pytest.raises(NotAnIdeal):
        quotient_module_algebra(adj, [unit_vec(QQ, 4, 0)])   # span{e1}


def test_quotient_rejects_unstable_ideal():
    d = kZ2_swap(QQ)
    with pytest.raises(NotASubmodule):
        quotient_module_algebra(d, [unit_vec(QQ, 2, 0)])     # g swaps the factors


def _projection_group_data():
    # Z2 acting on k x k through the central idempotent (0, 1)
    F = QQ
    A = AlgebraData(F, 2, ["u1", "u2"],
                    [[[F.one, F.zero], [F.zero, F.zero]],
                     [[F.zero, F.zero], [F.zero, F.one]]],
                    [F.one, F.one])
    g = CayleyTable.cyclic(2)
    domains = [[F.one, F.one], [F.zero, F.one]]
    alphas = [Matrix.identity(F, 2), Matrix.build(F, [[0, 0], [0, 1]])]
    return g, A, domains, alphas


def test_group_data_builds_partial_action():
    g, A, domains, alphas = _projection_group_data()
    d = partial_action_from_group(g, A, domains, alphas)
    assert verify_partial_action(d).ok
    assert not is_total(d)
    # same thing written down directly
    F = QQ
    act = [[[F.one, F.zero], [F.zero, F.one]],
           [[F.zero, F.zero], [F.zero, F.one]]]
    direct = PartialActionData(d.hopf, A, act)
    rep = check_equivalence(d, direct, Matrix.identity(F, 2))
    assert rep.ok


def test_group_data_violations_are_caught():
    g, A, domains, alphas = _projection_group_data()
    with pytest.raises(GroupAxiomViolation):
        partial_action_from_group(g, A, domains,
                                  [alphas[0], Matrix.build(QQ, [[0, 1], [1, 0]])])
    # non-central domain idempotent: E22 inside the corner algebra
    corner = corner_projection_kZ2(QQ)
    doms = [list(corner.algebra.unit), unit_vec(QQ, 3, 2)]
    eye = Matrix.identity(QQ, 3)
    with pytest.raises(GroupAxiomViolation):
        partial_action_from_group(CayleyTable.cyclic(2), corner.algebra, doms, [eye, eye])


def test_equivalence_rejects_non_morphism():
    d = trivial_partial_kZ2(QQ)
    other = PartialActionData(d.hopf, d.algebra, [[[QQ.one]], [[QQ.one]]])
    rep = check_equivalence(d, other, Matrix.identity(QQ, 1))
    assert not rep.ok
