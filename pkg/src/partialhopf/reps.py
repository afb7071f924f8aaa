"""Partial representations of Hopf algebras and of groups.

A representation datum sends basis elements of H into a unital target
algebra: pi is a (dim target) x (dim H) matrix whose column i is the
image of the i-th basis element, in target coordinates.  The defining
identities are one-sided; no test may rely on their mirror images.
"""

from __future__ import annotations

from .actions import PartialActionData, verify_partial_action
from .algebras import AlgebraData, endomorphism_algebra, matrix_as_endo_vec
from .errors import CarrierEscape, NoUnit, PreconditionViolated, ShapeMismatch
from .groups import CayleyTable
from .hopf import HopfData, antipode_inverse
from .linalg import Matrix
from .reports import Report
from .smash import PartialSmash, partial_smash


def verify_partial_rep(h: HopfData, target: AlgebraData, pi: Matrix) -> Report:
    """pi(1) = 1 and the S^{-1}-twisted composition law on all basis pairs."""
    if target.unit is None:
        raise NoUnit("partial representations need a unital target")
    try:
        sinv = antipode_inverse(h)
    except Exception as exc:
        raise PreconditionViolated("antipode", "the antipode must be invertible") from exc
    if pi.rows != target.dim or pi.cols != h.dim:
        raise ShapeMismatch("pi must be (dim target) x (dim H)")

    rep = Report("partial-representation")
    F = target.field
    nh = h.dim

    un = rep.new_check("unit")
    got = pi.mul_vec(h.unit)
    un.require(got == list(target.unit), ("pi(1)",), got, target.unit)

    # sum pi(S^-1(h_2)) pi(h_1) pi(k) = sum pi(S^-1(h_2)) pi(h_1 k)
    comp = rep.new_check("twisted-composition")
    pis = [pi.col(i) for i in range(nh)]
    pis_inv = [pi.mul_vec(sinv.col(i)) for i in range(nh)]
    for i in range(nh):
        for j in range(nh):
            lhs = [F.zero] * target.dim
            rhs = [F.zero] * target.dim
            pk = pis[j]
            for p, q, c in h.comult_terms(i):
                left = pis_inv[q]
                l1 = target.mult_vec(left, target.mult_vec(pis[p], pk))
                r1 = target.mult_vec(left, pi.mul_vec(h.mult[p][j]))
                for t in range(target.dim):
                    if l1[t]:
                        lhs[t] = lhs[t] + c * l1[t]
                    if r1[t]:
                        rhs[t] = rhs[t] + c * r1[t]
            comp.require(lhs == rhs, (i, j), lhs, rhs)

    return rep


def canonical_rep_end(d: PartialActionData) -> tuple[AlgebraData, Matrix]:
    """pi(h) = the endomorphism a -> h.a of A, landing in End(A)."""
    pre = verify_partial_action(d)
    if not pre.ok:
        raise PreconditionViolated("partial-action", "canonical representations need a partial action")
    F = d.algebra.field
    na, nh = d.algebra.dim, d.hopf.dim
    target = endomorphism_algebra(F, na)
    cols = [matrix_as_endo_vec(d.act_matrix(i)) for i in range(nh)]
    pi = Matrix(F, [[cols[i][r] for i in range(nh)] for r in range(na * na)], cols=nh)
    rep = verify_partial_rep(d.hopf, target, pi)
    assert rep.ok, f"canonical End(A) representation failed:\n{rep.summary()}"
    return target, pi


def canonical_rep_smash(d: PartialActionData) -> tuple[PartialSmash, Matrix]:
    """pi(h) = sum (h_1 . 1) (x) h_2, landing in the partial smash product."""
    pre = verify_partial_action(d)
    if not pre.ok:
        raise PreconditionViolated("partial-action", "canonical representations need a partial action")
    ps = partial_smash(d)
    F = d.algebra.field
    na, nh = d.algebra.dim, d.hopf.dim
    cols = []
    for i in range(nh):
        v = [F.zero] * (na * nh)
        for p, q, c in d.hopf.comult_terms(i):
            moved = d.apply_basis(p, d.algebra.unit)
            for r in range(na):
                if moved[r]:
                    v[r * nh + q] = v[r * nh + q] + c * moved[r]
        coords = ps.carrier.coords_of(v)
        if coords is None:
            raise CarrierEscape(f"pi(h_{i}) lies outside the partial smash carrier")
        cols.append(coords)
    nc = ps.carrier.dim
    pi = Matrix(F, [[cols[i][r] for i in range(nh)] for r in range(nc)], cols=nh)
    rep = verify_partial_rep(d.hopf, ps.algebra, pi)
    assert rep.ok, f"canonical smash representation failed:\n{rep.summary()}"
    return ps, pi


def verify_group_partial_rep(g: CayleyTable, target: AlgebraData, pi: list) -> Report:
    """The three group partial-representation identities over all pairs."""
    if target.unit is None:
        raise NoUnit("partial representations need a unital target")
    if len(pi) != g.order or any(len(v) != target.dim for v in pi):
        raise ShapeMismatch("pi must give one target element per group element")

    rep = Report("group-partial-representation")
    n = g.order
    mv = target.mult_vec

    un = rep.new_check("unit")
    un.require(list(pi[g.identity]) == list(target.unit), ("pi(e)",), pi[g.identity], target.unit)

    ax2 = rep.new_check("right-composition")
    for a in range(n):
        for b in range(n):
            binv = g.inverse[b]
            lhs = mv(mv(pi[a], pi[b]), pi[binv])
            rhs = mv(pi[g.mul(a, b)], pi[binv])
            ax2.require(lhs == rhs, (a, b), lhs, rhs)

    ax3 = rep.new_check("left-composition")
    for a in range(n):
        ainv = g.inverse[a]
        for b in range(n):
            lhs = mv(pi[ainv], mv(pi[a], pi[b]))
            rhs = mv(pi[ainv], pi[g.mul(a, b)])
            ax3.require(lhs == rhs, (a, b), lhs, rhs)

    return rep
