"""Actions and partial actions of a Hopf algebra on an algebra.

An action datum is a tensor act[i][j][k] with
h_i . a_j = sum_k act[i][j][k] a_k.  Module-algebra data may act on a
non-unital algebra; partial actions require a unital carrier.  The
induced partial action restricts a global action to a unital right
ideal: h . a = 1_A (h |> a).
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebras import AlgebraData, verify_algebra
from .errors import (
    GroupAxiomViolation,
    NoUnit,
    NotAnIdeal,
    NotARightIdeal,
    NotASubmodule,
    PreconditionViolated,
    ShapeMismatch,
)
from .groups import CayleyTable, group_algebra
from .hopf import HopfData
from .linalg import Matrix, Subspace, unit_vec
from .reports import Report


@dataclass
class ActionData:
    """A linear action of H on an algebra, candidate module-algebra datum."""

    hopf: HopfData
    algebra: AlgebraData
    act: list  # act[i][j][k]

    def __post_init__(self):
        nh, na = self.hopf.dim, self.algebra.dim
        if len(self.act) != nh or any(
            len(p) != na or any(len(r) != na for r in p) for p in self.act
        ):
            raise ShapeMismatch("action tensor is not dimH x dimA x dimA")

    def apply_basis(self, i, a_vec):
        """h_i . a for a coordinate vector a."""
        na = self.algebra.dim
        out = [self.algebra.field.zero] * na
        plane = self.act[i]
        for j, x in enumerate(a_vec):
            if not x:
                continue
            row = plane[j]
            for k in range(na):
                if row[k]:
                    out[k] = out[k] + x * row[k]
        return out

    def apply(self, h_vec, a_vec):
        na = self.algebra.dim
        out = [self.algebra.field.zero] * na
        for i, c in enumerate(h_vec):
            if not c:
                continue
            w = self.apply_basis(i, a_vec)
            for k in range(na):
                if w[k]:
                    out[k] = out[k] + c * w[k]
        return out

    def act_matrix(self, i) -> Matrix:
        """Matrix of a |-> h_i . a (columns are images of basis vectors)."""
        na = self.algebra.dim
        return Matrix(
            self.algebra.field,
            [[self.act[i][j][k] for j in range(na)] for k in range(na)],
            cols=na,
        )


class PartialActionData(ActionData):
    """Same shape as ActionData; the carrier algebra must be unital."""

    def __post_init__(self):
        super().__post_init__()
        if self.algebra.unit is None:
            raise NoUnit("a partial action needs a unital carrier algebra")


def verify_module_algebra(d: ActionData) -> Report:
    """The four module-algebra axioms; the unit axiom is skipped when A has no unit."""
    rep = Report("module-algebra")
    h, alg = d.hopf, d.algebra
    F = alg.field
    nh, na = h.dim, alg.dim

    multb = rep.new_check("action-multiplicative")
    for i in range(nh):
        for j in range(na):
            for k in range(na):
                lhs = d.apply_basis(i, alg.mult[j][k])
                rhs = [F.zero] * na
                for p, q, c in h.comult_terms(i):
                    term = alg.mult_vec(d.act[p][j], d.act[q][k])
                    for t in range(na):
                        if term[t]:
                            rhs[t] = rhs[t] + c * term[t]
                multb.require(lhs == rhs, (i, j, k), lhs, rhs)

    unit_act = rep.new_check("action-unit")
    for j in range(na):
        e = alg.basis_vec(j)
        got = d.apply(h.unit, e)
        unit_act.require(got == e, (j,), got, e)

    comp = rep.new_check("action-composition")
    for i in range(nh):
        for i2 in range(nh):
            prod = h.mult[i][i2]
            for j in range(na):
                lhs = d.apply_basis(i, d.act[i2][j])
                rhs = [F.zero] * na
                for m, c in enumerate(prod):
                    if not c:
                        continue
                    row = d.act[m][j]
                    for t in range(na):
                        if row[t]:
                            rhs[t] = rhs[t] + c * row[t]
                comp.require(lhs == rhs, (i, i2, j), lhs, rhs)

    if alg.unit is not None:
        cu = rep.new_check("action-counit-unit")
        for i in range(nh):
            got = d.apply_basis(i, alg.unit)
            want = [h.counit[i] * u for u in alg.unit]
            cu.require(got == want, (i,), got, want)

    return rep


def verify_partial_action(d: PartialActionData) -> Report:
    """The three partial-action axioms on all basis tuples."""
    rep = Report("partial-action")
    h, alg = d.hopf, d.algebra
    if alg.unit is None:
        raise NoUnit("partial action verification needs a unital carrier")
    F = alg.field
    nh, na = h.dim, alg.dim

    multb = rep.new_check("partial-multiplicative")
    for i in range(nh):
        for j in range(na):
            for k in range(na):
                lhs = d.apply_basis(i, alg.mult[j][k])
                rhs = [F.zero] * na
                for p, q, c in h.comult_terms(i):
                    term = alg.mult_vec(d.act[p][j], d.act[q][k])
                    for t in range(na):
                        if term[t]:
                            rhs[t] = rhs[t] + c * term[t]
                multb.require(lhs == rhs, (i, j, k), lhs, rhs)

    unit_act = rep.new_check("partial-unit")
    for j in range(na):
        e = alg.basis_vec(j)
        got = d.apply(h.unit, e)
        unit_act.require(got == e, (j,), got, e)

    comp = rep.new_check("partial-composition")
    for i in range(nh):
        for g in range(nh):
            for j in range(na):
                lhs = d.apply_basis(i, d.act[g][j])
                rhs = [F.zero] * na
                for p, q, c in h.comult_terms(i):
                    t1 = d.apply_basis(p, alg.unit)
                    hg = h.mult[q][g]
                    t2 = [F.zero] * na
                    for m, cm in enumerate(hg):
                        if not cm:
                            continue
                        row = d.act[m][j]
                        for t in range(na):
                            if row[t]:
                                t2[t] = t2[t] + cm * row[t]
                    term = alg.mult_vec(t1, t2)
                    for t in range(na):
                        if term[t]:
                            rhs[t] = rhs[t] + c * term[t]
                comp.require(lhs == rhs, (i, g, j), lhs, rhs)

    return rep


def as_partial(d: ActionData) -> PartialActionData:
    """Reread a module-algebra action as a (then automatically total) partial action."""
    return PartialActionData(d.hopf, d.algebra, d.act)


@dataclass
class RightIdealSpec:
    """A right ideal of an ambient algebra carrying its own unit element."""

    ambient: AlgebraData
    subspace: Subspace
    unit_elem: list

    def validate(self):
        amb = self.ambient
        if self.subspace.ambient_dim != amb.dim:
            raise ShapeMismatch("ideal subspace has wrong ambient dimension")
        if len(self.unit_elem) != amb.dim:
            raise ShapeMismatch("ideal unit vector has wrong length")
        if not self.subspace.contains(self.unit_elem):
            raise NoUnit("ideal unit does not lie in the subspace")
        for r, row in enumerate(self.subspace.basis.data):
            for j in range(amb.dim):
                prod = amb.mult_vec(row, amb.basis_vec(j))
                if not self.subspace.contains(prod):
                    raise NotARightIdeal(
                        f"basis vector {r} times ambient basis {j} escapes the subspace"
                    )
        for r, row in enumerate(self.subspace.basis.data):
            left = amb.mult_vec(self.unit_elem, row)
            right = amb.mult_vec(row, self.unit_elem)
            if left != list(row) or right != list(row):
                raise NoUnit(f"ideal unit does not act as identity on basis vector {r}")

    def restricted_algebra(self, names=None) -> AlgebraData:
        """The ideal as an abstract algebra on its canonical basis."""
        amb = self.ambient
        rows = self.subspace.basis.data
        r = len(rows)
        mult = [[None] * r for _ in range(r)]
        for a in range(r):
            for b in range(r):
                prod = amb.mult_vec(rows[a], rows[b])
                coords = self.subspace.coords_of(prod)
                if coords is None:
                    raise NotARightIdeal("subspace is not closed under its own products")
                mult[a][b] = coords
        unit = self.subspace.coords_of(self.unit_elem)
        if names is None:
            names = [f"a{i}" for i in range(r)]
        return AlgebraData(amb.field, r, names, mult, unit)


def induce_partial(d: ActionData, ideal: RightIdealSpec) -> PartialActionData:
    """Partial action h . a = 1_A (h |> a) on a unital right ideal A of a module algebra."""
    if ideal.ambient is not d.algebra and ideal.ambient != d.algebra:
        raise ShapeMismatch("ideal does not live in the acted algebra")
    ideal.validate()
    pre = verify_module_algebra(d)
    if not pre.ok:
        raise PreconditionViolated("module-algebra", "induce_partial needs a verified module algebra")
    sub = ideal.restricted_algebra()
    rows = ideal.subspace.basis.data
    nh = d.hopf.dim
    act = []
    for i in range(nh):
        plane = []
        for row in rows:
            moved = d.apply_basis(i, row)
            cut = d.algebra.mult_vec(ideal.unit_elem, moved)
            coords = ideal.subspace.coords_of(cut)
            if coords is None:
                raise NotARightIdeal("1_A (h |> a) escapes the ideal")
            plane.append(coords)
        act.append(plane)
    out = PartialActionData(d.hopf, sub, act)
    check = verify_partial_action(out)
    assert check.ok, f"induced partial action failed its own axioms:\n{check.summary()}"
    return out


def is_total(d: PartialActionData) -> bool:
    """Whether the partial action is an honest module-algebra action."""
    h, alg = d.hopf, d.algebra
    nh, na = h.dim, alg.dim
    for i in range(nh):
        want = [h.counit[i] * u for u in alg.unit]
        if d.apply_basis(i, alg.unit) != want:
            return False
    for i in range(nh):
        for g in range(nh):
            prod = h.mult[i][g]
            for j in range(na):
                lhs = d.apply_basis(i, d.act[g][j])
                rhs = [alg.field.zero] * na
                for m, c in enumerate(prod):
                    if not c:
                        continue
                    row = d.act[m][j]
                    for t in range(na):
                        if row[t]:
                            rhs[t] = rhs[t] + c * row[t]
                if lhs != rhs:
                    return False
    return True


def check_equivalence(d1: PartialActionData, d2: PartialActionData, theta: Matrix,
                      require: str = "iso") -> Report:
    """Whether theta: A1 -> A2 is an equivariant algebra morphism (mono/iso as asked)."""
    if require not in ("morphism", "mono", "iso"):
        raise ValueError("require must be morphism, mono, or iso")
    rep = Report("equivalence")
    a1, a2 = d1.algebra, d2.algebra
    if theta.rows != a2.dim or theta.cols != a1.dim:
        raise ShapeMismatch("theta must be dimA2 x dimA1")

    mc = rep.new_check("morphism-multiplicative")
    for r in range(a1.dim):
        tr = theta.col(r)
        for s in range(a1.dim):
            lhs = theta.mul_vec(a1.mult[r][s])
            rhs = a2.mult_vec(tr, theta.col(s))
            mc.require(lhs == rhs, (r, s), lhs, rhs)

    uc = rep.new_check("morphism-unit")
    got = theta.mul_vec(a1.unit)
    uc.require(got == list(a2.unit), ("unit",), got, a2.unit)

    eq = rep.new_check("equivariance")
    nh = d1.hopf.dim
    for i in range(nh):
        for r in range(a1.dim):
            lhs = theta.mul_vec(d1.act[i][r])
            rhs = d2.apply_basis(i, theta.col(r))
            eq.require(lhs == rhs, (i, r), lhs, rhs)

    if require in ("mono", "iso"):
        inj = rep.new_check("injective")
        inj.require(theta.rank() == a1.dim, ("rank",), theta.rank(), a1.dim)
    if require == "iso":
        sur = rep.new_check("surjective")
        sur.require(theta.rank() == a2.dim, ("rank",), theta.rank(), a2.dim)

    return rep


def quotient_module_algebra(d: ActionData, ideal_gens) -> tuple[ActionData, Matrix]:
    """Quotient of a module algebra by an H-stable two-sided ideal.

    Returns the quotient action and the projection matrix.  The quotient
    basis consists of the ambient basis vectors away from the ideal's
    pivot columns.
    """
    alg = d.algebra
    F = alg.field
    n = alg.dim
    I = Subspace.span(F, list(ideal_gens), n)
    for r, row in enumerate(I.basis.data):
        for j in range(n):
            if not I.contains(alg.mult_vec(row, alg.basis_vec(j))):
                raise NotAnIdeal(f"ideal basis {r} times basis {j} escapes")
            if not I.contains(alg.mult_vec(alg.basis_vec(j), row)):
                raise NotAnIdeal(f"basis {j} times ideal basis {r} escapes")
        for i in range(d.hopf.dim):
            if not I.contains(d.apply_basis(i, row)):
                raise NotASubmodule(f"h_{i} moves ideal basis {r} out of the ideal")

    pivset = set(I.pivots)
    comp = [j for j in range(n) if j not in pivset]
    q = len(comp)

    def project(v):
        residue = list(v)
        for r, pc in enumerate(I.pivots):
            c = residue[pc]
            if c:
                residue = [a - c * b for a, b in zip(residue, I.basis.data[r])]
        return [residue[c] for c in comp]

    cols = [project(unit_vec(F, n, j)) for j in range(n)]
    proj = Matrix(F, [[cols[j][r] for j in range(n)] for r in range(q)], cols=n)

    names = [f"{alg.basis_names[c]}~" for c in comp]
    mult = [[project(alg.mult[comp[r]][comp[s]]) for s in range(q)] for r in range(q)]
    unit = project(alg.unit) if alg.unit is not None else None
    qalg = AlgebraData(F, q, names, mult, unit)
    act = [[project(d.act[i][comp[r]]) for r in range(q)] for i in range(d.hopf.dim)]
    out = ActionData(d.hopf, qalg, act)
    check = verify_module_algebra(out)
    assert check.ok, f"quotient failed module-algebra axioms:\n{check.summary()}"
    return out, proj


def partial_action_from_group(g: CayleyTable, algebra: AlgebraData, domains, alphas) -> PartialActionData:
    """Partial kG-action from a classical partial group action with central domain units.

    domains[i] is the central idempotent 1_{g_i} spanning D_{g_i} = A 1_{g_i};
    alphas[i] is a matrix whose restriction to D_{g_i^{-1}} is the isomorphism
    onto D_{g_i}.  Only this direction (group data to kG partial action) is
    provided.
    """
    g.validate()
    if algebra.unit is None:
        raise NoUnit("the partial action carrier must be unital")
    n = g.order
    F = algebra.field
    na = algebra.dim
    if len(domains) != n or len(alphas) != n:
        raise ShapeMismatch("need one domain idempotent and one alpha per group element")
    for i in range(n):
        if len(domains[i]) != na:
            raise ShapeMismatch(f"domain idempotent {i} has wrong length")
        if alphas[i].rows != na or alphas[i].cols != na:
            raise ShapeMismatch(f"alpha {i} is not dimA x dimA")

    e = g.identity
    if list(domains[e]) != list(algebra.unit):
        raise GroupAxiomViolation("1_e must be the unit of A", pair=(e, e))
    if alphas[e] != Matrix.identity(F, na):
        raise GroupAxiomViolation("alpha_e must be the identity", pair=(e, e))

    for i in range(n):
        u = domains[i]
        if algebra.mult_vec(u, u) != list(u):
            raise GroupAxiomViolation(f"1_g is not idempotent for g={i}", pair=(i, i))
        for j in range(na):
            b = algebra.basis_vec(j)
            if algebra.mult_vec(u, b) != algebra.mult_vec(b, u):
                raise GroupAxiomViolation(f"1_g is not central for g={i}", pair=(i, i))

    def dom(i) -> Subspace:
        vecs = [algebra.mult_vec(algebra.basis_vec(j), domains[i]) for j in range(na)]
        return Subspace.span(F, vecs, na)

    doms = [dom(i) for i in range(n)]
    for i in range(n):
        inv = g.inverse[i]
        got = alphas[i].mul_vec(domains[inv])
        if got != list(domains[i]):
            raise GroupAxiomViolation(
                f"alpha_g(1_(g^-1)) != 1_g for g={i}", pair=(i, inv)
            )
        src = doms[inv]
        img = Subspace.span(F, [alphas[i].mul_vec(list(r)) for r in src.basis.data], na)
        if img != doms[i]:
            raise GroupAxiomViolation(f"alpha_g does not map D_(g^-1) onto D_g for g={i}", pair=(i, inv))
        for r in src.basis.data:
            for s in src.basis.data:
                lhs = alphas[i].mul_vec(algebra.mult_vec(list(r), list(s)))
                rhs = algebra.mult_vec(alphas[i].mul_vec(list(r)), alphas[i].mul_vec(list(s)))
                if lhs != rhs:
                    raise GroupAxiomViolation(f"alpha_g not multiplicative on D_(g^-1) for g={i}", pair=(i, inv))

    for i in range(n):
        for j in range(n):
            ij = g.mul(i, j)
            lhs = alphas[i].mul_vec(algebra.mult_vec(domains[g.inverse[i]], domains[j]))
            rhs = algebra.mult_vec(domains[i], domains[ij])
            if lhs != rhs:
                raise GroupAxiomViolation(
                    f"alpha_g(1_(g^-1) 1_h) != 1_g 1_(gh) for (g,h)=({i},{j})", pair=(i, j)
                )
            for t in range(na):
                y = algebra.mult_vec(
                    algebra.mult_vec(algebra.basis_vec(t), domains[g.inverse[j]]),
                    domains[g.inverse[ij]],
                )
                lhs2 = alphas[i].mul_vec(alphas[j].mul_vec(y))
                rhs2 = alphas[ij].mul_vec(y)
                if lhs2 != rhs2:
                    raise GroupAxiomViolation(
                        f"composition rule fails for (g,h)=({i},{j})", pair=(i, j)
                    )

    hopf = group_algebra(g, F)
    act = []
    for i in range(n):
        inv = g.inverse[i]
        plane = []
        for j in range(na):
            cut = algebra.mult_vec(algebra.basis_vec(j), domains[inv])
            plane.append(alphas[i].mul_vec(cut))
        act.append(plane)
    out = PartialActionData(hopf, algebra, act)
    check = verify_partial_action(out)
    assert check.ok, f"group partial action failed Hopf partial axioms:\n{check.summary()}"
    return out
