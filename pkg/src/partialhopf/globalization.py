"""Globalization of partial Hopf actions.

A partial action of H on A extends to a global action on a (possibly
non-unital) algebra B containing A as a unital right ideal, with the
partial action recovered by cutting with the unit of A.  The standard
construction carves B out of Hom(H, A) under the convolution product:
elements are stored as dimA x dimH matrices (f(b_j) = column j) and
flattened row major into k^(dimA*dimH) to take spans.
"""

from __future__ import annotations

from dataclasses import dataclass

from .actions import ActionData, PartialActionData, verify_module_algebra, verify_partial_action
from .algebras import AlgebraData, solve_unit
from .errors import (
    ClosureViolation,
    InconsistentSystem,
    PreconditionViolated,
    ShapeMismatch,
)
from .hopf import hopf_tensors_equal
from .linalg import Matrix, Subspace
from .reports import Report


def hom_flatten(f: Matrix) -> list:
    """Row-major flattening of a Hom(H,A) element (dimA x dimH matrix)."""
    out = []
    for row in f.data:
        out.extend(row)
    return out


def hom_unflatten(field, v, dim_a, dim_h) -> Matrix:
    if len(v) != dim_a * dim_h:
        raise ShapeMismatch("flattened hom element has wrong length")
    return Matrix(field, [list(v[r * dim_h:(r + 1) * dim_h]) for r in range(dim_a)], cols=dim_h)


def conv_mul(hopf, algebra, f: Matrix, g: Matrix) -> Matrix:
    """Convolution in Hom(H, A): (f*g)(x) = sum f(x_1) g(x_2)."""
    F = algebra.field
    na, nh = algebra.dim, hopf.dim
    cols = [[F.zero] * na for _ in range(nh)]
    for i in range(nh):
        for p, q, c in hopf.comult_terms(i):
            term = algebra.mult_vec(f.col(p), g.col(q))
            for t in range(na):
                if term[t]:
                    cols[i][t] = cols[i][t] + c * term[t]
    return Matrix(F, [[cols[j][t] for j in range(nh)] for t in range(na)], cols=nh)


def h_translate(hopf, algebra, x_vec, f: Matrix) -> Matrix:
    """The translation action of H on Hom(H, A): (x |> f)(y) = f(y x)."""
    F = algebra.field
    na, nh = algebra.dim, hopf.dim
    cols = [[F.zero] * na for _ in range(nh)]
    for j in range(nh):
        for m, xm in enumerate(x_vec):
            if not xm:
                continue
            prod = hopf.mult[j][m]
            for i, c in enumerate(prod):
                if not c:
                    continue
                fc = f.col(i)
                s = xm * c
                for t in range(na):
                    if fc[t]:
                        cols[j][t] = cols[j][t] + s * fc[t]
    return Matrix(F, [[cols[j][t] for j in range(nh)] for t in range(na)], cols=nh)


def represent_map(d: PartialActionData, a_vec) -> Matrix:
    """phi(a) in Hom(H, A), phi(a)(x) = x . a."""
    nh = d.hopf.dim
    cols = [d.apply_basis(j, a_vec) for j in range(nh)]
    return Matrix(d.algebra.field, [[cols[j][t] for j in range(nh)] for t in range(d.algebra.dim)], cols=nh)


@dataclass
class EnvelopingAction:
    """A global action of H on B together with the embedding theta: A -> B."""

    partial: PartialActionData
    glob: ActionData
    theta: Matrix  # dimB x dimA

    def __post_init__(self):
        na = self.partial.algebra.dim
        nb = self.glob.algebra.dim
        if self.theta.rows != nb or self.theta.cols != na:
            raise ShapeMismatch("theta must be dimB x dimA")
        if not hopf_tensors_equal(self.partial.hopf, self.glob.hopf):
            raise ShapeMismatch("partial and global data use different Hopf algebras")

    def theta_one(self) -> list:
        return self.theta.mul_vec(self.partial.algebra.unit)

    def image_subspace(self) -> Subspace:
        na = self.partial.algebra.dim
        return Subspace.span(
            self.glob.algebra.field,
            [self.theta.col(j) for j in range(na)],
            self.glob.algebra.dim,
        )


def standard_enveloping(d: PartialActionData, *, check: bool = True) -> EnvelopingAction:
    """The minimal enveloping action B = H |> phi(A) inside Hom(H, A)."""
    if check:
        pre = verify_partial_action(d)
        if not pre.ok:
            raise PreconditionViolated(
                "partial-action", "globalization needs a verified partial action"
            )
    h, alg = d.hopf, d.algebra
    F = alg.field
    nh, na = h.dim, alg.dim
    amb = na * nh

    phis = [represent_map(d, alg.basis_vec(j)) for j in range(na)]
    gens = []
    for i in range(nh):
        xi = [F.one if m == i else F.zero for m in range(nh)]
        for j in range(na):
            gens.append(hom_flatten(h_translate(h, alg, xi, phis[j])))
    B = Subspace.span(F, gens, amb)
    nb = B.dim
    rows = [list(r) for r in B.basis.data]
    homs = [hom_unflatten(F, r, na, nh) for r in rows]

    mult = [[None] * nb for _ in range(nb)]
    for r in range(nb):
        for s in range(nb):
            prod = hom_flatten(conv_mul(h, alg, homs[r], homs[s]))
            coords = B.coords_of(prod)
            if coords is None:
                raise ClosureViolation("convolution escapes the span of translates")
            mult[r][s] = coords

    unit = solve_unit(F, nb, mult)
    balg = AlgebraData(F, nb, [f"u{r}" for r in range(nb)], mult, unit)

    act = []
    for i in range(nh):
        xi = [F.one if m == i else F.zero for m in range(nh)]
        plane = []
        for r in range(nb):
            moved = hom_flatten(h_translate(h, alg, xi, homs[r]))
            coords = B.coords_of(moved)
            if coords is None:
                raise ClosureViolation("translation escapes the span of translates")
            plane.append(coords)
        act.append(plane)
    glob = ActionData(h, balg, act)

    tcols = []
    for j in range(na):
        coords = B.coords_of(hom_flatten(phis[j]))
        if coords is None:
            raise ClosureViolation("phi(A) is not inside the span of translates")
        tcols.append(coords)
    theta = Matrix(F, [[tcols[j][r] for j in range(na)] for r in range(nb)], cols=na)

    return EnvelopingAction(d, glob, theta)


def verify_enveloping(env: EnvelopingAction) -> Report:
    """All conditions making (B, theta) an enveloping action of the partial action."""
    rep = Report("enveloping-action")
    d = env.partial
    glob = env.glob
    A, B = d.algebra, glob.algebra
    F = A.field
    nh, na, nb = d.hopf.dim, A.dim, B.dim

    rep.absorb(verify_module_algebra(glob), prefix="global-")
    rep.absorb(verify_partial_action(d), prefix="partial-")

    th = env.theta
    img = env.image_subspace()
    one = env.theta_one()

    mono = rep.new_check("theta-injective")
    mono.require(th.rank() == na, ("rank",), th.rank(), na)

    morph = rep.new_check("theta-multiplicative")
    for r in range(na):
        tr = th.col(r)
        for s in range(na):
            lhs = th.mul_vec(A.mult[r][s])
            rhs = B.mult_vec(tr, th.col(s))
            morph.require(lhs == rhs, (r, s), lhs, rhs)

    ideal = rep.new_check("image-right-ideal")
    for j in range(na):
        tj = th.col(j)
        for r in range(nb):
            prod = B.mult_vec(tj, B.basis_vec(r))
            ideal.require(img.contains(prod), (j, r), prod, "in theta(A)")

    iunit = rep.new_check("image-unit")
    for j in range(na):
        tj = th.col(j)
        left = B.mult_vec(one, tj)
        right = B.mult_vec(tj, one)
        iunit.require(left == tj, ("1*t", j), left, tj)
        iunit.require(right == tj, ("t*1", j), right, tj)

    ind = rep.new_check("induces-partial-action")
    for i in range(nh):
        for j in range(na):
            lhs = th.mul_vec(d.act[i][j])
            rhs = B.mult_vec(one, glob.apply_basis(i, th.col(j)))
            ind.require(lhs == rhs, (i, j), lhs, rhs)

    gen = rep.new_check("generated-by-translates")
    vecs = []
    for i in range(nh):
        for j in range(na):
            vecs.append(glob.apply_basis(i, th.col(j)))
    spanned = Subspace.span(F, vecs, nb)
    gen.require(spanned.dim == nb, ("dim",), spanned.dim, nb)

    return rep


def degenerate_submodule(env: EnvelopingAction) -> Subspace:
    """Largest H-submodule of B killed by left multiplication with theta(1)."""
    B = env.glob.algebra
    F = B.field
    nb = B.dim
    one = env.theta_one()
    lm = Matrix(
        F,
        [[B.mult_vec(one, B.basis_vec(r))[t] for r in range(nb)] for t in range(nb)],
        cols=nb,
    )
    M = Subspace.span(F, lm.nullspace(), nb)
    while M.dim > 0:
        Q = M.perp_constraints()
        rows = [list(r) for r in Q.data]
        for i in range(env.glob.hopf.dim):
            qa = Q.mul(env.glob.act_matrix(i))
            rows.extend(list(r) for r in qa.data)
        M2 = Subspace.span(F, Matrix(F, rows, cols=nb).nullspace(), nb)
        if M2 == M:
            break
        M = M2
    return M


def is_minimal(env: EnvelopingAction) -> bool:
    return degenerate_submodule(env).dim == 0


def morphism_to_standard(env: EnvelopingAction) -> tuple[Matrix, EnvelopingAction]:
    """The comparison map B -> B_std sending x |> theta(a) to x |> phi(a).

    Well defined for every enveloping action; injective exactly when the
    given envelope is minimal.
    """
    std = standard_enveloping(env.partial, check=False)
    d = env.partial
    F = d.algebra.field
    nh, na = d.hopf.dim, d.algebra.dim
    nbu, nbs = env.glob.algebra.dim, std.glob.algebra.dim

    gcols, tcols = [], []
    for i in range(nh):
        for j in range(na):
            gcols.append(env.glob.apply_basis(i, env.theta.col(j)))
            tcols.append(std.glob.apply_basis(i, std.theta.col(j)))
    m = len(gcols)
    G = Matrix(F, [[gcols[c][r] for c in range(m)] for r in range(nbu)], cols=m)
    T = Matrix(F, [[tcols[c][r] for c in range(m)] for r in range(nbs)], cols=m)

    for v in G.nullspace():
        if any(x for x in T.mul_vec(v)):
            raise InconsistentSystem(
                "relations among translates in B do not hold in the standard envelope"
            )

    gt = G.transpose()
    phi_rows_t = []
    for r in range(nbs):
        rhs = [T.data[r][c] for c in range(m)]
        sol = gt.solve(rhs)
        if sol is None:
            raise InconsistentSystem("comparison map system has no solution")
        phi_rows_t.append(sol)
    phi = Matrix(F, phi_rows_t, cols=nbu)
    return phi, std


def is_bilateral(d: PartialActionData) -> bool:
    """Whether h.(k.a) = sum (h_1 k . a)(h_2 . 1) holds; equivalent to theta(1) central."""
    h, alg = d.hopf, d.algebra
    F = alg.field
    nh, na = h.dim, alg.dim
    for i in range(nh):
        for g in range(nh):
            for j in range(na):
                lhs = d.apply_basis(i, d.act[g][j])
                rhs = [F.zero] * na
                for p, q, c in h.comult_terms(i):
                    pg = h.mult[p][g]
                    t1 = [F.zero] * na
                    for m, cm in enumerate(pg):
                        if not cm:
                            continue
                        row = d.act[m][j]
                        for t in range(na):
                            if row[t]:
                                t1[t] = t1[t] + cm * row[t]
                    term = alg.mult_vec(t1, d.apply_basis(q, alg.unit))
                    for t in range(na):
                        if term[t]:
                            rhs[t] = rhs[t] + c * term[t]
                if lhs != rhs:
                    return False
    return True


def theta_one_is_central(env: EnvelopingAction) -> bool:
    B = env.glob.algebra
    one = env.theta_one()
    for r in range(B.dim):
        e = B.basis_vec(r)
        if B.mult_vec(one, e) != B.mult_vec(e, one):
            return False
    return True


def image_is_two_sided(env: EnvelopingAction) -> bool:
    B = env.glob.algebra
    img = env.image_subspace()
    for j in range(env.partial.algebra.dim):
        tj = env.theta.col(j)
        for r in range(B.dim):
            if not img.contains(B.mult_vec(B.basis_vec(r), tj)):
                return False
    return True
