"""Smash products, the partial smash product, and the Morita context.

Elements of B (x) H are flattened row major: index (b, h) -> b*dimH + h.
The smash product multiplies by (b#h)(c#k) = sum b(h_1 |> c) # h_2 k.  For
a partial action the same bilinear formula on A (x) H is associative but
1 (x) 1 is only a left unit; restricting to the carrier
(A (x) H)(1 (x) 1) makes it two-sided, and that carrier is the partial
smash product.
"""

from __future__ import annotations

from dataclasses import dataclass

from .actions import ActionData, PartialActionData
from .algebras import AlgebraData, verify_algebra
from .errors import ClosureViolation, PreconditionViolated, ShapeMismatch
from .globalization import EnvelopingAction, is_bilateral
from .hopf import antipode_inverse
from .linalg import Matrix, Subspace
from .reports import Report


def smash_mul_vec(d: ActionData, x, y):
    """The smash/ambient product of flattened tensors over d's algebra and Hopf."""
    h, alg = d.hopf, d.algebra
    F = alg.field
    nh, nb = h.dim, alg.dim
    n = nb * nh
    if len(x) != n or len(y) != n:
        raise ShapeMismatch("flattened smash elements must have length dimB*dimH")
    out = [F.zero] * n
    for b in range(nb):
        for hi in range(nh):
            cx = x[b * nh + hi]
            if not cx:
                continue
            for c in range(nb):
                for k in range(nh):
                    cy = y[c * nh + k]
                    if not cy:
                        continue
                    s = cx * cy
                    for p, q, cc in h.comult_terms(hi):
                        left = alg.mult_vec(alg.basis_vec(b), d.act[p][c])
                        right = h.mult[q][k]
                        for r in range(nb):
                            if not left[r]:
                                continue
                            lr = s * cc * left[r]
                            for t in range(nh):
                                if right[t]:
                                    out[r * nh + t] = out[r * nh + t] + lr * right[t]
    return out


def tensor_flatten(field, b_vec, h_vec):
    nh = len(h_vec)
    out = [field.zero] * (len(b_vec) * nh)
    for r, br in enumerate(b_vec):
        if not br:
            continue
        for s, hs in enumerate(h_vec):
            if hs:
                out[r * nh + s] = br * hs
    return out


@dataclass
class SmashAlgebra:
    """B#H for a module algebra B, as a structure-constant algebra."""

    action: ActionData
    algebra: AlgebraData

    def index(self, b: int, h: int) -> int:
        return b * self.action.hopf.dim + h


def smash_product(d: ActionData) -> SmashAlgebra:
    """The smash product of a module algebra; associativity checked on all triples."""
    h, alg = d.hopf, d.algebra
    F = alg.field
    nh, nb = h.dim, alg.dim
    n = nb * nh
    mult = []
    for b in range(nb):
        for hi in range(nh):
            x = [F.zero] * n
            x[b * nh + hi] = F.one
            row = []
            for c in range(nb):
                for k in range(nh):
                    y = [F.zero] * n
                    y[c * nh + k] = F.one
                    row.append(smash_mul_vec(d, x, y))
            mult.append(row)
    unit = tensor_flatten(F, alg.unit, h.unit) if alg.unit is not None else None
    names = [f"{bn}#{hn}" for bn in alg.basis_names for hn in h.algebra.basis_names]
    out = AlgebraData(F, n, names, mult, unit)
    rep = verify_algebra(out)
    assert rep.ok, f"smash product failed algebra axioms:\n{rep.summary()}"
    return SmashAlgebra(d, out)


@dataclass
class PartialSmash:
    """The partial smash product: the unital carrier inside A (x) H."""

    action: PartialActionData
    carrier: Subspace
    algebra: AlgebraData

    def ambient_mul(self, x, y):
        return smash_mul_vec(self.action, x, y)

    def one_ambient(self) -> list:
        d = self.action
        return tensor_flatten(d.algebra.field, d.algebra.unit, d.hopf.unit)


def partial_smash(d: PartialActionData) -> PartialSmash:
    """Carrier = span{(a_j (x) h_i)(1 (x) 1)} with the restricted product."""
    h, alg = d.hopf, d.algebra
    F = alg.field
    nh, na = h.dim, alg.dim
    n = na * nh
    one = tensor_flatten(F, alg.unit, h.unit)
    gens = []
    for j in range(na):
        for i in range(nh):
            x = [F.zero] * n
            x[j * nh + i] = F.one
            gens.append(smash_mul_vec(d, x, one))
    carrier = Subspace.span(F, gens, n)
    nc = carrier.dim
    rows = [list(r) for r in carrier.basis.data]
    mult = []
    for r in range(nc):
        mrow = []
        for s in range(nc):
            prod = smash_mul_vec(d, rows[r], rows[s])
            coords = carrier.coords_of(prod)
            if coords is None:
                raise ClosureViolation("carrier is not closed under the smash product")
            mrow.append(coords)
        mult.append(mrow)
    unit_coords = carrier.coords_of(one)
    if unit_coords is None:
        raise ClosureViolation("1 (x) 1 is not in the carrier")
    out = AlgebraData(F, nc, [f"s{r}" for r in range(nc)], mult, unit_coords)
    rep = verify_algebra(out)
    assert rep.ok, f"partial smash failed algebra axioms:\n{rep.summary()}"
    return PartialSmash(d, carrier, out)


def embed_partial_smash(ps: PartialSmash, env: EnvelopingAction) -> tuple[Matrix, Report]:
    """The monomorphism a (x) h -> theta(a) # h from the partial smash into B#H."""
    d = env.partial
    if ps.action is not d and ps.action.act != d.act:
        raise ShapeMismatch("partial smash and envelope come from different partial actions")
    F = d.algebra.field
    nh, na, nb = d.hopf.dim, d.algebra.dim, env.glob.algebra.dim
    rows = nb * nh
    cols = na * nh
    data = [[F.zero] * cols for _ in range(rows)]
    for j in range(na):
        tj = env.theta.col(j)
        for i in range(nh):
            for r in range(nb):
                if tj[r]:
                    data[r * nh + i][j * nh + i] = tj[r]
    phi = Matrix(F, data, cols=cols)

    rep = Report("partial-smash-embedding")
    crows = [list(r) for r in ps.carrier.basis.data]

    mc = rep.new_check("multiplicative-on-carrier")
    for r, xr in enumerate(crows):
        for s, xs in enumerate(crows):
            lhs = phi.mul_vec(ps.ambient_mul(xr, xs))
            rhs = smash_mul_vec(env.glob, phi.mul_vec(xr), phi.mul_vec(xs))
            mc.require(lhs == rhs, (r, s), lhs, rhs)

    emb = rep.new_check("embedding-identity")
    one_b = env.theta_one()
    for j in range(na):
        for i in range(nh):
            x = [F.zero] * cols
            x[j * nh + i] = F.one
            lhs = phi.mul_vec(ps.ambient_mul(x, ps.one_ambient()))
            rhs = [F.zero] * rows
            for p, q, c in d.hopf.comult_terms(i):
                left = env.glob.algebra.mult_vec(
                    env.theta.col(j), env.glob.apply_basis(p, one_b)
                )
                for rr in range(nb):
                    if left[rr]:
                        rhs[rr * nh + q] = rhs[rr * nh + q] + c * left[rr]
            emb.require(lhs == rhs, (j, i), lhs, rhs)

    inj = rep.new_check("injective-on-carrier")
    imgs = [phi.mul_vec(x) for x in crows]
    rk = Subspace.span(F, imgs, rows).dim
    inj.require(rk == ps.carrier.dim, ("rank",), rk, ps.carrier.dim)

    return phi, rep


@dataclass
class MoritaContext:
    """The six-tuple data connecting the partial smash and the full smash."""

    env: EnvelopingAction
    smash: SmashAlgebra
    psmash: PartialSmash
    embed: Matrix
    R: Subspace  # embedded partial smash, inside B#H
    M: Subspace  # theta(A) # H
    N: Subspace  # span of sum (h_1 |> theta(a)) # h_2


def build_morita(env: EnvelopingAction) -> MoritaContext:
    """Morita context between the partial smash of A and B#H.

    Needs the partial action bilateral (so theta(A) is a two-sided
    ideal) and an invertible antipode.
    """
    d = env.partial
    if not is_bilateral(d):
        raise PreconditionViolated(
            "bilateral", "the partial action must satisfy the two-sided criterion"
        )
    try:
        antipode_inverse(d.hopf)
    except Exception as exc:
        raise PreconditionViolated("antipode", "the antipode must be invertible") from exc

    F = d.algebra.field
    nh, na, nb = d.hopf.dim, d.algebra.dim, env.glob.algebra.dim
    n = nb * nh

    sm = smash_product(env.glob)
    ps = partial_smash(d)
    phi, emb_rep = embed_partial_smash(ps, env)
    assert emb_rep.ok, f"embedding failed:\n{emb_rep.summary()}"

    mcols = [phi.col(c) for c in range(phi.cols)]
    M = Subspace.span(F, mcols, n)

    ngens = []
    for i in range(nh):
        for j in range(na):
            v = [F.zero] * n
            tj = env.theta.col(j)
            for p, q, c in d.hopf.comult_terms(i):
                moved = env.glob.apply_basis(p, tj)
                for r in range(nb):
                    if moved[r]:
                        v[r * nh + q] = v[r * nh + q] + c * moved[r]
            ngens.append(v)
    N = Subspace.span(F, ngens, n)

    rimgs = [phi.mul_vec(list(r)) for r in ps.carrier.basis.data]
    R = Subspace.span(F, rimgs, n)

    return MoritaContext(env, sm, ps, phi, R, M, N)


def morita_dims(ctx: MoritaContext) -> dict:
    """Dimensions of the spaces in the context, in reporting order."""
    glob = ctx.env.glob
    F = glob.algebra.field
    n = glob.algebra.dim * glob.hopf.dim
    mrows = [list(r) for r in ctx.M.basis.data]
    nrows = [list(r) for r in ctx.N.basis.data]
    mn = Subspace.span(F, [smash_mul_vec(glob, m, v) for m in mrows for v in nrows], n)
    nm = Subspace.span(F, [smash_mul_vec(glob, v, m) for v in nrows for m in mrows], n)
    return {
        "carrier": ctx.psmash.carrier.dim,
        "smash": n,
        "M": ctx.M.dim,
        "N": ctx.N.dim,
        "MN": mn.dim,
        "NM": nm.dim,
    }


def verify_morita(ctx: MoritaContext) -> Report:
    """All closure, span, and associativity conditions of the Morita context."""
    rep = Report("morita-context")
    glob = ctx.env.glob
    F = glob.algebra.field
    nh, nb = glob.hopf.dim, glob.algebra.dim
    n = nb * nh
    mul = lambda x, y: smash_mul_vec(glob, x, y)
    mrows = [list(r) for r in ctx.M.basis.data]
    nrows = [list(r) for r in ctx.N.basis.data]
    rrows = [list(r) for r in ctx.R.basis.data]

    mri = rep.new_check("m-right-ideal")
    for a, m in enumerate(mrows):
        for t in range(n):
            e = [F.zero] * n
            e[t] = F.one
            prod = mul(m, e)
            mri.require(ctx.M.contains(prod), (a, t), prod, "in M")

    nli = rep.new_check("n-left-ideal")
    for a, v in enumerate(nrows):
        for t in range(n):
            e = [F.zero] * n
            e[t] = F.one
            prod = mul(e, v)
            nli.require(ctx.N.contains(prod), (t, a), prod, "in N")

    rm = rep.new_check("r-acts-on-m")
    for a, r in enumerate(rrows):
        for b, m in enumerate(mrows):
            prod = mul(r, m)
            rm.require(ctx.M.contains(prod), (a, b), prod, "in M")

    nr = rep.new_check("n-absorbs-r")
    for a, v in enumerate(nrows):
        for b, r in enumerate(rrows):
            prod = mul(v, r)
            nr.require(ctx.N.contains(prod), (a, b), prod, "in N")

    mn = rep.new_check("mn-spans-embedded-partial-smash")
    prods = [mul(m, v) for m in mrows for v in nrows]
    mn.require(Subspace.span(F, prods, n) == ctx.R, ("span",), None, None)

    nm = rep.new_check("nm-spans-smash")
    prods = [mul(v, m) for v in nrows for m in mrows]
    got = Subspace.span(F, prods, n).dim
    nm.require(got == n, ("dim",), got, n)

    at = rep.new_check("tau-sigma-associativity")
    for a, m1 in enumerate(mrows):
        for b, v in enumerate(nrows):
            for c, m2 in enumerate(mrows):
                lhs = mul(mul(m1, v), m2)
                rhs = mul(m1, mul(v, m2))
                at.require(lhs == rhs, ("tau", a, b, c), lhs, rhs)
    for a, n1 in enumerate(nrows):
        for b, m in enumerate(mrows):
            for c, n2 in enumerate(nrows):
                lhs = mul(mul(n1, m), n2)
                rhs = mul(n1, mul(m, n2))
                at.require(lhs == rhs, ("sigma", a, b, c), lhs, rhs)

    wit = rep.new_check("nm-surjectivity-witness")
    d = ctx.env.partial
    na = d.algebra.dim
    one_b = ctx.env.theta_one()
    for i in range(nh):
        for j in range(na):
            tj = ctx.env.theta.col(j)
            for t in range(nh):
                lhs = [F.zero] * n
                moved = glob.apply_basis(i, tj)
                for r in range(nb):
                    if moved[r]:
                        lhs[r * nh + t] = moved[r]
                rhs = [F.zero] * n
                for p, q, c in d.hopf.comult_terms(i):
                    for p1, p2, c2 in d.hopf.comult_terms(p):
                        x = [F.zero] * n
                        mv = glob.apply_basis(p1, tj)
                        for r in range(nb):
                            if mv[r]:
                                x[r * nh + p2] = mv[r]
                        sq = d.hopf.antipode_col(q)
                        hpart = [F.zero] * nh
                        for mm, sm_c in enumerate(sq):
                            if sm_c:
                                row = d.hopf.mult[mm][t]
                                for u in range(nh):
                                    if row[u]:
                                        hpart[u] = hpart[u] + sm_c * row[u]
                        y = [F.zero] * n
                        for r in range(nb):
                            if one_b[r]:
                                for u in range(nh):
                                    if hpart[u]:
                                        y[r * nh + u] = one_b[r] * hpart[u]
                        term = mul(x, y)
                        cc = c * c2
                        for z in range(n):
                            if term[z]:
                                rhs[z] = rhs[z] + cc * term[z]
                wit.require(lhs == rhs, (i, j, t), lhs, rhs)

    return rep
