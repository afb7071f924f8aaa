"""Partial coactions and dualization against actions.

A coaction datum is a tensor rho[i][j][k] meaning
rho(a_i) = sum_{j,k} rho[i][j][k] a_j (x) h_k.  Dualization is purely
finite-dimensional: a right H-comodule algebra is the same thing as a
left H*-module algebra, and a pairing turns either into the other.
"""

from __future__ import annotations

from dataclasses import dataclass

from .actions import PartialActionData, RightIdealSpec, is_total, verify_partial_action
from .errors import NoUnit, PreconditionViolated, ShapeMismatch
from .globalization import standard_enveloping
from .hopf import PairingData, canonical_pairing, dual_hopf, hopf_tensors_equal, verify_pairing
from .linalg import Matrix
from .reports import Report


@dataclass
class CoactionData:
    hopf: HopfData
    algebra: AlgebraData
    rho: list  # rho[i][j][k]: a_i -> a_j (x) h_k
    partial: bool = True

    def __post_init__(self):
        nh, na = self.hopf.dim, self.algebra.dim
        if len(self.rho) != na or any(
            len(p) != na or any(len(r) != nh for r in p) for p in self.rho
        ):
            raise ShapeMismatch("coaction tensor is not dimA x dimA x dimH")
        if self.partial and self.algebra.unit is None:
            raise NoUnit("a partial coaction needs a unital carrier algebra")

    def rho_of(self, a_vec):
        """rho(a) as a flat A (x) H vector (index j*dimH + k)."""
        nh, na = self.hopf.dim, self.algebra.dim
        F = self.algebra.field
        out = [F.zero] * (na * nh)
        for i, c in enumerate(a_vec):
            if not c:
                continue
            plane = self.rho[i]
            for j in range(na):
                row = plane[j]
                for k in range(nh):
                    if row[k]:
                        out[j * nh + k] = out[j * nh + k] + c * row[k]
        return out


def _ah_mul(alg, h, x, y):
    """Componentwise product on flattened A (x) H."""
    F = alg.field
    na, nh = alg.dim, h.dim
    out = [F.zero] * (na * nh)
    for j1 in range(na):
        for k1 in range(nh):
            c1 = x[j1 * nh + k1]
            if not c1:
                continue
            for j2 in range(na):
                for k2 in range(nh):
                    c2 = y[j2 * nh + k2]
                    if not c2:
                        continue
                    s = c1 * c2
                    av = alg.mult[j1][j2]
                    hv = h.mult[k1][k2]
                    for j in range(na):
                        if not av[j]:
                            continue
                        sj = s * av[j]
                        for k in range(nh):
                            if hv[k]:
                                out[j * nh + k] = out[j * nh + k] + sj * hv[k]
    return out


def verify_partial_coaction(c: CoactionData) -> Report:
    """Multiplicativity, counit collapse, and the (partial or strict) coassociativity."""
    rep = Report("partial-coaction" if c.partial else "comodule-algebra")
    h, alg = c.hopf, c.algebra
    F = alg.field
    nh, na = h.dim, alg.dim

    multb = rep.new_check("coaction-multiplicative")
    for i in range(na):
        ri = c.rho_of(alg.basis_vec(i))
        for j in range(na):
            lhs = c.rho_of(alg.mult[i][j])
            rhs = _ah_mul(alg, h, ri, c.rho_of(alg.basis_vec(j)))
            multb.require(lhs == rhs, (i, j), lhs, rhs)

    cc = rep.new_check("counit-collapse")
    for i in range(na):
        got = [F.zero] * na
        for j in range(na):
            for k in range(nh):
                v = c.rho[i][j][k]
                if v:
                    got[j] = got[j] + v * h.counit[k]
        want = list(alg.basis_vec(i))
        cc.require(got == want, (i,), got, want)

    # flat A (x) H (x) H index: j*nh*nh + p*nh + q
    def rho_then_rho(i):
        out = [F.zero] * (na * nh * nh)
        for j in range(na):
            for k in range(nh):
                v = c.rho[i][j][k]
                if not v:
                    continue
                for j2 in range(na):
                    for k2 in range(nh):
                        w = c.rho[j][j2][k2]
                        if w:
                            idx = j2 * nh * nh + k2 * nh + k
                            out[idx] = out[idx] + v * w
        return out

    def rho_then_comult(i):
        out = [F.zero] * (na * nh * nh)
        for j in range(na):
            for k in range(nh):
                v = c.rho[i][j][k]
                if not v:
                    continue
                for p, q, cc2 in h.comult_terms(k):
                    idx = j * nh * nh + p * nh + q
                    out[idx] = out[idx] + v * cc2
        return out

    if c.partial:
        ca = rep.new_check("coassociativity-partial")
        rho_one = c.rho_of(alg.unit)
        for i in range(na):
            lhs = rho_then_rho(i)
            mid = rho_then_comult(i)
            rhs = [F.zero] * (na * nh * nh)
            for j1 in range(na):
                for k1 in range(nh):
                    c1 = rho_one[j1 * nh + k1]
                    if not c1:
                        continue
                    for j2 in range(na):
                        for p2 in range(nh):
                            for q2 in range(nh):
                                c2 = mid[j2 * nh * nh + p2 * nh + q2]
                                if not c2:
                                    continue
                                s = c1 * c2
                                av = alg.mult[j1][j2]
                                hv = h.mult[k1][p2]
                                for j in range(na):
                                    if not av[j]:
                                        continue
                                    sj = s * av[j]
                                    for k in range(nh):
                                        if hv[k]:
                                            idx = j * nh * nh + k * nh + q2
                                            rhs[idx] = rhs[idx] + sj * hv[k]
            ca.require(lhs == rhs, (i,), lhs, rhs)
    else:
        ca = rep.new_check("coassociativity")
        for i in range(na):
            lhs = rho_then_rho(i)
            rhs = rho_then_comult(i)
            ca.require(lhs == rhs, (i,), lhs, rhs)
        if alg.unit is not None:
            ug = rep.new_check("unit-grouplike")
            got = c.rho_of(alg.unit)
            want = [F.zero] * (na * nh)
            for j, a in enumerate(alg.unit):
                if a:
                    for k, b in enumerate(h.unit):
                        if b:
                            want[j * nh + k] = a * b
            ug.require(got == want, ("rho(1)",), got, want)

    return rep


@dataclass
class CoModuleIdealSpec:
    """A comodule algebra B together with a unital right ideal to restrict to."""

    ambient: CoactionData
    ideal: RightIdealSpec

    def __post_init__(self):
        if self.ambient.partial:
            raise ShapeMismatch("restriction starts from a strict comodule algebra")
        if self.ideal.ambient is not self.ambient.algebra and self.ideal.ambient != self.ambient.algebra:
            raise ShapeMismatch("ideal does not live in the coacted algebra")


def restrict_coaction(spec: CoModuleIdealSpec) -> CoactionData:
    """The partial coaction rho(a) = (1_A (x) 1) rho_B(a) on a unital right ideal."""
    amb = spec.ambient
    pre = verify_partial_coaction(amb)
    if not pre.ok:
        raise PreconditionViolated("comodule-algebra", "restriction needs a verified comodule algebra")
    spec.ideal.validate()
    B = amb.algebra
    h = amb.hopf
    F = B.field
    nh = h.dim
    sub = spec.ideal.restricted_algebra()
    rows = spec.ideal.subspace.basis.data
    na = len(rows)
    unit = spec.ideal.unit_elem

    # 1_A x = 1_A x 1_A inside the ideal; the multiplicativity proof leans on it
    for j in range(B.dim):
        cut = B.mult_vec(unit, B.basis_vec(j))
        again = B.mult_vec(cut, unit)
        assert cut == again, "ideal identity 1x = 1x1 fails; not a unital right ideal"

    rho = []
    for r in range(na):
        plane = [[F.zero] * nh for _ in range(na)]
        big = amb.rho_of(list(rows[r]))
        for j in range(B.dim):
            for k in range(nh):
                v = big[j * nh + k]
                if not v:
                    continue
                cut = B.mult_vec(unit, B.basis_vec(j))
                coords = spec.ideal.subspace.coords_of(cut)
                for t in range(na):
                    if coords[t]:
                        plane[t][k] = plane[t][k] + v * coords[t]
        rho.append(plane)
    out = CoactionData(h, sub, rho, partial=True)
    check = verify_partial_coaction(out)
    assert check.ok, f"restricted coaction failed its axioms:\n{check.summary()}"
    return out


def action_from_coaction(c: CoactionData, p: PairingData) -> PartialActionData:
    """f . a = sum a^(0) <a^(1), f>, a partial action of the paired Hopf algebra."""
    if not hopf_tensors_equal(p.h1, c.hopf):
        raise ShapeMismatch("pairing must have the coacting Hopf algebra on the left")
    pre = verify_partial_coaction(c)
    if not pre.ok:
        raise PreconditionViolated("coaction", "dualization needs a verified coaction")
    prep = verify_pairing(p)
    if not prep.ok:
        raise PreconditionViolated("pairing", "dualization needs a verified pairing")
    F = c.algebra.field
    na = c.algebra.dim
    n2 = p.h2.dim
    nh = c.hopf.dim
    act = []
    for i in range(n2):
        plane = [[F.zero] * na for _ in range(na)]
        for j in range(na):
            for jj in range(na):
                s = F.zero
                for q in range(nh):
                    v = c.rho[j][jj][q]
                    if v:
                        s = s + v * p.gram.data[q][i]
                plane[j][jj] = s
        act.append(plane)
    out = PartialActionData(p.h2, c.algebra, act)
    check = verify_partial_action(out)
    assert check.ok, f"dualized action failed the partial axioms:\n{check.summary()}"
    return out


def coaction_from_action(d: PartialActionData) -> CoactionData:
    """rho(a) = sum_i (b_i . a) (x) p_i over the dual Hopf algebra."""
    pre = verify_partial_action(d)
    if not pre.ok:
        raise PreconditionViolated("partial-action", "dualization needs a verified partial action")
    hstar = dual_hopf(d.hopf)
    F = d.algebra.field
    nh, na = d.hopf.dim, d.algebra.dim
    rho = [[[d.act[i][j][k] for i in range(nh)] for k in range(na)] for j in range(na)]
    partial = not is_total(d)
    out = CoactionData(hstar, d.algebra, rho, partial=partial)
    check = verify_partial_coaction(out)
    assert check.ok, f"dualized coaction failed its axioms:\n{check.summary()}"
    return out


def enveloping_coaction(c: CoactionData) -> tuple[CoactionData, Matrix, Report]:
    """Enveloping coaction via dualize, globalize, dualize back.

    Returns the (strict) coaction on the envelope B, the embedding
    theta, and a report checking the intertwining identity
    (theta (x) I) rho_A = (theta(1) (x) 1) rho_B(theta(a)).
    """
    pairing = canonical_pairing(c.hopf)
    d = action_from_coaction(c, pairing)
    env = standard_enveloping(d)
    glob = env.glob
    B = glob.algebra
    F = B.field
    nh = c.hopf.dim
    nb = B.dim

    # the global H*-action on B, reread as an H-coaction (H** = H entry-wise)
    rho_b = [[[glob.act[i][r][s] for i in range(nh)] for s in range(nb)] for r in range(nb)]
    out = CoactionData(c.hopf, B, rho_b, partial=False)

    rep = Report("enveloping-coaction")
    rep.absorb(verify_partial_coaction(out), prefix="envelope-")

    tw = rep.new_check("intertwining")
    th = env.theta
    one_b = env.theta_one()
    na = c.algebra.dim
    for r in range(na):
        lhs = [F.zero] * (nb * nh)
        for j in range(na):
            tj = th.col(j)
            for k in range(nh):
                v = c.rho[r][j][k]
                if not v:
                    continue
                for s in range(nb):
                    if tj[s]:
                        lhs[s * nh + k] = lhs[s * nh + k] + v * tj[s]
        rhs = [F.zero] * (nb * nh)
        big = out.rho_of(th.col(r))
        for s in range(nb):
            for k in range(nh):
                v = big[s * nh + k]
                if not v:
                    continue
                cut = B.mult_vec(one_b, B.basis_vec(s))
                for t in range(nb):
                    if cut[t]:
                        rhs[t * nh + k] = rhs[t * nh + k] + v * cut[t]
        tw.require(lhs == rhs, (r,), lhs, rhs)

    return out, th, rep
