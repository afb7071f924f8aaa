"""Hopf algebras by structure constants: axioms, duals, pairings.

Comultiplication is a tensor comult[i][j][k] with
Delta(b_i) = sum_{j,k} comult[i][j][k] b_j (x) b_k, the counit a vector,
the antipode a matrix acting on coordinate columns.  All the usual
Sweedler-notation identities become explicit tensor contractions here.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebras import AlgebraData, verify_algebra
from .errors import ShapeMismatch, SingularAntipode, SingularMatrix
from .linalg import Matrix
from .reports import Report


@dataclass
class CoalgebraData:
    dim: int
    comult: list  # comult[i][j][k]
    counit: list

    def __post_init__(self):
        if len(self.comult) != self.dim or any(
            len(p) != self.dim or any(len(r) != self.dim for r in p) for p in self.comult
        ):
            raise ShapeMismatch("comultiplication tensor is not dim^3")
        if len(self.counit) != self.dim:
            raise ShapeMismatch("counit vector has wrong length")


@dataclass
class HopfData:
    algebra: AlgebraData
    coalgebra: CoalgebraData
    antipode: Matrix
    antipode_inv: Matrix | None = None

    def __post_init__(self):
        n = self.algebra.dim
        if self.coalgebra.dim != n:
            raise ShapeMismatch("algebra and coalgebra dimensions differ")
        if self.antipode.rows != n or self.antipode.cols != n:
            raise ShapeMismatch("antipode matrix is not dim x dim")
        if self.algebra.unit is None:
            raise ShapeMismatch("a Hopf algebra needs a unit")

    @property
    def field(self):
        return self.algebra.field

    @property
    def dim(self):
        return self.algebra.dim

    @property
    def mult(self):
        return self.algebra.mult

    @property
    def comult(self):
        return self.coalgebra.comult

    @property
    def counit(self):
        return self.coalgebra.counit

    @property
    def unit(self):
        return self.algebra.unit

    @property
    def basis_names(self):
        return self.algebra.basis_names

    def comult_terms(self, i):
        """Nonzero Sweedler terms of Delta(b_i) as (j, k, coefficient)."""
        for j, row in enumerate(self.comult[i]):
            for k, c in enumerate(row):
                if c:
                    yield j, k, c

    def antipode_col(self, j):
        return self.antipode.col(j)

    def antipode_vec(self, v):
        return self.antipode.mul_vec(v)

    def counit_of(self, v):
        out = self.field.zero
        for x, e in zip(v, self.counit):
            if x and e:
                out = out + x * e
        return out

    def mult_vec(self, x, y):
        return self.algebra.mult_vec(x, y)


def verify_hopf(h: HopfData) -> Report:
    """All Hopf axioms on basis elements; full failing lists per check."""
    rep = Report("hopf")
    rep.absorb(verify_algebra(h.algebra))
    F = h.field
    n = h.dim
    mult, comult, counit, unit = h.mult, h.comult, h.counit, h.unit

    coassoc = rep.new_check("coassociativity")
    for i in range(n):
        lhs = {}
        rhs = {}
        for j, k, c in h.comult_terms(i):
            for a, b, c2 in h.comult_terms(j):
                key = (a, b, k)
                lhs[key] = lhs.get(key, F.zero) + c * c2
            for b, c_, c2 in h.comult_terms(k):
                key = (j, b, c_)
                rhs[key] = rhs.get(key, F.zero) + c * c2
        coassoc.require(_dict_eq(lhs, rhs), (i,), _dict_list(lhs), _dict_list(rhs))

    cu = rep.new_check("counit")
    for i in range(n):
        left = [F.zero] * n
        right = [F.zero] * n
        for j, k, c in h.comult_terms(i):
            if counit[j]:
                left[k] = left[k] + c * counit[j]
            if counit[k]:
                right[j] = right[j] + c * counit[k]
        e = h.algebra.basis_vec(i)
        cu.require(left == e, ("eps(x1)x2", i), left, e)
        cu.require(right == e, ("x1eps(x2)", i), right, e)

    cm = rep.new_check("comult-multiplicative")
    for i in range(n):
        for j in range(n):
            lhs = {}
            for m, c in enumerate(mult[i][j]):
                if not c:
                    continue
                for a, b, c2 in h.comult_terms(m):
                    key = (a, b)
                    lhs[key] = lhs.get(key, F.zero) + c * c2
            rhs = {}
            for p, q, c1 in h.comult_terms(i):
                for r, s, c2 in h.comult_terms(j):
                    c12 = c1 * c2
                    left_prod = mult[p][r]
                    right_prod = mult[q][s]
                    for a, va in enumerate(left_prod):
                        if not va:
                            continue
                        cva = c12 * va
                        for b, vb in enumerate(right_prod):
                            if vb:
                                key = (a, b)
                                rhs[key] = rhs.get(key, F.zero) + cva * vb
            cm.require(_dict_eq(lhs, rhs), (i, j), _dict_list(lhs), _dict_list(rhs))

    cmu = rep.new_check("comult-unit")
    lhs = {}
    for i, c in enumerate(unit):
        if not c:
            continue
        for j, k, c2 in h.comult_terms(i):
            key = (j, k)
            lhs[key] = lhs.get(key, F.zero) + c * c2
    rhs = {}
    for j, a in enumerate(unit):
        if not a:
            continue
        for k, b in enumerate(unit):
            if b:
                rhs[(j, k)] = a * b
    cmu.require(_dict_eq(lhs, rhs), ("Delta(1)",), _dict_list(lhs), _dict_list(rhs))

    em = rep.new_check("counit-multiplicative")
    for i in range(n):
        for j in range(n):
            s = F.zero
            for m, c in enumerate(mult[i][j]):
                if c and counit[m]:
                    s = s + c * counit[m]
            em.require(s == counit[i] * counit[j], (i, j), s, counit[i] * counit[j])
    em.require(h.counit_of(unit) == F.one, ("eps(1)",), h.counit_of(unit), F.one)

    anl = rep.new_check("antipode-left")
    anr = rep.new_check("antipode-right")
    for i in range(n):
        acc_l = [F.zero] * n
        acc_r = [F.zero] * n
        for j, k, c in h.comult_terms(i):
            sj = h.antipode_col(j)
            for m, v in enumerate(sj):
                if not v:
                    continue
                row = mult[m][k]
                cv = c * v
                for t in range(n):
                    if row[t]:
                        acc_l[t] = acc_l[t] + cv * row[t]
            sk = h.antipode_col(k)
            for m, v in enumerate(sk):
                if not v:
                    continue
                row = mult[j][m]
                cv = c * v
                for t in range(n):
                    if row[t]:
                        acc_r[t] = acc_r[t] + cv * row[t]
        target = [counit[i] * u for u in unit]
        anl.require(acc_l == target, (i,), acc_l, target)
        anr.require(acc_r == target, (i,), acc_r, target)

    return rep


def _dict_eq(a, b):
    for k, v in a.items():
        w = b.get(k)
        if w is None:
            if v:
                return False
        elif v != w:
            return False
    for k, v in b.items():
        if k not in a and v:
            return False
    return True


def _dict_list(d):
    return sorted(((k, v) for k, v in d.items() if v), key=lambda kv: kv[0])


def antipode_inverse(h: HopfData) -> Matrix:
    """Inverse of the antipode matrix; cached on the HopfData."""
    if h.antipode_inv is not None:
        return h.antipode_inv
    try:
        inv = h.antipode.inverse()
    except SingularMatrix as exc:
        raise SingularAntipode("antipode matrix is singular") from exc
    h.antipode_inv = inv
    return inv


def dual_hopf(h: HopfData) -> HopfData:
    """Dual Hopf algebra on the dual basis.

    Multiplication is the transpose of comultiplication, comultiplication
    the transpose of multiplication, unit the counit, counit evaluation at
    the unit, antipode the transposed antipode.  Applying this twice gives
    back the original structure tensors entry for entry.
    """
    n = h.dim
    F = h.field
    # mult*[a][b][k] = comult[k][a][b]; comult*[k][i][j] = mult[i][j][k]
    mult = [[[h.comult[k][a][b] for k in range(n)] for b in range(n)] for a in range(n)]
    comult = [[[h.mult[i][j][k] for j in range(n)] for i in range(n)] for k in range(n)]
    names = [f"{nm}*" for nm in h.basis_names]
    alg = AlgebraData(F, n, names, mult, unit=list(h.counit))
    coalg = CoalgebraData(n, comult, list(h.unit))
    antipode = h.antipode.transpose()
    inv = h.antipode_inv.transpose() if h.antipode_inv is not None else None
    return HopfData(alg, coalg, antipode, inv)


def hopf_tensors_equal(a: HopfData, b: HopfData) -> bool:
    return (
        a.dim == b.dim
        and a.mult == b.mult
        and a.comult == b.comult
        and a.counit == b.counit
        and a.unit == b.unit
        and a.antipode.data == b.antipode.data
    )


@dataclass
class PairingData:
    h1: HopfData
    h2: HopfData
    gram: Matrix  # gram[i][j] = <b_i, c_j>

    def __post_init__(self):
        if self.gram.rows != self.h1.dim or self.gram.cols != self.h2.dim:
            raise ShapeMismatch("gram matrix shape does not match the two Hopf algebras")

    def value(self, v1, v2):
        out = self.h1.field.zero
        for i, a in enumerate(v1):
            if not a:
                continue
            for j, b in enumerate(v2):
                if b and self.gram.data[i][j]:
                    out = out + a * b * self.gram.data[i][j]
        return out


def canonical_pairing(h: HopfData) -> PairingData:
    """The evaluation pairing between h and its dual: identity gram."""
    return PairingData(h, dual_hopf(h), Matrix.identity(h.field, h.dim))


def verify_pairing(p: PairingData, require_nondegenerate: bool = False) -> Report:
    """Hopf pairing axioms; optionally also full rank on both sides."""
    rep = Report("pairing")
    h1, h2, P = p.h1, p.h2, p.gram.data
    F = h1.field
    n1, n2 = h1.dim, h2.dim

    c1 = rep.new_check("pairing-mult-left")
    for i in range(n1):
        for j in range(n1):
            for k in range(n2):
                lhs = F.zero
                for m, c in enumerate(h1.mult[i][j]):
                    if c and P[m][k]:
                        lhs = lhs + c * P[m][k]
                rhs = F.zero
                for a, b, c in h2.comult_terms(k):
                    if P[i][a] and P[j][b]:
                        rhs = rhs + c * P[i][a] * P[j][b]
                c1.require(lhs == rhs, (i, j, k), lhs, rhs)

    c2 = rep.new_check("pairing-mult-right")
    for i in range(n1):
        for a in range(n2):
            for b in range(n2):
                lhs = F.zero
                for m, c in enumerate(h2.mult[a][b]):
                    if c and P[i][m]:
                        lhs = lhs + c * P[i][m]
                rhs = F.zero
                for pp, q, c in h1.comult_terms(i):
                    if P[pp][a] and P[q][b]:
                        rhs = rhs + c * P[pp][a] * P[q][b]
                c2.require(lhs == rhs, (i, a, b), lhs, rhs)

    c3 = rep.new_check("pairing-counit-left")
    for i in range(n1):
        s = F.zero
        for j, u in enumerate(h2.unit):
            if u and P[i][j]:
                s = s + u * P[i][j]
        c3.require(s == h1.counit[i], (i,), s, h1.counit[i])

    c4 = rep.new_check("pairing-counit-right")
    for j in range(n2):
        s = F.zero
        for i, u in enumerate(h1.unit):
            if u and P[i][j]:
                s = s + u * P[i][j]
        c4.require(s == h2.counit[j], (j,), s, h2.counit[j])

    if require_nondegenerate:
        nd = rep.new_check("nondegenerate")
        r = p.gram.rank()
        nd.require(r == n1, ("left-rank",), r, n1)
        nd.require(r == n2, ("right-rank",), r, n2)

    return rep
