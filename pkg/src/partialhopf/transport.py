"""Transport of structure tensors through a change of basis.

Columns of P express the new basis in old coordinates.  Input slots of a
tensor contract with P, output slots with P^{-1}, so every verified axiom
survives transport exactly.
"""

from __future__ import annotations

from .algebras import AlgebraData
from .hopf import CoalgebraData, HopfData
from .linalg import Matrix


def _conj_in_in_out(t, P, Q, Pinv_out):
    """t'[a][b][c] = sum P[i][a] Q[j][b] t[i][j][k] Pinv_out[c][k]."""
    n1, n2 = len(t), len(t[0])
    n3 = len(t[0][0])
    a1, a2, a3 = P.cols, Q.cols, Pinv_out.rows
    F = P.field
    out = [[[F.zero] * a3 for _ in range(a2)] for _ in range(a1)]
    for i in range(n1):
        for j in range(n2):
            row = t[i][j]
            for k in range(n3):
                v = row[k]
                if not v:
                    continue
                for a in range(a1):
                    pa = P.data[i][a]
                    if not pa:
                        continue
                    for b in range(a2):
                        qb = Q.data[j][b]
                        if not qb:
                            continue
                        w = v * pa * qb
                        for c in range(a3):
                            pc = Pinv_out.data[c][k]
                            if pc:
                                out[a][b][c] = out[a][b][c] + w * pc
    return out


def _conj_in_out_out(t, P, Pinv1, Pinv2):
    """t'[a][b][c] = sum P[i][a] t[i][j][k] Pinv1[b][j] Pinv2[c][k]."""
    n1, n2 = len(t), len(t[0])
    n3 = len(t[0][0])
    a1, a2, a3 = P.cols, Pinv1.rows, Pinv2.rows
    F = P.field
    out = [[[F.zero] * a3 for _ in range(a2)] for _ in range(a1)]
    for i in range(n1):
        for j in range(n2):
            row = t[i][j]
            for k in range(n3):
                v = row[k]
                if not v:
                    continue
                for a in range(a1):
                    pa = P.data[i][a]
                    if not pa:
                        continue
                    va = v * pa
                    for b in range(a2):
                        qb = Pinv1.data[b][j]
                        if not qb:
                            continue
                        w = va * qb
                        for c in range(a3):
                            pc = Pinv2.data[c][k]
                            if pc:
                                out[a][b][c] = out[a][b][c] + w * pc
    return out


def transport_algebra(alg: AlgebraData, P: Matrix, names=None) -> AlgebraData:
    Pinv = P.inverse()
    mult = _conj_in_in_out(alg.mult, P, P, Pinv)
    unit = Pinv.mul_vec(alg.unit) if alg.unit is not None else None
    if names is None:
        names = [f"v{i}" for i in range(alg.dim)]
    return AlgebraData(alg.field, alg.dim, names, mult, unit)


def transport_hopf(h: HopfData, P: Matrix, names=None) -> HopfData:
    Pinv = P.inverse()
    mult = _conj_in_in_out(h.mult, P, P, Pinv)
    comult = _conj_in_out_out(h.comult, P, Pinv, Pinv)
    counit = [None] * h.dim
    for a in range(h.dim):
        s = h.field.zero
        for i in range(h.dim):
            if P.data[i][a] and h.counit[i]:
                s = s + P.data[i][a] * h.counit[i]
        counit[a] = s
    unit = Pinv.mul_vec(h.unit)
    antipode = Pinv.mul(h.antipode).mul(P)
    inv = Pinv.mul(h.antipode_inv).mul(P) if h.antipode_inv is not None else None
    if names is None:
        names = [f"v{i}" for i in range(h.dim)]
    alg = AlgebraData(h.field, h.dim, names, mult, unit)
    coalg = CoalgebraData(h.dim, comult, counit)
    return HopfData(alg, coalg, antipode, inv)


def transport_action(d, P_hopf: Matrix, P_alg: Matrix, hopf=None, names=None):
    """Same-species copy of an action datum in new bases on H and on A."""
    if hopf is None:
        hopf = transport_hopf(d.hopf, P_hopf)
    alg = transport_algebra(d.algebra, P_alg, names=names)
    act = _conj_in_in_out(d.act, P_hopf, P_alg, P_alg.inverse())
    return type(d)(hopf, alg, act)
