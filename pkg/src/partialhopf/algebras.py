"""Finite-dimensional algebras presented by structure constants.

A basis b_0..b_{n-1} and a tensor mult[i][j][k] with
b_i b_j = sum_k mult[i][j][k] b_k.  The unit, when present, is a
coordinate vector.  Elements are plain coordinate lists.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ShapeMismatch
from .linalg import unit_vec, zero_vec
from .reports import Report


def coerce_tensor3(field, t):
    return [[[field.coerce(x) for x in row] for row in plane] for plane in t]


def zero_tensor3(field, n1, n2, n3):
    return [[[field.zero] * n3 for _ in range(n2)] for _ in range(n1)]


@dataclass
class AlgebraData:
    field: object
    dim: int
    basis_names: list
    mult: list  # mult[i][j][k]
    unit: list | None = None

    def __post_init__(self):
        if len(self.basis_names) != self.dim:
            raise ShapeMismatch("basis name count does not match dimension")
        if len(self.mult) != self.dim or any(
            len(p) != self.dim or any(len(r) != self.dim for r in p) for p in self.mult
        ):
            raise ShapeMismatch("multiplication tensor is not dim^3")
        if self.unit is not None and len(self.unit) != self.dim:
            raise ShapeMismatch("unit vector has wrong length")

    @property
    def is_unital(self):
        return self.unit is not None

    def basis_vec(self, i):
        return unit_vec(self.field, self.dim, i)

    def zero(self):
        return zero_vec(self.field, self.dim)

    def mult_vec(self, x, y):
        out = [self.field.zero] * self.dim
        for i, xi in enumerate(x):
            if not xi:
                continue
            mi = self.mult[i]
            for j, yj in enumerate(y):
                if not yj:
                    continue
                c = xi * yj
                row = mi[j]
                for k in range(self.dim):
                    m = row[k]
                    if m:
                        out[k] = out[k] + c * m
        return out

    def name(self, i):
        return self.basis_names[i]


def verify_algebra(alg: AlgebraData) -> Report:
    """Associativity on all basis triples; unit laws when a unit is present."""
    rep = Report("algebra")
    n = alg.dim
    assoc = rep.new_check("associativity")
    for i in range(n):
        for j in range(n):
            left = alg.mult[i][j]
            for k in range(n):
                # (b_i b_j) b_k
                lhs = [alg.field.zero] * n
                for m, c in enumerate(left):
                    if not c:
                        continue
                    row = alg.mult[m][k]
                    for t in range(n):
                        if row[t]:
                            lhs[t] = lhs[t] + c * row[t]
                # b_i (b_j b_k)
                rhs = [alg.field.zero] * n
                for m, c in enumerate(alg.mult[j][k]):
                    if not c:
                        continue
                    row = alg.mult[i][m]
                    for t in range(n):
                        if row[t]:
                            rhs[t] = rhs[t] + c * row[t]
                assoc.require(lhs == rhs, (i, j, k), lhs, rhs)
    if alg.unit is not None:
        unit = rep.new_check("unit")
        for j in range(n):
            e = alg.basis_vec(j)
            lhs = alg.mult_vec(alg.unit, e)
            unit.require(lhs == e, ("1*b", j), lhs, e)
            rhs = alg.mult_vec(e, alg.unit)
            unit.require(rhs == e, ("b*1", j), rhs, e)
    return rep


def endomorphism_algebra(field, n: int, names=None) -> AlgebraData:
    """End(k^n) = n x n matrices, basis E_rs flattened row-major (index r*n+s)."""
    dim = n * n
    mult = zero_tensor3(field, dim, dim, dim)
    for r in range(n):
        for s in range(n):
            for u in range(n):
                # E_rs E_su = E_ru
                mult[r * n + s][s * n + u][r * n + u] = field.one
    unit = [field.zero] * dim
    for r in range(n):
        unit[r * n + r] = field.one
    if names is None:
        names = [f"E{r}{s}" for r in range(n) for s in range(n)]
    return AlgebraData(field, dim, names, mult, unit)


def matrix_as_endo_vec(m) -> list:
    """Coordinates of an n x n Matrix in the endomorphism_algebra basis."""
    out = []
    for row in m.data:
        out.extend(row)
    return out


def solve_unit(field, dim, mult):
    """Two-sided unit of a structure-constant algebra, or None if there is none."""
    from .linalg import Matrix

    if dim == 0:
        return None
    rows, rhs = [], []
    for r in range(dim):
        for t in range(dim):
            rows.append([mult[s][r][t] for s in range(dim)])
            rhs.append(field.one if t == r else field.zero)
            rows.append([mult[r][s][t] for s in range(dim)])
            rhs.append(field.one if t == r else field.zero)
    return Matrix(field, rows, cols=dim).solve(rhs)
