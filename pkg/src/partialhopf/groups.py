"""Finite groups as Cayley tables, and their group algebras as Hopf data."""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebras import AlgebraData
from .errors import InvalidGroup
from .hopf import CoalgebraData, HopfData
from .linalg import Matrix


@dataclass
class CayleyTable:
    """A finite group given by its multiplication table.

    table[i][j] is the index of g_i g_j.  The identity index and
    inverse list are computed on validate().
    """

    order: int
    table: list
    names: list = None
    identity: int = field(default=None, init=False)
    inverse: list = field(default=None, init=False)

    def __post_init__(self):
        if self.names is None:
            self.names = [f"g{i}" for i in range(self.order)]
        self.validate()

    def validate(self):
        n = self.order
        if len(self.table) != n or any(len(r) != n for r in self.table):
            raise InvalidGroup("table is not order x order")
        for r in self.table:
            for v in r:
                if not isinstance(v, int) or not 0 <= v < n:
                    raise InvalidGroup("table entries must be indices into the group")
        ident = None
        for e in range(n):
            if all(self.table[e][j] == j and self.table[j][e] == j for j in range(n)):
                ident = e
                break
        if ident is None:
            raise InvalidGroup("no identity element")
        inv = [None] * n
        for i in range(n):
            for j in range(n):
                if self.table[i][j] == ident and self.table[j][i] == ident:
                    inv[i] = j
                    break
            if inv[i] is None:
                raise InvalidGroup(f"element {i} has no inverse")
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if self.table[self.table[i][j]][k] != self.table[i][self.table[j][k]]:
                        raise InvalidGroup(f"associativity fails at ({i},{j},{k})")
        self.identity = ident
        self.inverse = inv

    def mul(self, i, j) -> int:
        return self.table[i][j]

    @classmethod
    def cyclic(cls, n: int) -> "CayleyTable":
        names = ["e"] + [f"g{'' if n == 2 else i}" for i in range(1, n)]
        return cls(n, [[(i + j) % n for j in range(n)] for i in range(n)], names)

    @classmethod
    def symmetric(cls, n: int) -> "CayleyTable":
        """S_n on n letters; elements are enumerated permutation tuples."""
        import itertools

        perms = list(itertools.permutations(range(n)))
        index = {p: i for i, p in enumerate(perms)}
        # composition acts left to right on points: (p*q)(x) = q(p(x))
        table = [
            [index[tuple(q[p[x]] for x in range(n))] for q in perms] for p in perms
        ]
        names = ["".join(str(x) for x in p) for p in perms]
        return cls(len(perms), table, names)


def group_algebra(g: CayleyTable, fld) -> HopfData:
    """kG with Delta(g) = g (x) g, eps(g) = 1, S(g) = g^{-1}."""
    n = g.order
    mult = [[[fld.one if g.table[i][j] == k else fld.zero for k in range(n)]
             for j in range(n)] for i in range(n)]
    unit = [fld.one if i == g.identity else fld.zero for i in range(n)]
    comult = [[[fld.one if (j == i and k == i) else fld.zero for k in range(n)]
               for j in range(n)] for i in range(n)]
    counit = [fld.one] * n
    antipode = Matrix(
        fld,
        [[fld.one if g.inverse[j] == r else fld.zero for j in range(n)] for r in range(n)],
        cols=n,
    )
    alg = AlgebraData(fld, n, list(g.names), mult, unit)
    co = CoalgebraData(n, comult, counit)
    return HopfData(alg, co, antipode, antipode_inv=antipode)
