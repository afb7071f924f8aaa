"""Worked examples: every concrete object the test suite measures against.

All constructors take a field (default: the rationals) and return fully
populated data objects.  Values here are the ground truth the rest of
the package is tested against, so the tensors are written out or built
from first principles rather than imported back from the verifiers.
"""

from __future__ import annotations

import math

from .actions import (
    ActionData,
    PartialActionData,
    RightIdealSpec,
    as_partial,
    induce_partial,
    quotient_module_algebra,
)
from .algebras import AlgebraData, zero_tensor3
from .errors import CharTwo, ParseError
from .fields import QQ, PrimeField
from .globalization import EnvelopingAction
from .groups import CayleyTable, group_algebra
from .hopf import CoalgebraData, HopfData
from .linalg import Matrix, Subspace
from .transport import transport_hopf


def kZ2_hopf(field=QQ) -> HopfData:
    return group_algebra(CayleyTable.cyclic(2), field)


def kZ2_swap(field=QQ) -> ActionData:
    """k x k with components swapped by the generator of Z2."""
    h = kZ2_hopf(field)
    F = field
    mult = zero_tensor3(F, 2, 2, 2)
    mult[0][0][0] = F.one
    mult[1][1][1] = F.one
    alg = AlgebraData(F, 2, ["u1", "u2"], mult, unit=[F.one, F.one])
    act = [
        [[F.one, F.zero], [F.zero, F.one]],
        [[F.zero, F.one], [F.one, F.zero]],
    ]
    return ActionData(h, alg, act)


def trivial_partial_kZ2(field=QQ) -> PartialActionData:
    """A = k with e acting as identity and g acting as zero."""
    h = kZ2_hopf(field)
    F = field
    alg = AlgebraData(F, 1, ["1"], [[[F.one]]], unit=[F.one])
    act = [[[F.one]], [[F.zero]]]
    return PartialActionData(h, alg, act)


def corner_projection_kZ2(field=QQ) -> PartialActionData:
    """Upper triangular 2x2 matrices; g projects onto the lower corner.

    This one fails the two-sided criterion: g.(g.E12) = 0 but
    (gg.E12)(g.1) = E12.  It is the stock witness that an induced
    partial action need not come from a two-sided ideal.
    """
    h = kZ2_hopf(field)
    F = field
    # basis E11, E12, E22
    mult = zero_tensor3(F, 3, 3, 3)
    mult[0][0][0] = F.one  # E11 E11
    mult[0][1][1] = F.one  # E11 E12
    mult[1][2][1] = F.one  # E12 E22
    mult[2][2][2] = F.one  # E22 E22
    alg = AlgebraData(F, 3, ["E11", "E12", "E22"], mult, unit=[F.one, F.zero, F.one])
    ident = [[F.one if r == c else F.zero for r in range(3)] for c in range(3)]
    kill = [[F.zero] * 3, [F.zero] * 3, [F.zero, F.zero, F.one]]
    return PartialActionData(h, alg, [ident, kill])


def sweedler_h4(field=QQ) -> tuple[HopfData, HopfData, Matrix]:
    """The 4-dimensional Hopf algebra with g^2 = 1, x^2 = 0, xg = -gx.

    Returns (idempotent-basis presentation {e1,e2,h1,h2}, original
    presentation {1,g,x,xg}, change of basis C whose columns express
    the idempotent basis in the original one: e1 = (1+g)/2, e2 =
    (1-g)/2, h1 = (x+xg)/2, h2 = (x-xg)/2).
    """
    if field.char == 2:
        raise CharTwo("the idempotent basis needs 1/2")
    F = field
    one, zero = F.one, F.zero
    mult = zero_tensor3(F, 4, 4, 4)
    # unit row and column
    for j in range(4):
        mult[0][j][j] = one
        mult[j][0][j] = one
    mult[1][1][0] = one          # g g = 1
    mult[1][2][3] = -one         # g x = -xg
    mult[1][3][2] = -one         # g xg = -x
    mult[2][1][3] = one          # x g = xg
    mult[3][1][2] = one          # xg g = x
    # x x = x xg = xg x = xg xg = 0
    comult = zero_tensor3(F, 4, 4, 4)
    comult[0][0][0] = one
    comult[1][1][1] = one
    comult[2][2][0] = one        # x (x) 1
    comult[2][1][2] = one        # g (x) x
    comult[3][3][1] = one        # xg (x) g
    comult[3][0][3] = one        # 1 (x) xg
    counit = [one, one, zero, zero]
    antipode = Matrix(
        F,
        [
            [one, zero, zero, zero],
            [zero, one, zero, zero],
            [zero, zero, zero, -one],
            [zero, zero, one, zero],
        ],
        cols=4,
    )
    alg = AlgebraData(F, 4, ["1", "g", "x", "xg"], mult, unit=[one, zero, zero, zero])
    orig = HopfData(alg, CoalgebraData(4, comult, counit), antipode)

    half = F.of(1, 2)
    C = Matrix(
        F,
        [
            [half, half, zero, zero],
            [half, -half, zero, zero],
            [zero, zero, half, half],
            [zero, zero, half, -half],
        ],
        cols=4,
    )
    idem = transport_hopf(orig, C, names=["e1", "e2", "h1", "h2"])
    return idem, orig, C


def h4_adjoint(field=QQ) -> ActionData:
    """H4 acting on itself by h |> k = sum h_1 k S(h_2), idempotent basis."""
    idem, _, _ = sweedler_h4(field)
    n = idem.dim
    F = field
    act = []
    for i in range(n):
        plane = []
        for j in range(n):
            out = [F.zero] * n
            for p, q, c in idem.comult_terms(i):
                v = idem.mult_vec(idem.mult[p][j], idem.antipode_col(q))
                for t in range(n):
                    if v[t]:
                        out[t] = out[t] + c * v[t]
            plane.append(out)
        act.append(plane)
    return ActionData(idem, idem.algebra, act)


def h4_partial_example(field=QQ):
    """The running H4 example: quotient, induced partial action, user envelope.

    Returns (action of H4 on Bbar = H4/<h2>, partial action on A =
    <e1bar>, a user-supplied enveloping action on B' = <e1bar, h1bar>
    which is enveloping but not minimal).
    """
    adj = h4_adjoint(field)
    F = field
    h2_gen = [F.zero, F.zero, F.zero, F.one]
    bbar_action, _ = quotient_module_algebra(adj, [h2_gen])
    bbar = bbar_action.algebra

    e1 = bbar.basis_vec(0)
    ideal = RightIdealSpec(bbar, Subspace.span(F, [e1], 3), list(e1))
    partial = induce_partial(bbar_action, ideal)

    # B' = span{e1bar, h1bar}, an H-stable non-unital subalgebra of Bbar
    bp_mult = zero_tensor3(F, 2, 2, 2)
    bp_mult[0][0][0] = F.one  # e1 e1 = e1
    bp_mult[1][0][1] = F.one  # h1 e1 = h1
    bp = AlgebraData(F, 2, ["e1~", "h1~"], bp_mult, unit=None)
    bp_act = [
        [[F.one, F.zero], [F.zero, F.zero]],   # e1 |>: e1 -> e1, h1 -> 0
        [[F.zero, F.zero], [F.zero, F.one]],   # e2 |>: e1 -> 0,  h1 -> h1
        [[F.zero, F.one], [F.zero, F.zero]],   # h1 |>: e1 -> h1, h1 -> 0
        [[F.zero, F.zero], [F.zero, F.zero]],  # h2 |>: 0
    ]
    theta = Matrix(F, [[F.one], [F.zero]], cols=1)
    env = EnvelopingAction(partial, ActionData(partial.hopf, bp, bp_act), theta)
    return bbar_action, partial, env


def restricted_primitive_example(p: int):
    """H = GF(p)[x]/(x^p) with x primitive, acting by d/dt on GF(p)[t]/(t^p) x GF(p).

    The second factor is dead weight on purpose: it makes the first
    factor a proper unital ideal, so the induced partial action
    exercises x . 1_A = 0.  Returns (HopfData, ActionData, RightIdealSpec).
    """
    F = PrimeField(p)  # raises NotPrime for composite p
    one, zero = F.one, F.zero

    mult = zero_tensor3(F, p, p, p)
    for i in range(p):
        for j in range(p):
            if i + j < p:
                mult[i][j][i + j] = one
    comult = zero_tensor3(F, p, p, p)
    for k in range(p):
        for i in range(k + 1):
            comult[k][i][k - i] = F.coerce(math.comb(k, i))
    counit = [one] + [zero] * (p - 1)
    antipode = Matrix(
        F,
        [[(-one if k % 2 else one) if r == k else zero for k in range(p)] for r in range(p)],
        cols=p,
    )
    names = ["1"] + [f"x{k}" if k > 1 else "x" for k in range(1, p)]
    halg = AlgebraData(F, p, names, mult, unit=[one] + [zero] * (p - 1))
    hopf = HopfData(halg, CoalgebraData(p, comult, counit), antipode)

    nb = p + 1  # t^0..t^{p-1}, then the spare idempotent s
    bmult = zero_tensor3(F, nb, nb, nb)
    for i in range(p):
        for j in range(p):
            if i + j < p:
                bmult[i][j][i + j] = one
    bmult[p][p][p] = one
    bnames = [f"t{k}" for k in range(p)] + ["s"]
    bunit = [one] + [zero] * (p - 1) + [one]
    balg = AlgebraData(F, nb, bnames, bmult, bunit)

    act = []
    for k in range(p):
        plane = []
        for j in range(p):
            out = [zero] * nb
            if k <= j:
                out[j - k] = F.coerce(math.perm(j, k))
            plane.append(out)
        s_img = [zero] * nb
        if k == 0:
            s_img[p] = one
        plane.append(s_img)
        act.append(plane)
    action = ActionData(hopf, balg, act)

    ivecs = [balg.basis_vec(j) for j in range(p)]
    ideal = RightIdealSpec(balg, Subspace.span(F, ivecs, nb), list(ivecs[0]))
    return hopf, action, ideal


def load_catalog(name: str, field=None) -> dict:
    """Resolve a catalog name ("sweedler-h4", "restricted-p:3", ...) to its objects.

    Returns a dict with some of the keys: hopf, group, action,
    partial_action, ideal, envelope, change_of_basis, hopf_original.
    """
    base, _, suffix = name.partition(":")
    if base == "restricted-p":
        if field is not None:
            raise ParseError("restricted-p picks its own prime field", where="field")
        p = int(suffix) if suffix else 2
        hopf, action, ideal = restricted_primitive_example(p)
        partial = induce_partial(action, ideal)
        return {"hopf": hopf, "action": action, "ideal": ideal, "partial_action": partial}
    if suffix:
        raise ParseError(f"unknown catalog suffix {suffix!r}", where=name)
    F = field if field is not None else QQ
    if base == "kZ2-swap":
        action = kZ2_swap(F)
        return {
            "hopf": action.hopf,
            "group": CayleyTable.cyclic(2),
            "action": action,
            "partial_action": as_partial(action),
        }
    if base == "kZ2-trivial-partial":
        d = trivial_partial_kZ2(F)
        return {"hopf": d.hopf, "group": CayleyTable.cyclic(2), "partial_action": d}
    if base == "kZ2-corner":
        d = corner_projection_kZ2(F)
        return {"hopf": d.hopf, "group": CayleyTable.cyclic(2), "partial_action": d}
    if base == "sweedler-h4":
        idem, orig, C = sweedler_h4(F)
        adj = h4_adjoint(F)
        return {
            "hopf": idem,
            "hopf_original": orig,
            "change_of_basis": C,
            "action": adj,
        }
    if base == "h4-partial":
        bbar_action, partial, env = h4_partial_example(F)
        return {
            "hopf": partial.hopf,
            "action": bbar_action,
            "partial_action": partial,
            "envelope": env,
        }
    raise ParseError(f"unknown catalog name {base!r}", where=name)


CATALOG_NAMES = [
    "kZ2-swap",
    "kZ2-trivial-partial",
    "kZ2-corner",
    "sweedler-h4",
    "h4-partial",
    "restricted-p",
]
