"""Smash products, the partial smash carrier, and the Morita context."""

import pytest

from partialhopf.actions import as_partial
from partialhopf.catalog import (
    corner_projection_kZ2,
    h4_partial_example,
    kZ2_swap,
    trivial_partial_kZ2,
)
from partialhopf.errors import PreconditionViolated
from partialhopf.fields import QQ
from partialhopf.globalization import standard_enveloping
from partialhopf.smash import (
    build_morita,
    embed_partial_smash,
    morita_dims,
    partial_smash,
    smash_mul_vec,
    smash_product,
    tensor_flatten,
    verify_morita,
)


def test_swap_smash_square_zero():
    d = as_partial(kZ2_swap(QQ))
    # x = (0,1) (x) g squares to zero: (0,1) and its swap have disjoint support
    x = tensor_flatten(QQ, [QQ.zero, QQ.one], [QQ.zero, QQ.one])
    sq = smash_mul_vec(d, x, x)
    assert all(not c for c in sq)
    sm = smash_product(kZ2_swap(QQ))
    assert sm.algebra.dim == 4
    assert sm.algebra.unit is not None


def test_big_smash_associativity():
    bbar, _, _ = h4_partial_example(QQ)
    sm = smash_product(bbar)      # 12-dimensional; constructor checks associativity
    assert sm.algebra.dim == 12


def test_ambient_product_left_unit_only():
    d = corner_projection_kZ2(QQ)
    F = QQ
    n = 6
    one = tensor_flatten(F, d.algebra.unit, d.hopf.unit)
    basis = []
    for t in range(n):
        x = [F.zero] * n
        x[t] = F.one
        basis.append(x)
    for x in basis:
        assert smash_mul_vec(d, one, x) == x    # 1 (x) 1 is a left unit everywhere
    projected = [smash_mul_vec(d, x, one) for x in basis]
    assert any(px != x for px, x in zip(projected, basis))
    # right multiplication by 1 (x) 1 is idempotent
    for px in projected:
        assert smash_mul_vec(d, px, one) == px


def test_ambient_product_is_associative():
    d = corner_projection_kZ2(QQ)
    F = QQ
    n = 6
    basis = []
    for t in range(n):
        x = [F.zero] * n
        x[t] = F.one
        basis.append(x)
    for x in basis:
        for y in basis:
            xy = smash_mul_vec(d, x, y)
            for z in basis:
                assert smash_mul_vec(d, xy, z) == smash_mul_vec(d, x, smash_mul_vec(d, y, z))


def test_partial_smash_carriers():
    assert partial_smash(trivial_partial_kZ2(QQ)).carrier.dim == 1
    assert partial_smash(corner_projection_kZ2(QQ)).carrier.dim == 5
    assert partial_smash(h4_partial_example(QQ)[1]).carrier.dim == 4


def test_corner_embedding():
    d = corner_projection_kZ2(QQ)
    env = standard_enveloping(d)
    ps = partial_smash(d)
    phi, rep = embed_partial_smash(ps, env)
    assert rep.ok
    assert phi.rows == 10 and phi.cols == 6


def test_morita_trivial_partial_frozen_dims():
    env = standard_enveloping(trivial_partial_kZ2(QQ))
    ctx = build_morita(env)
    assert morita_dims(ctx) == {"carrier": 1, "smash": 4, "M": 2, "N": 2, "MN": 1, "NM": 4}
    assert verify_morita(ctx).ok


def test_morita_total_actions():
    for d in (as_partial(kZ2_swap(QQ)), h4_partial_example(QQ)[1]):
        env = standard_enveloping(d)
        ctx = build_morita(env)
        dims = morita_dims(ctx)
        assert dims["MN"] == dims["carrier"]
        assert dims["NM"] == dims["smash"]
        assert dims["M"] == dims["N"] == dims["smash"]
        assert verify_morita(ctx).ok


def test_morita_needs_bilateral():
    env = standard_enveloping(corner_projection_kZ2(QQ))
    with pytest.raises(PreconditionViolated) as exc:
        build_morita(env)
    assert exc.value.kind == "bilateral"
