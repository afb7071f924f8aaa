"""Exact linear algebra: canonical echelon forms, spans, solving."""

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from partialhopf.fields import QQ, PrimeField
from partialhopf.linalg import Matrix, Subspace

F5 = PrimeField(5)

scalars = st.integers(min_value=-3, max_value=3).map(Fraction)
dims = st.integers(min_value=1, max_value=4)


def vectors(n):
    return st.lists(scalars, min_size=n, max_size=n)


def vector_lists(n):
    return st.lists(vectors(n), min_size=0, max_size=4)


def test_rref_frozen():
    m = Matrix.build(QQ, [[2, 4, -2, 2], [1, 2, 0, 3], [0, 0, 1, 2]])
    r, pivots = m.rref()
    assert pivots == [0, 2]
    assert r.data[0] == [Fraction(1), Fraction(2), Fraction(0), Fraction(3)]
    assert r.data[1] == [Fraction(0), Fraction(0), Fraction(1), Fraction(2)]
    assert r.rows == 2  # zero rows are dropped


def test_solve_frozen():
    m = Matrix.build(QQ, [[1, 2], [3, 4]])
    x = m.solve([QQ.of(5), QQ.of(11)])
    assert x == [Fraction(1), Fraction(2)]
    # inconsistent system
    s = Matrix.build(QQ, [[1, 1], [1, 1]])
    assert s.solve([QQ.of(0), QQ.of(1)]) is None


def test_inverse_gf():
    m = Matrix.build(F5, [[1, 2], [3, 4]])
    inv = m.inverse()
    assert m.mul(inv) == Matrix.identity(F5, 2)
    assert inv.mul(m) == Matrix.identity(F5, 2)


def test_nullspace_frozen():
    m = Matrix.build(QQ, [[1, 2, 3], [2, 4, 6]])
    ns = m.nullspace()
    assert len(ns) == 2
    for v in ns:
        assert all(x == 0 for x in m.mul_vec(v))
    assert m.rank() + len(ns) == 3


@settings(max_examples=40, deadline=None)
@given(dims.flatmap(lambda n: st.tuples(vector_lists(n), vector_lists(n), st.just(n))))
def test_dimension_formula(data):
    us, vs, n = data
    U = Subspace.span(QQ, us, n)
    V = Subspace.span(QQ, vs, n)
    assert U.sum(V).dim + U.intersect(V).dim == U.dim + V.dim


@settings(max_examples=40, deadline=None)
@given(dims.flatmap(lambda n: st.tuples(vector_lists(n), st.just(n))))
def test_span_contains_generators(data):
    vs, n = data
    S = Subspace.span(QQ, vs, n)
    for v in vs:
        assert S.contains(v)
        coords = S.coords_of(v)
        assert coords is not None
        assert S.to_ambient(coords) == v


@settings(max_examples=40, deadline=None)
@given(dims.flatmap(lambda n: st.tuples(vector_lists(n), vectors(n), st.just(n))))
def test_perp_constraints_cut_out_span(data):
    vs, w, n = data
    S = Subspace.span(QQ, vs, n)
    Q = S.perp_constraints()
    for v in vs:
        assert all(x == 0 for x in Q.mul_vec(v))
    # membership matches the constraint test on an arbitrary vector
    assert S.contains(w) == all(x == 0 for x in Q.mul_vec(w))


@settings(max_examples=40, deadline=None)
@given(dims.flatmap(lambda n: st.tuples(vector_lists(n), st.just(n))))
def test_rref_canonical(data):
    vs, n = data
    S = Subspace.span(QQ, vs, n)
    again = Subspace.span(QQ, [list(r) for r in S.basis.data], n)
    assert S == again


@settings(max_examples=40, deadline=None)
@given(st.lists(st.lists(st.integers(min_value=0, max_value=4), min_size=3, max_size=3),
                min_size=1, max_size=4))
def test_gf_rank_nullity(rows):
    m = Matrix.build(F5, rows)
    ns = m.nullspace()
    for v in ns:
        assert all(not x for x in m.mul_vec(v))
    assert m.rank() + len(ns) == 3


def test_intersect_frozen():
    # two planes in QQ^3 meeting in a line
    rows = lambda m: [[Fraction(x) for x in r] for r in m]
    U = Subspace.span(QQ, rows([[1, 0, 0], [0, 1, 0]]), 3)
    V = Subspace.span(QQ, rows([[0, 1, 0], [0, 0, 1]]), 3)
    W = U.intersect(V)
    assert W.dim == 1
    assert W.contains([QQ.of(0), QQ.of(1), QQ.of(0)])
