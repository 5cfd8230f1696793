import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from posbraid.poly import (
    Laurent2, ZeroPolynomialError, add, coeff_of_v, delta_power, mul, v_degree_bounds,
)

v2 = Laurent2.monomial(1, 2, 0)
vz = Laurent2.monomial(1, 1, 1)
z = Laurent2.monomial(1, 0, 1)
delta = delta_power(1)

polys = st.dictionaries(
    st.tuples(st.integers(-4, 4), st.integers(-4, 4)), st.integers(-5, 5), max_size=6,
).map(Laurent2)


def test_add_examples():
    assert add(v2, -v2) == Laurent2.zero()
    assert str(add(v2, -v2)) == "0"
    assert add(delta, Laurent2.zero()) == delta
    assert add(vz, vz) == Laurent2.monomial(2, 1, 1)


def test_mul_examples():
    assert mul(delta, z) == Laurent2({(-1, 0): 1, (1, 0): -1})
    assert mul(delta, delta) == Laurent2({(-2, -2): 1, (0, -2): -2, (2, -2): 1})
    assert mul(v2, vz) == Laurent2.monomial(1, 3, 1)


def test_delta_power():
    assert delta_power(0) == Laurent2.one()
    assert delta_power(1) == Laurent2({(-1, -1): 1, (1, -1): -1})
    d3 = delta_power(3)
    # (v^-1 - v)^3 z^-3: top v-term is (-z)^-3 v^3, bottom is z^-3 v^-3
    assert coeff_of_v(d3, 3) == Laurent2.monomial(-1, 0, -3)
    assert coeff_of_v(d3, -3) == Laurent2.monomial(1, 0, -3)
    assert d3 == Laurent2({(-3, -3): 1, (-1, -3): -3, (1, -3): 3, (3, -3): -1})
    with pytest.raises(ValueError):
        delta_power(-1)


@pytest.mark.parametrize("a", range(7))
@pytest.mark.parametrize("b", range(7))
def test_delta_power_additive(a, b):
    assert delta_power(a) * delta_power(b) == delta_power(a + b)


def test_v_degree_bounds():
    assert v_degree_bounds(delta * delta) == (-2, 2)
    assert v_degree_bounds(Laurent2.monomial(1, 3, 1)) == (3, 3)
    trefoil = Laurent2({(2, 0): 2, (2, 2): 1, (4, 0): -1})
    assert v_degree_bounds(trefoil) == (2, 4)
    with pytest.raises(ZeroPolynomialError):
        v_degree_bounds(Laurent2.zero())


def test_coeff_of_v():
    dd = delta * delta
    assert coeff_of_v(dd, 2) == Laurent2.monomial(1, 0, -2)
    assert coeff_of_v(dd, 0) == Laurent2.monomial(-2, 0, -2)
    assert coeff_of_v(Laurent2.monomial(1, 3, 1), 0) == Laurent2.zero()


def test_rendering():
    assert str(Laurent2({(2, 0): 2, (2, 2): 1, (4, 0): -1})) == "-v^4 + v^2*z^2 + 2*v^2"
    assert str(Laurent2.one()) == "1"
    assert str(Laurent2.monomial(-1)) == "-1"
    assert str(Laurent2.monomial(-3, -1, 1)) == "-3*v^-1*z"
    assert str(delta * delta) == "v^2*z^-2 - 2*z^-2 + v^-2*z^-2"


def test_canonical_json_order():
    data = (delta * delta).to_json()
    assert data == {"terms": [
        {"v": 2, "z": -2, "c": 1}, {"v": 0, "z": -2, "c": -2}, {"v": -2, "z": -2, "c": 1},
    ]}


def test_constructor_drops_zeros():
    p = Laurent2({(1, 1): 0, (0, 0): 3})
    assert p.terms == {(0, 0): 3}
    assert Laurent2([((1, 0), 2), ((1, 0), -2)]).is_zero()


def test_no_overflow():
    big = Laurent2.monomial(2**62)
    assert (big * big).terms == {(0, 0): 2**124}


@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == Laurent2.zero()
    assert hash(p + q) == hash(q + p)


@given(polys, polys)
def test_top_degree_subadditive(p, q):
    if p.is_zero() or q.is_zero() or (p * q).is_zero():
        return
    lo, hi = v_degree_bounds(p * q)
    assert hi <= v_degree_bounds(p)[1] + v_degree_bounds(q)[1]
    assert lo >= v_degree_bounds(p)[0] + v_degree_bounds(q)[0]


@given(polys, st.integers(-3, 3), st.integers(-3, 3), st.integers(1, 4))
def test_monomial_times_poly_degrees(p, dv, dz, c):
    if p.is_zero():
        return
    lo, hi = v_degree_bounds(p)
    assert v_degree_bounds(p * Laurent2.monomial(c, dv, dz)) == (lo + dv, hi + dv)


@given(polys)
def test_coeff_of_v_reconstructs(p):
    dvs = {dv for dv, _ in p.terms}
    rebuilt = sum((coeff_of_v(p, dv).shift(dv, 0) for dv in dvs), Laurent2.zero())
    assert rebuilt == p


@settings(max_examples=200)
@given(polys)
def test_text_and_json_round_trip(p):
    assert Laurent2.parse(str(p)) == p
    assert Laurent2.from_json(json.loads(json.dumps(p.to_json()))) == p
