import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lazwitt.params import ParamError, Params, p_valuation
from lazwitt.poly import (
    PI_VAR,
    DomainMismatch,
    PExponent,
    Poly,
    cq_polynomial,
    gen,
    jet,
    lift,
    omega,
    parse_var,
    pexponent,
    poly_add,
    poly_mul,
    reduce_mod_p,
    var_latex,
    var_text,
    xvar,
    yvar,
)

X0, X1, Y0, Y1 = xvar(0), xvar(1), yvar(0), yvar(1)


def v(var, p=2, modular=True, exp=1):
    return Poly.var(var, p, modular, exp)


# -- params ----------------------------------------------------------------


def test_params_validation():
    assert Params(2, 4).e == 2
    for bad in [dict(p=4, q=4), dict(p=2, q=6), dict(p=3, q=1), dict(p=2, q=2, N=0), dict(p=2, q=2, m=1, N=3)]:
        with pytest.raises(ParamError):
            Params(**bad)


def test_params_omega_count_and_json():
    assert Params(2, 2, N=4).omega_count == 3
    assert Params(2, 2, m=1, N=2).omega_count == 1
    p = Params(3, 9, t=1, m=4, N=3)
    assert Params.from_json(json.loads(json.dumps(p.to_json()))) == p


def test_valuations():
    assert p_valuation(Fraction(12, 5), 2) == 2
    assert Params(2, 4).v_q(8) == Fraction(3, 2)


# -- variables -------------------------------------------------------------


def test_variable_rendering_round_trip():
    for var in [omega(3), X0, yvar(2), PI_VAR, gen("t1"), jet("t1", 2), jet("pi", 1)]:
        assert parse_var(var_text(var)) == var
    assert var_text(jet("t1", 2)) == "d2:t1"
    assert jet("t1", 0) == gen("t1")
    assert var_latex(jet("x_1_2", 1)) == r"d^{[1]}x_{1,2}"


def test_reserved_generator_names_rejected():
    for name in ["w1", "X0", "pi", "1a"]:
        with pytest.raises(ValueError):
            gen(name)


def test_pexponent():
    assert pexponent(Fraction(3, 4), 2) == PExponent(3, 2)
    assert PExponent(4, 2).value(2) == 1
    with pytest.raises(ValueError):
        pexponent(Fraction(1, 3), 2)


# -- examples --------------------------------------------------------------


def test_add_examples():
    assert (v(X0) + v(Y0)).to_text() == "X0 + Y0"
    assert (v(X0, 3) + v(X0, 3) * 2).is_zero()
    half = v(X0, exp=Fraction(1, 2))
    assert (half + half).is_zero()


def test_mul_examples():
    half = v(X0, exp=Fraction(1, 2))
    assert half * half == v(X0)
    f = v(X0) + v(Y1)
    assert Poly.const(1, 2) * f == f
    s = v(X0, modular=False) + v(Y0, modular=False)
    assert s * s == v(X0, 2, False, 2) + v(X0, modular=False) * v(Y0, modular=False) * 2 + v(Y0, 2, False, 2)


def test_domain_mismatch():
    with pytest.raises(DomainMismatch):
        v(X0, 2) + v(X0, 3)
    with pytest.raises(DomainMismatch):
        v(X0, modular=False).frobenius(1, 2)


def test_frobenius_examples():
    assert (v(X0) + v(Y0)).frobenius(1, 2) == v(X0, exp=2) + v(Y0, exp=2)
    f = v(X1) + v(omega(1), exp=2) * v(X0) * v(Y0)
    assert f.frobenius(0, 2) == f
    assert f.frobenius(1, 2).frobenius(-1, 2) == f


def test_coefficient_frobenius_examples():
    q = 3
    c = cq_polynomial(3, q).reduce()
    base = v(X1, 3) + v(Y1, 3)
    f = base + v(omega(1), 3, exp=q) * c
    assert f.coefficient_frobenius(1, q) == base + v(omega(1), 3, exp=q * q) * c
    assert (v(X0) * v(Y0)).coefficient_frobenius(5, 2) == v(X0) * v(Y0)
    assert v(omega(1), exp=Fraction(1, 2)).coefficient_frobenius(1, 2) == v(omega(1))


def test_cq_examples():
    x, y = v(X0, 2, False), v(Y0, 2, False)
    assert cq_polynomial(2, 2) == -(x * y)
    x, y = v(X0, 3, False), v(Y0, 3, False)
    assert cq_polynomial(3, 3) == -(x * x * y) - x * y * y


@pytest.mark.parametrize("p,q", [(2, 2), (3, 3), (2, 4), (5, 5), (3, 9)])
def test_cq_defining_identity(p, q):
    x, y = v(X0, p, False), v(Y0, p, False)
    assert cq_polynomial(p, q) * p + (x + y).pow(q) - x.pow(q) - y.pow(q) == Poly.zero(p, False)


def test_reduce_and_lift():
    x, y = v(X0, 2, False), v(Y0, 2, False)
    assert reduce_mod_p((x + y) * (x + y)) == v(X0, exp=2) + v(Y0, exp=2)
    assert reduce_mod_p(x * 2).is_zero()
    g = v(X0, 3) * 2 + v(Y0, 3)
    assert reduce_mod_p(lift(g)) == g
    assert set(lift(g).terms.values()) == {1, 2}


def test_text_order_and_negative_coefficients():
    f = v(X1) + v(Y1) + v(omega(1), exp=2) * v(X0) * v(Y0)
    assert f.to_text() == "X1 + Y1 + w1^2*X0*Y0"
    g = v(X0, 3, False) - v(Y0, 3, False) * 2
    assert g.to_text() == "X0 - 2*Y0"
    assert v(X0, exp=Fraction(1, 2)).to_text() == "X0^(1/2)"


def test_latex():
    f = v(X1) + v(omega(1), exp=2) * v(X0)
    assert f.to_latex() == r"X_{1} + {\omega_{1}}^{2} X_{0}"


def test_json_round_trip_and_schema():
    f = v(X1, 3) * 2 + v(omega(1), 3, exp=Fraction(1, 3)) * v(Y0, 3)
    data = f.to_json()
    assert data["domain"] == "Fp" and data["p"] == 3
    assert {"coeff", "monomial"} <= set(data["terms"][0])
    assert Poly.from_json(json.loads(json.dumps(data))) == f
    assert json.dumps(f.to_json()) == json.dumps(Poly.from_json(data).to_json())


def test_substitute_and_rename():
    f = v(X0) * v(Y0) + v(X1)
    g = f.substitute({X0: v(Y1) + Poly.const(1, 2)})
    assert g == v(Y1) * v(Y0) + v(Y0) + v(X1)
    assert f.rename({X0: Y1, Y0: X0}) == v(Y1) * v(X0) + v(X1)


def test_fractional_power_over_fp():
    f = v(X0) + v(Y0)
    assert f.pow(Fraction(1, 2)) == v(X0, exp=Fraction(1, 2)) + v(Y0, exp=Fraction(1, 2))
    assert f.pow(Fraction(3, 2)) == f.pow(Fraction(1, 2)).pow(3)


# -- properties ------------------------------------------------------------

POOL = [X0, X1, Y0, omega(1)]


@st.composite
def polys(draw, p=2):
    n = draw(st.integers(0, 4))
    out = Poly.zero(p)
    for _ in range(n):
        c = draw(st.integers(1, p - 1))
        term = Poly.const(c, p)
        for var in draw(st.lists(st.sampled_from(POOL), max_size=2)):
            e = Fraction(draw(st.integers(1, 3)), draw(st.sampled_from([1, p])))
            term = term * Poly.var(var, p, exp=e)
        out = out + term
    return out


@settings(max_examples=60, deadline=None)
@given(polys(), polys(), polys())
def test_ring_axioms(a, b, c):
    assert poly_add(poly_add(a, b), c) == poly_add(a, poly_add(b, c))
    assert poly_mul(poly_mul(a, b), c) == poly_mul(a, poly_mul(b, c))
    assert a + b == b + a and a * b == b * a
    assert a * (b + c) == a * b + a * c


@settings(max_examples=60, deadline=None)
@given(polys(), polys(), st.integers(-2, 2))
def test_frobenius_is_ring_automorphism(a, b, s):
    assert (a * b).frobenius(s, 2) == a.frobenius(s, 2) * b.frobenius(s, 2)
    assert (a + b).frobenius(s, 2) == a.frobenius(s, 2) + b.frobenius(s, 2)
    assert a.frobenius(s, 2).frobenius(-s, 2) == a


@settings(max_examples=40, deadline=None)
@given(polys(p=3))
def test_serialization_deterministic(a):
    assert json.dumps(a.to_json()) == json.dumps(a.to_json())
    assert Poly.from_json(a.to_json()) == a
