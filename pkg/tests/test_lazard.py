import json
import random

import pytest

from lazwitt.checks import random_params, random_raw, raw_add, raw_mul, relation_series
from lazwitt.lazard import (
    LazardElement,
    ParamsMismatch,
    RawSeries,
    lz_add,
    lz_mul,
    normalize,
    pi_coefficient,
    teichmuller,
    teichmuller_digits,
    teichmuller_direct,
)
from lazwitt.params import Params
from lazwitt.poly import Poly, omega, xvar


def test_normalize_p():
    params = Params(2, 2, 0, None, 4)
    assert LazardElement.integer(params, 2).to_text() == "w1*pi + w2*pi^2 + w3*pi^3"
    p3 = Params(3, 3, 0, None, 3)
    assert pi_coefficient(LazardElement.integer(p3, 3), 1) == Poly.var(omega(1), 3)


def test_normalize_p_squared_against_squared_expansion():
    params = Params(2, 2, 0, None, 3)
    assert LazardElement.integer(params, 4).to_text() == "w1^2*pi^2"
    p = LazardElement.integer(params, 2)
    assert lz_mul(p, p) == LazardElement.integer(params, 4)


def test_normalize_twisted_relation():
    params = Params(2, 2, 1, None, 3)
    assert pi_coefficient(LazardElement.integer(params, 2), 1) == Poly.var(omega(1), 2, exp=2)


def test_small_constants():
    params = Params(3, 3, 0, None, 3)
    assert LazardElement.integer(params, 1) == LazardElement.one(params)
    assert pi_coefficient(LazardElement.one(params), 1).is_zero()
    assert LazardElement.integer(params, -1) + LazardElement.one(params) == LazardElement.zero(params)


def test_add_zero_and_pi_square():
    params = Params(2, 2, 0, None, 2)
    a = LazardElement.from_digit(params, Poly.var(xvar(0), 2))
    assert lz_add(a, LazardElement.zero(params)) == a
    pi = LazardElement.pi_power(params)
    assert lz_mul(pi, pi).is_zero()


def test_params_mismatch():
    with pytest.raises(ParamsMismatch):
        LazardElement.one(Params(2, 2, N=2)) + LazardElement.one(Params(2, 2, N=3))


def test_teichmuller_examples():
    params = Params(2, 2, 0, None, 3)
    assert teichmuller(Poly.zero(2), params).is_zero()
    assert teichmuller(Poly.const(1, 2), params) == LazardElement.one(params)
    w = Poly.var(omega(1), 2)
    assert lz_mul(teichmuller(w, params), teichmuller(w, params)) == teichmuller(w * w, params)
    x = Poly.var(xvar(0), 2)
    assert pi_coefficient(teichmuller(x, params), 0) == x
    assert pi_coefficient(lz_mul(teichmuller(x, params), LazardElement.pi_power(params)), 1) == x


@pytest.mark.parametrize("seed", range(6))
def test_teichmuller_multiplicative_random(seed):
    rng = random.Random(seed)
    params = random_params(rng)
    pool = [omega(1), xvar(0), xvar(1)]
    r, s = (Poly.monomial([(rng.choice(pool), rng.randint(1, 3))], params.p, coeff=rng.randint(1, params.p - 1))
            for _ in range(2))
    assert lz_mul(teichmuller(r, params), teichmuller(s, params)) == teichmuller(r * s, params)
    assert teichmuller(r, params) == teichmuller_direct(r, params)


@pytest.mark.parametrize("seed", range(5))
def test_precision_coherence(seed):
    rng = random.Random(seed)
    params = random_params(rng)
    a, b = random_raw(rng, params), random_raw(rng, params)
    full = normalize(raw_mul(a, b))
    for N in range(1, params.N + 1):
        small = params.with_precision(N)
        cut = lambda s: RawSeries(small, s.coeffs[:N])  # noqa: E731
        assert normalize(raw_mul(cut(a), cut(b))) == full.truncate(N)


def test_relation_is_annihilated():
    for N in range(1, 5):
        params = Params(3, 9, 1, None, N)
        assert normalize(relation_series(params)).is_zero()


def test_finite_m_truncates_relation():
    params = Params(2, 2, 0, 1, 2)
    assert LazardElement.integer(params, 2).to_text() == "w1*pi"


@pytest.mark.parametrize("seed", range(4))
def test_normalize_homomorphism(seed):
    rng = random.Random(100 + seed)
    params = random_params(rng)
    a, b = random_raw(rng, params), random_raw(rng, params)
    assert normalize(raw_add(a, b)) == lz_add(normalize(a), normalize(b))
    assert normalize(raw_mul(a, a)) == lz_mul(normalize(a), normalize(a))


def test_teichmuller_digits_of_p():
    params = Params(2, 2, 0, None, 4)
    digits = teichmuller_digits(LazardElement.integer(params, 2))
    assert [d.to_text() for d in digits] == ["0", "w1^2", "w2^4", "w3^8"]


def test_json_round_trip():
    params = Params(3, 3, 0, None, 3)
    a = LazardElement.integer(params, 7)
    assert LazardElement.from_json(json.loads(json.dumps(a.to_json()))) == a
