"""Parameter bundle (p, q, t, m, N) shared by every layer."""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction


class ParamError(ValueError):
    """Raised for parameter combinations outside the supported domain."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def p_valuation(x: int | Fraction, p: int) -> int:
    """Ordinary p-adic valuation of a nonzero rational."""
    x = Fraction(x)
    if x == 0:
        raise ValueError("valuation of zero")
    v = 0
    num, den = x.numerator, x.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


@dataclass(frozen=True)
class Params:
    p: int
    q: int
    t: int = 0
    m: int | None = None  # None means m = infinity
    N: int = 1

    def __post_init__(self):
        if not is_prime(self.p):
            raise ParamError(f"p={self.p} is not prime")
        e, r = 0, self.q
        while r > 1 and r % self.p == 0:
            r //= self.p
            e += 1
        if r != 1 or e < 1:
            raise ParamError(f"q={self.q} is not a positive power of p={self.p}")
        if self.N < 1:
            raise ParamError("precision N must be >= 1")
        if self.m is not None:
            if self.m < 0:
                raise ParamError("m must be >= 0")
            if self.N > self.m + 1:
                raise ParamError(f"precision N={self.N} exceeds m+1={self.m + 1}")

    @property
    def e(self) -> int:
        """Exponent with q = p**e."""
        e, r = 0, self.q
        while r > 1:
            r //= self.p
            e += 1
        return e

    @property
    def omega_count(self) -> int:
        """Number of omega generators that survive modulo pi^N."""
        top = self.N - 1
        return top if self.m is None else min(self.m, top)

    def v_q(self, x: int | Fraction) -> Fraction:
        """q-adic valuation v_p(x)/e."""
        return Fraction(p_valuation(x, self.p), self.e)

    def with_precision(self, N: int) -> "Params":
        return replace(self, N=N)

    def with_twist(self, t: int) -> "Params":
        return replace(self, t=t)

    def to_json(self) -> dict:
        return {"p": self.p, "q": self.q, "t": self.t, "m": self.m, "N": self.N}

    @classmethod
    def from_json(cls, data: dict) -> "Params":
        return cls(p=data["p"], q=data["q"], t=data.get("t", 0), m=data.get("m"), N=data.get("N", 1))
