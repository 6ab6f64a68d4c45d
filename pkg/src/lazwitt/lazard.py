"""Normal-form arithmetic in Lazard's universal pi-ring modulo pi^N.

An element is stored as its pi-adic digit expansion ``sum c_j pi^j`` where each
digit ``c_j`` is an F_p polynomial (in omega/X/Y or any other non-pi
variables) whose canonical integer lift is the actual coefficient.  Integer
content divisible by p is eliminated with the relation
``p = sum_i omega_i^(q^t) pi^i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .params import Params
from .poly import PI, Poly, mono_mul, omega


class ParamsMismatch(ValueError):
    pass


class NormalFormError(ArithmeticError):
    """A normal-form invariant failed; indicates a bug, never expected."""


@dataclass(frozen=True)
class RawSeries:
    """Unnormalized sum of Z-polynomials times powers of pi."""

    params: Params
    coeffs: tuple[Poly, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.params.N:
            raise ValueError(f"expected {self.params.N} coefficients, got {len(self.coeffs)}")

    @classmethod
    def from_list(cls, params: Params, coeffs: Sequence[Poly | int]) -> "RawSeries":
        out = []
        for j in range(params.N):
            c = coeffs[j] if j < len(coeffs) else 0
            if isinstance(c, int):
                c = Poly.const(c, params.p, modular=False)
            out.append(c.lift() if c.modular else c)
        return cls(params, tuple(out))


@dataclass(frozen=True)
class LazardElement:
    params: Params
    coeffs: tuple[Poly, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.params.N:
            raise ValueError(f"expected {self.params.N} digits, got {len(self.coeffs)}")

    # constructors
    @classmethod
    def zero(cls, params: Params) -> "LazardElement":
        z = Poly.zero(params.p)
        return cls(params, (z,) * params.N)

    @classmethod
    def one(cls, params: Params) -> "LazardElement":
        return cls.from_digit(params, Poly.const(1, params.p))

    @classmethod
    def from_digit(cls, params: Params, digit: Poly, shift: int = 0) -> "LazardElement":
        """``lift(digit) * pi^shift``; the digit must be an F_p polynomial."""
        z = Poly.zero(params.p)
        coeffs = [z] * params.N
        if shift < params.N:
            coeffs[shift] = digit
        return cls(params, tuple(coeffs))

    @classmethod
    def pi_power(cls, params: Params, k: int = 1) -> "LazardElement":
        return cls.from_digit(params, Poly.const(1, params.p), k)

    @classmethod
    def integer(cls, params: Params, n: int) -> "LazardElement":
        return normalize(RawSeries.from_list(params, [n]))

    # algebra
    def _check(self, other: "LazardElement") -> None:
        if self.params != other.params:
            raise ParamsMismatch(f"{self.params} vs {other.params}")

    def lifted(self) -> list[Poly]:
        return [c.lift() for c in self.coeffs]

    def __add__(self, other: "LazardElement") -> "LazardElement":
        return lz_add(self, other)

    def __sub__(self, other: "LazardElement") -> "LazardElement":
        return lz_sub(self, other)

    def __neg__(self) -> "LazardElement":
        return lz_sub(LazardElement.zero(self.params), self)

    def __mul__(self, other: "LazardElement") -> "LazardElement":
        return lz_mul(self, other)

    def __pow__(self, k: int) -> "LazardElement":
        return lz_pow(self, k)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def shift(self, k: int) -> "LazardElement":
        """Multiply by pi^k (exact on digits)."""
        z = Poly.zero(self.params.p)
        coeffs = ([z] * k + list(self.coeffs))[: self.params.N]
        return LazardElement(self.params, tuple(coeffs))

    def truncate(self, N: int) -> "LazardElement":
        return LazardElement(self.params.with_precision(N), self.coeffs[:N])

    def extend(self, N: int) -> "LazardElement":
        """Pad with zero digits to a higher precision (a lift, not a canonical element)."""
        z = Poly.zero(self.params.p)
        return LazardElement(self.params.with_precision(N), self.coeffs + (z,) * (N - self.params.N))

    # output
    def to_text(self) -> str:
        parts = []
        for j, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            body = c.to_text()
            if j == 0:
                parts.append(body)
                continue
            pi = "pi" if j == 1 else f"pi^{j}"
            if body == "1":
                parts.append(pi)
            elif len(c) > 1:
                parts.append(f"({body})*{pi}")
            else:
                parts.append(f"{body}*{pi}")
        return " + ".join(parts) if parts else "0"

    def __str__(self) -> str:
        return self.to_text()

    def to_json(self) -> dict:
        return {"params": self.params.to_json(), "coeffs": [c.to_json() for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> "LazardElement":
        params = Params.from_json(data["params"])
        return cls(params, tuple(Poly.from_json(c) for c in data["coeffs"]))


def _relation_terms(params: Params) -> list[tuple[int, Poly]]:
    """Pairs (i, omega_i^(q^t)) with p = sum_i omega_i^(q^t) pi^i modulo pi^N."""
    e = Fraction(params.q) ** params.t
    return [(i, Poly.var(omega(i), params.p, modular=False, exp=e)) for i in range(1, params.omega_count + 1)]


def normalize(s: RawSeries) -> LazardElement:
    params = s.params
    p, N = params.p, params.N
    for c in s.coeffs:
        if c.modular:
            raise ValueError("RawSeries coefficients must be integer polynomials")
        if any(v.kind == PI for v in c.variables()):
            raise ValueError("pi must not appear inside a coefficient")
    work: list[dict] = [dict(c.terms) for c in s.coeffs]
    rel = _relation_terms(params)
    digits = []
    for j in range(N):
        carry: dict = {}
        digit: dict = {}
        for m, c in work[j].items():
            d, r = divmod(c, p)
            if r:
                digit[m] = r
            if d:
                carry[m] = d
        digits.append(Poly(digit, p, True, _clean=True))
        if not carry:
            continue
        for i, w in rel:
            if j + i >= N:
                break
            ((wm, _),) = w.terms.items()
            target = work[j + i]
            for m, c in carry.items():
                mm = mono_mul(m, wm)
                target[mm] = target.get(mm, 0) + c
    return LazardElement(params, tuple(digits))


def lz_add(a: LazardElement, b: LazardElement) -> LazardElement:
    a._check(b)
    return normalize(RawSeries(a.params, tuple(x + y for x, y in zip(a.lifted(), b.lifted()))))


def lz_sub(a: LazardElement, b: LazardElement) -> LazardElement:
    a._check(b)
    return normalize(RawSeries(a.params, tuple(x - y for x, y in zip(a.lifted(), b.lifted()))))


def lz_mul(a: LazardElement, b: LazardElement) -> LazardElement:
    a._check(b)
    params = a.params
    N = params.N
    la, lb = a.lifted(), b.lifted()
    acc: list[dict] = [{} for _ in range(N)]
    for i in range(N):
        if la[i].is_zero():
            continue
        for j in range(N - i):
            if lb[j].is_zero():
                continue
            prod = la[i] * lb[j]
            target = acc[i + j]
            for m, c in prod.terms.items():
                target[m] = target.get(m, 0) + c
    out = tuple(Poly(t, params.p, modular=False) for t in acc)
    return normalize(RawSeries(params, out))


def lz_pow(a: LazardElement, k: int) -> LazardElement:
    if k < 0:
        raise ValueError("negative power")
    result = LazardElement.one(a.params)
    base = a
    while k:
        if k & 1:
            result = lz_mul(result, base)
        k >>= 1
        if k:
            base = lz_mul(base, base)
    return result


def teichmuller(r: Poly, params: Params) -> LazardElement:
    """Multiplicative lift [r] modulo pi^N of an F_p polynomial in perfected variables.

    Takes the canonical lift of r^(q^-(N-1)) and raises it to the q^(N-1).
    Each q-th power gains one digit of precision, so the k-th power is taken at
    precision k+1 only.
    """
    if not r.modular:
        raise ValueError("teichmuller expects an F_p polynomial")
    N = params.N
    root = r.frobenius(-(N - 1), params.q)
    x = LazardElement.from_digit(params.with_precision(1), root)
    for k in range(1, N):
        x = lz_pow(x.extend(k + 1), params.q)
    return x


def teichmuller_direct(r: Poly, params: Params) -> LazardElement:
    """Same lift computed at full precision throughout (slower reference path)."""
    N = params.N
    x = LazardElement.from_digit(params, r.frobenius(-(N - 1), params.q))
    for _ in range(N - 1):
        x = lz_pow(x, params.q)
    return x


def pi_coefficient(a: LazardElement, j: int) -> Poly:
    if not 0 <= j < a.params.N:
        raise IndexError(f"pi-degree {j} outside precision {a.params.N}")
    return a.coeffs[j]


def teichmuller_digits(a: LazardElement) -> list[Poly]:
    """Residues beta_i with a = sum_i [beta_i^(q^-i)] pi^i (coordinates of the inverse counit)."""
    params = a.params
    rest = a
    out = []
    for i in range(params.N):
        d = rest.coeffs[i]
        out.append(d.frobenius(i, params.q))
        if d.is_zero():
            continue
        lifted = teichmuller(d, params.with_precision(params.N - i)).extend(params.N).shift(i)
        rest = lz_sub(rest, lifted)
        if not rest.coeffs[i].is_zero():
            raise NormalFormError("digit not removed by its Teichmuller lift")
    return out
