"""Sparse multivariate polynomials over F_p and Z with exponents in Z[1/p].

A monomial is a tuple of ``(Var, exponent)`` pairs sorted by variable; an
exponent is a positive ``int`` or a ``Fraction`` whose denominator is a power
of p.  Polynomials are immutable once built.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Mapping, NamedTuple

Exponent = int | Fraction
Monomial = tuple  # tuple[tuple[Var, Exponent], ...]


class DomainMismatch(ValueError):
    """Operands live over different coefficient domains."""


# variable tags, in term-order precedence
OMEGA, X, Y, PI, GEN, JET = range(6)


class Var(NamedTuple):
    kind: int
    name: str
    index: int

    def __str__(self) -> str:
        return var_text(self)


def omega(i: int) -> Var:
    if i < 1:
        raise ValueError("omega indices start at 1")
    return Var(OMEGA, "", i)


def xvar(i: int) -> Var:
    return Var(X, "", i)


def yvar(i: int) -> Var:
    return Var(Y, "", i)


PI_VAR = Var(PI, "", 0)

_GEN_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*$")
_RESERVED = re.compile(r"(w\d+|X\d+|Y\d+|pi)$")


def gen(name: str) -> Var:
    if not _GEN_NAME.match(name) or _RESERVED.match(name):
        raise ValueError(f"invalid generator name {name!r}")
    return Var(GEN, name, 0)


def jet(name: str, n: int) -> Var:
    """The jet variable d^[n] of a generator; d^[0] is the generator itself."""
    if n < 0:
        raise ValueError("jet order must be >= 0")
    if name == "pi":
        return PI_VAR if n == 0 else Var(JET, "pi", n)
    if n == 0:
        return gen(name)
    gen(name)
    return Var(JET, name, n)


def var_text(v: Var) -> str:
    if v.kind == OMEGA:
        return f"w{v.index}"
    if v.kind == X:
        return f"X{v.index}"
    if v.kind == Y:
        return f"Y{v.index}"
    if v.kind == PI:
        return "pi"
    if v.kind == GEN:
        return v.name
    return f"d{v.index}:{v.name}"


def var_latex(v: Var) -> str:
    if v.kind == OMEGA:
        return rf"\omega_{{{v.index}}}"
    if v.kind in (X, Y):
        return f"{'X' if v.kind == X else 'Y'}_{{{v.index}}}"
    if v.kind == PI:
        return r"\pi"
    head, *idx = v.name.split("_")
    base = r"\pi" if v.name == "pi" else head + (f"_{{{','.join(idx)}}}" if idx else "")
    if v.kind == GEN:
        return base
    return rf"d^{{[{v.index}]}}{base}"


def parse_var(text: str) -> Var:
    m = re.fullmatch(r"d(\d+):(.+)", text)
    if m:
        return jet(m.group(2), int(m.group(1)))
    m = re.fullmatch(r"([wXY])(\d+)", text)
    if m:
        kind = {"w": OMEGA, "X": X, "Y": Y}[m.group(1)]
        return Var(kind, "", int(m.group(2)))
    if text == "pi":
        return PI_VAR
    return gen(text)


# -- exponents ---------------------------------------------------------------


class PExponent(NamedTuple):
    """Exponent numerator / p**denom_exp in lowest terms."""

    numerator: int
    denom_exp: int

    def value(self, p: int) -> Exponent:
        return _norm(Fraction(self.numerator, p**self.denom_exp))


def _norm(e: Exponent) -> Exponent:
    if type(e) is Fraction and e.denominator == 1:
        return e.numerator
    return e


def pexponent(e: Exponent, p: int) -> PExponent:
    e = Fraction(e)
    if e < 0:
        raise ValueError("negative exponent")
    den, k = e.denominator, 0
    while den % p == 0:
        den //= p
        k += 1
    if den != 1:
        raise ValueError(f"exponent {e} does not lie in Z[1/{p}]")
    return PExponent(e.numerator, k)


def _exp_text(e: Exponent) -> str:
    e = _norm(e)
    if isinstance(e, int):
        return str(e)
    return f"({e.numerator}/{e.denominator})"


# -- monomials ---------------------------------------------------------------


@lru_cache(maxsize=1 << 20)
def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for v, e in b:
        s = d.get(v)
        if s is None:
            d[v] = e
        else:
            s = s + e
            if type(s) is Fraction and s.denominator == 1:
                s = s.numerator
            d[v] = s
    return tuple(sorted(d.items()))


def mono_scale(a: Monomial, factor: Exponent, select: Callable[[Var], bool] | None = None) -> Monomial:
    out = []
    for v, e in a:
        if select is None or select(v):
            e = _norm(e * factor)
        out.append((v, e))
    return tuple(out)


def mono_degree(a: Monomial) -> Exponent:
    return _norm(sum((e for _, e in a), 0))


def mono_order_key(a: Monomial):
    """Emission key: ascending total degree, ties by lex (earlier variable, higher power first)."""
    return (mono_degree(a), tuple((v, -e) for v, e in a))


def mono_from(pairs: Iterable[tuple[Var, Exponent]]) -> Monomial:
    d: dict[Var, Exponent] = {}
    for v, e in pairs:
        d[v] = _norm(d.get(v, 0) + e)
    return tuple(sorted((v, e) for v, e in d.items() if e != 0))


# -- polynomials -------------------------------------------------------------


class Poly:
    """Polynomial over F_p (``modular=True``) or Z, keyed by monomial."""

    __slots__ = ("p", "modular", "terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int], p: int, modular: bool = True, _clean: bool = False):
        self.p = p
        self.modular = modular
        if _clean:
            self.terms = terms
        elif modular:
            self.terms = {m: c % p for m, c in terms.items() if c % p}
        else:
            self.terms = {m: c for m, c in terms.items() if c}
        self._hash = None

    # constructors
    @classmethod
    def zero(cls, p: int, modular: bool = True) -> "Poly":
        return cls({}, p, modular, _clean=True)

    @classmethod
    def const(cls, c: int, p: int, modular: bool = True) -> "Poly":
        return cls({(): c}, p, modular)

    @classmethod
    def monomial(cls, pairs: Iterable[tuple[Var, Exponent]], p: int, modular: bool = True, coeff: int = 1) -> "Poly":
        return cls({mono_from(pairs): coeff}, p, modular)

    @classmethod
    def var(cls, v: Var, p: int, modular: bool = True, exp: Exponent = 1) -> "Poly":
        return cls({((v, _norm(exp)),): 1}, p, modular)

    # basic queries
    @property
    def domain(self) -> str:
        return "Fp" if self.modular else "Z"

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def variables(self) -> set[Var]:
        return {v for m in self.terms for v, _ in m}

    def constant_term(self) -> int:
        return self.terms.get((), 0)

    def is_constant(self) -> bool:
        return all(not m for m in self.terms)

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        return sorted(self.terms.items(), key=lambda mc: mono_order_key(mc[0]))

    def degree_in(self, v: Var) -> Exponent:
        return max((e for m in self.terms for w, e in m if w == v), default=0)

    # comparison
    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Poly.const(other, self.p, self.modular)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.p == other.p and self.modular == other.modular and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.p, self.modular, frozenset(self.terms.items())))
        return self._hash

    def _check(self, other: "Poly") -> None:
        if self.p != other.p or self.modular != other.modular:
            raise DomainMismatch(f"{self.domain}(p={self.p}) vs {other.domain}(p={other.p})")

    def _coerce(self, other) -> "Poly":
        if isinstance(other, int):
            return Poly.const(other, self.p, self.modular)
        if not isinstance(other, Poly):
            raise TypeError(f"cannot combine Poly with {type(other).__name__}")
        self._check(other)
        return other

    # ring operations
    def __add__(self, other) -> "Poly":
        other = self._coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return Poly(out, self.p, self.modular)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly({m: -c for m, c in self.terms.items()}, self.p, self.modular)

    def __sub__(self, other) -> "Poly":
        other = self._coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) - c
        return Poly(out, self.p, self.modular)

    def __rsub__(self, other) -> "Poly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Poly":
        if isinstance(other, int):
            return Poly({m: c * other for m, c in self.terms.items()}, self.p, self.modular)
        other = self._coerce(other)
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out: dict = {}
        get = out.get
        for mb, cb in b.items():
            for ma, ca in a.items():
                m = mono_mul(ma, mb)
                out[m] = get(m, 0) + ca * cb
        return Poly(out, self.p, self.modular)

    __rmul__ = __mul__

    def __pow__(self, e) -> "Poly":
        return self.pow(e)

    def pow(self, e: Exponent) -> "Poly":
        """Power by a nonnegative exponent; over F_p any e in Z[1/p] is allowed."""
        e = _norm(Fraction(e)) if isinstance(e, Fraction) else e
        if e < 0:
            raise ValueError("negative power")
        if len(self.terms) == 1:
            ((m, c),) = self.terms.items()
            if isinstance(e, int):
                return Poly({mono_scale(m, e): c**e}, self.p, self.modular)
            if c == 1 or (self.modular and c % self.p == 1):
                return Poly({mono_scale(m, e): 1}, self.p, self.modular)
        if not isinstance(e, int):
            if not self.modular:
                raise ValueError("fractional power of a Z-polynomial that is not a monomial")
            pe = pexponent(e, self.p)
            return self.scale_exponents(Fraction(1, self.p**pe.denom_exp)).pow(pe.numerator)
        if e == 0:
            return Poly.const(1, self.p, self.modular)
        if self.modular:
            k = 0
            while e % self.p == 0:
                e //= self.p
                k += 1
            base = self.scale_exponents(self.p**k) if k else self
        else:
            base = self
        result = None
        while True:
            if e & 1:
                result = base if result is None else result * base
            e >>= 1
            if not e:
                break
            base = base * base
        return result

    # exponent maps
    def scale_exponents(self, factor: Exponent, select: Callable[[Var], bool] | None = None) -> "Poly":
        factor = _norm(Fraction(factor))
        out: dict = {}
        for m, c in self.terms.items():
            mm = mono_scale(m, factor, select)
            out[mm] = out.get(mm, 0) + c
        return Poly(out, self.p, self.modular)

    def frobenius(self, s: int, q: int) -> "Poly":
        if not self.modular:
            raise DomainMismatch("Frobenius is only defined over F_p")
        return self.scale_exponents(Fraction(q) ** s)

    def coefficient_frobenius(self, s: int, q: int) -> "Poly":
        return self.scale_exponents(Fraction(q) ** s, lambda v: v.kind == OMEGA)

    # coefficient domain changes
    def reduce(self) -> "Poly":
        return Poly(self.terms, self.p, True)

    def lift(self) -> "Poly":
        if not self.modular:
            return self
        return Poly(dict(self.terms), self.p, False, _clean=True)

    # substitution
    def substitute(self, images: Mapping[Var, "Poly"]) -> "Poly":
        """Ring map sending each listed variable to a polynomial; others are kept."""
        if not images:
            return self
        cache: dict = {}
        total: dict = {}
        for m, c in self.terms.items():
            kept = []
            acc = None
            for v, e in m:
                img = images.get(v)
                if img is None:
                    kept.append((v, e))
                    continue
                pw = cache.get((v, e))
                if pw is None:
                    pw = cache[(v, e)] = img.pow(e)
                acc = pw if acc is None else acc * pw
                if not acc:
                    break
            if acc is None:
                acc_terms = {tuple(kept): c}
            elif not acc:
                continue
            else:
                km = tuple(kept)
                acc_terms = {mono_mul(mm, km): cc * c for mm, cc in acc.terms.items()}
            for mm, cc in acc_terms.items():
                total[mm] = total.get(mm, 0) + cc
        return Poly(total, self.p, self.modular)

    def rename(self, mapping: Mapping[Var, Var]) -> "Poly":
        out: dict = {}
        for m, c in self.terms.items():
            mm = mono_from((mapping.get(v, v), e) for v, e in m)
            out[mm] = out.get(mm, 0) + c
        return Poly(out, self.p, self.modular)

    def drop_if(self, pred: Callable[[Monomial], bool]) -> "Poly":
        return Poly({m: c for m, c in self.terms.items() if not pred(m)}, self.p, self.modular, _clean=True)

    # rendering
    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts: list[str] = []
        for m, c in self.sorted_terms():
            neg = c < 0
            c = abs(c)
            factors = [var_text(v) + ("" if e == 1 else "^" + _exp_text(e)) for v, e in m]
            if c != 1 or not factors:
                factors.insert(0, str(c))
            body = "*".join(factors)
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts)

    def to_latex(self) -> str:
        if not self.terms:
            return "0"
        parts: list[str] = []
        for m, c in self.sorted_terms():
            neg = c < 0
            c = abs(c)
            factors = []
            for v, e in m:
                if e == 1:
                    factors.append(var_latex(v))
                else:
                    e = _norm(e)
                    ex = str(e) if isinstance(e, int) else rf"\frac{{{e.numerator}}}{{{e.denominator}}}"
                    base = var_latex(v)
                    if v.kind in (OMEGA, X, Y) or v.kind == JET:
                        base = "{" + base + "}"
                    factors.append(f"{base}^{{{ex}}}")
            if c != 1 or not factors:
                factors.insert(0, str(c))
            body = " ".join(factors)
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"Poly[{self.domain},p={self.p}]({self.to_text()})"

    def to_json(self) -> dict:
        terms = []
        for m, c in self.sorted_terms():
            mono = []
            for v, e in m:
                pe = pexponent(e, self.p)
                mono.append({"var": var_text(v), "num": pe.numerator, "pden": pe.denom_exp})
            terms.append({"coeff": str(c), "monomial": mono})
        return {"domain": self.domain, "p": self.p, "terms": terms}

    @classmethod
    def from_json(cls, data: Mapping) -> "Poly":
        p = int(data["p"])
        modular = {"Fp": True, "Z": False}[data["domain"]]
        terms: dict = {}
        for term in data["terms"]:
            m = mono_from(
                (parse_var(f["var"]), PExponent(int(f["num"]), int(f["pden"])).value(p)) for f in term["monomial"]
            )
            terms[m] = terms.get(m, 0) + int(term["coeff"])
        return cls(terms, p, modular)


# -- module-level operations -------------------------------------------------


def poly_add(a: Poly, b: Poly) -> Poly:
    a._check(b)
    return a + b


def poly_mul(a: Poly, b: Poly) -> Poly:
    a._check(b)
    return a * b


def frobenius(f: Poly, s: int, q: int) -> Poly:
    """f raised to the q**s (exponent scaling; coefficients in F_p are fixed)."""
    return f.frobenius(s, q)


def coefficient_frobenius(f: Poly, s: int, q: int) -> Poly:
    """Frobenius on the omega coefficients only."""
    return f.coefficient_frobenius(s, q)


def reduce_mod_p(f: Poly) -> Poly:
    return f.reduce()


def lift(f: Poly) -> Poly:
    """Canonical lift: F_p coefficients to their representatives in [0, p-1]."""
    return f.lift()


def cq_polynomial(p: int, q: int, x: Var = xvar(0), y: Var = yvar(0)) -> Poly:
    """The integer polynomial C_q with p*C_q = X^q + Y^q - (X+Y)^q."""
    from math import comb

    terms = {}
    for k in range(1, q):
        c = -comb(q, k)
        if c % p:
            raise ArithmeticError("binomial coefficient not divisible by p")
        terms[mono_from([(x, k), (y, q - k)])] = c // p
    return Poly(terms, p, modular=False)
