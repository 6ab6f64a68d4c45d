"""Lazardian Witt vectors over concrete residue rings.

Coordinates live in a :class:`ResidueRing`: F_p polynomials in perfected
generators (and the omega_i, unless specialised) modulo one of the supported
relation classes.  Addition and multiplication evaluate the cached arithmetic
polynomials coordinate by coordinate.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .arith import ADD, DEFAULT_TABLE, MUL, QKey, QTable, remainder_poly
from .lazard import RawSeries
from .poly import GEN, JET, OMEGA, X, Y, Poly, Var, mono_from, omega, parse_var, var_text, xvar, yvar


class RingMismatch(ValueError):
    pass


class NotPerfectError(ValueError):
    """The operation needs a perfect residue ring."""


class UnsupportedInput(ValueError):
    pass


class LinearityError(ArithmeticError):
    pass


@dataclass(frozen=True)
class ResidueRing:
    """F_p[omega]^pf-algebra given by generators and simple relations.

    ``nilpotent`` holds relations ``g^k = 0``; ``omega_values`` holds relations
    ``omega_i = value`` with the value a polynomial in the generators.  With no
    relations the ring is the perfected polynomial ring and is perfect.
    """

    p: int
    q: int
    generators: tuple[Var, ...] = ()
    nilpotent: tuple[tuple[Var, int], ...] = ()
    omega_values: tuple[tuple[int, Poly], ...] = ()
    _images: dict = field(default=None, compare=False, hash=False, repr=False)

    def __post_init__(self):
        gens = set(self.generators)
        for v in self.generators:
            if v.kind not in (GEN, JET):
                raise ValueError(f"generator {var_text(v)} must be a named or jet variable")
        for v, k in self.nilpotent:
            if v not in gens or k < 1:
                raise ValueError(f"bad nilpotency relation {var_text(v)}^{k}")
        for i, val in self.omega_values:
            if not val.modular or val.p != self.p:
                raise ValueError("omega values must be F_p polynomials")
            if not val.variables() <= gens:
                raise ValueError(f"value of w{i} must only involve generators")
        object.__setattr__(self, "_images", {omega(i): v for i, v in self.omega_values})

    # constructors
    @classmethod
    def perfect(cls, p: int, q: int, names: Iterable[str] = ()) -> "ResidueRing":
        return cls(p, q, tuple(parse_var(n) for n in names))

    @classmethod
    def truncated(cls, p: int, q: int, bounds: Mapping[str, int]) -> "ResidueRing":
        gens = tuple(parse_var(n) for n in bounds)
        return cls(p, q, gens, tuple((parse_var(n), k) for n, k in bounds.items()))

    @classmethod
    def specialized(cls, p: int, q: int, names: Iterable[str], values: Mapping[int, Poly]) -> "ResidueRing":
        return cls(p, q, tuple(parse_var(n) for n in names), omega_values=tuple(sorted(values.items())))

    @property
    def is_perfect(self) -> bool:
        return not self.nilpotent

    @property
    def relation_class(self) -> str:
        if self.nilpotent:
            return "nilpotent"
        if self.omega_values:
            return "specialized"
        return "perfect"

    # elements
    def reduce(self, f: Poly) -> Poly:
        if self._images:
            f = f.substitute(self._images)
        if self.nilpotent:
            bounds = dict(self.nilpotent)
            f = f.drop_if(lambda m: any(v in bounds and e >= bounds[v] for v, e in m))
        return f

    def element(self, f: Poly | int) -> Poly:
        if isinstance(f, int):
            return Poly.const(f, self.p)
        if not f.modular or f.p != self.p:
            raise RingMismatch("residue elements are F_p polynomials over the ring's prime")
        allowed = set(self.generators)
        for v in f.variables():
            if v not in allowed and v.kind != OMEGA:
                raise RingMismatch(f"{var_text(v)} is not a generator of this ring")
        return self.reduce(f)

    def gen(self, name: str) -> Poly:
        v = parse_var(name)
        if v not in self.generators:
            raise KeyError(name)
        return self.reduce(Poly.var(v, self.p))

    def zero(self) -> Poly:
        return Poly.zero(self.p)

    def one(self) -> Poly:
        return Poly.const(1, self.p)

    def omega_value(self, i: int) -> Poly:
        return self.reduce(Poly.var(omega(i), self.p))

    def qth_root(self, f: Poly, k: int = 1) -> Poly:
        if not self.is_perfect:
            raise NotPerfectError("q-th roots need a perfect ring")
        return self.reduce(f.frobenius(-k, self.q))

    def random_element(self, rng: random.Random, terms: int = 2, degree: int = 2, fractional: bool = True,
                       omegas: int = 2, zero_prob: float = 0.1) -> Poly:
        if rng.random() < zero_prob:
            return self.zero()
        pool = list(self.generators)
        special = {i for i, _ in self.omega_values}
        pool += [omega(i) for i in range(1, omegas + 1) if i not in special]
        denoms = [1, self.p, self.p**2] if fractional and self.is_perfect else [1]
        out = {}
        for _ in range(rng.randint(1, terms)):
            k = rng.randint(0, min(degree, len(pool)))
            pairs = [(v, Fraction(rng.randint(1, degree * 2), rng.choice(denoms))) for v in rng.sample(pool, k)]
            m = mono_from(pairs)
            out[m] = rng.randint(1, self.p - 1)
        return self.element(Poly(out, self.p))

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "q": self.q,
            "generators": [var_text(v) for v in self.generators],
            "nilpotent": {var_text(v): k for v, k in self.nilpotent},
            "omega_values": {str(i): v.to_json() for i, v in self.omega_values},
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "ResidueRing":
        return cls(
            int(data["p"]),
            int(data["q"]),
            tuple(parse_var(g) for g in data.get("generators", [])),
            tuple((parse_var(g), int(k)) for g, k in data.get("nilpotent", {}).items()),
            tuple(sorted((int(i), Poly.from_json(v)) for i, v in data.get("omega_values", {}).items())),
        )


@dataclass(frozen=True)
class WittVector:
    ring: ResidueRing
    coords: tuple[Poly, ...]
    t: int = 0

    @property
    def window(self) -> int:
        return len(self.coords)

    def __add__(self, other: "WittVector") -> "WittVector":
        return witt_add(self, other)

    def __mul__(self, other: "WittVector") -> "WittVector":
        return witt_mul(self, other)

    def __neg__(self) -> "WittVector":
        return witt_neg(self)

    def __sub__(self, other: "WittVector") -> "WittVector":
        return witt_add(self, witt_neg(other))

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coords)

    def to_text(self) -> str:
        return "(" + ", ".join(c.to_text() for c in self.coords) + ")"

    def __str__(self) -> str:
        return self.to_text()

    def to_json(self) -> dict:
        return {"ring": self.ring.to_json(), "t": self.t, "coords": [c.to_json() for c in self.coords]}

    @classmethod
    def from_json(cls, data: Mapping) -> "WittVector":
        ring = ResidueRing.from_json(data["ring"])
        return make_vector(ring, [Poly.from_json(c) for c in data["coords"]], int(data.get("t", 0)))


def make_vector(ring: ResidueRing, coords: Sequence[Poly | int], t: int = 0) -> WittVector:
    return WittVector(ring, tuple(ring.element(c) for c in coords), t)


def zero_vector(ring: ResidueRing, window: int, t: int = 0) -> WittVector:
    return WittVector(ring, (ring.zero(),) * window, t)


def one_vector(ring: ResidueRing, window: int, t: int = 0) -> WittVector:
    return teichmuller_section(ring.one(), ring, window, t)


def pi_vector(ring: ResidueRing, window: int, t: int = 0) -> WittVector:
    coords = [ring.zero()] * window
    if window > 1:
        coords[1] = ring.one()
    return WittVector(ring, tuple(coords), t)


def random_vector(ring: ResidueRing, window: int, rng: random.Random, t: int = 0, **kw) -> WittVector:
    return WittVector(ring, tuple(ring.random_element(rng, **kw) for _ in range(window)), t)


# -- ring operations ---------------------------------------------------------


def _check_pair(a: WittVector, b: WittVector) -> None:
    if a.ring != b.ring:
        raise RingMismatch("Witt vectors over different residue rings")
    if a.window != b.window:
        raise RingMismatch(f"window {a.window} vs {b.window}")
    if a.t != b.t:
        raise RingMismatch(f"twist {a.t} vs {b.t}")


def _evaluate(f: Poly, ring: ResidueRing, xs: Sequence[Poly], ys: Sequence[Poly]) -> Poly:
    images: dict[Var, Poly] = {}
    for v in f.variables():
        if v.kind == X:
            images[v] = xs[v.index]
        elif v.kind == Y:
            images[v] = ys[v.index]
    images.update(ring._images)
    return ring.reduce(f.substitute(images))


def _apply(op: str, a: WittVector, b: WittVector, table: QTable) -> WittVector:
    _check_pair(a, b)
    ring = a.ring
    out = []
    for n in range(a.window):
        qn = table.get(QKey(op, n, ring.p, ring.q, a.t))
        out.append(_evaluate(qn, ring, a.coords, b.coords))
    return WittVector(ring, tuple(out), a.t)


def witt_add(a: WittVector, b: WittVector, table: QTable | None = None) -> WittVector:
    return _apply(ADD, a, b, table or DEFAULT_TABLE)


def witt_mul(a: WittVector, b: WittVector, table: QTable | None = None) -> WittVector:
    return _apply(MUL, a, b, table or DEFAULT_TABLE)


def witt_neg(a: WittVector, table: QTable | None = None) -> WittVector:
    """Additive inverse by solving Q_n^+(a, b) = 0 for b_n one coordinate at a time."""
    table = table or DEFAULT_TABLE
    ring = a.ring
    b: list[Poly] = []
    for n in range(a.window):
        r = remainder_poly(n, ring.p, ring.q, a.t, table)
        if {xvar(n), yvar(n)} & r.variables():
            raise LinearityError(f"Q_{n}^+ is not linear in X_{n}, Y_{n}")
        val = _evaluate(r, ring, a.coords, b + [ring.zero()])
        b.append(ring.reduce(-(a.coords[n] + val)))
    return WittVector(ring, tuple(b), a.t)


def scalar_multiple(k: int, a: WittVector) -> WittVector:
    """k * a by double-and-add."""
    if k < 0:
        return witt_neg(scalar_multiple(-k, a))
    result = zero_vector(a.ring, a.window, a.t)
    base = a
    while k:
        if k & 1:
            result = witt_add(result, base)
        k >>= 1
        if k:
            base = witt_add(base, base)
    return result


def witt_pow(a: WittVector, k: int) -> WittVector:
    result = one_vector(a.ring, a.window, a.t)
    base = a
    while k:
        if k & 1:
            result = witt_mul(result, base)
        k >>= 1
        if k:
            base = witt_mul(base, base)
    return result


# -- structure ---------------------------------------------------------------


def teichmuller_section(alpha: Poly | int, ring: ResidueRing, window: int, t: int = 0) -> WittVector:
    coords = [ring.element(alpha)] + [ring.zero()] * (window - 1)
    return WittVector(ring, tuple(coords[:window]), t)


def integer_image(n: int, ring: ResidueRing, window: int, t: int = 0) -> WittVector:
    return scalar_multiple(n, one_vector(ring, window, t))


def structure_map(x: RawSeries, ring: ResidueRing, window: int | None = None) -> WittVector:
    """Image of sum_j c_j pi^j (c_j integer polynomials in omega) under the L-algebra structure."""
    params = x.params
    if params.p != ring.p or params.q != ring.q:
        raise RingMismatch("series and ring disagree on (p, q)")
    window = window or params.N
    t = params.t
    total = zero_vector(ring, window, t)
    pi = pi_vector(ring, window, t)
    shift = one_vector(ring, window, t)
    for j, c in enumerate(x.coeffs):
        if j > 0:
            shift = witt_mul(shift, pi)
        if j >= window:
            break
        for m, k in c.sorted_terms():
            if any(v.kind != OMEGA for v, _ in m):
                raise UnsupportedInput("structure map input must be built from omega, pi and integers")
            mono = Poly({m: 1}, ring.p)
            term = scalar_multiple(k, teichmuller_section(ring.reduce(mono), ring, window, t))
            total = witt_add(total, witt_mul(term, shift))
    return total


def frobenius_op(a: WittVector) -> WittVector:
    ring = a.ring
    return WittVector(ring, tuple(ring.reduce(c.pow(ring.q)) for c in a.coords), a.t + 1)


def frobenius_inverse(a: WittVector) -> WittVector:
    """Coordinatewise q-th root; inverse of F on perfect rings."""
    ring = a.ring
    return WittVector(ring, tuple(ring.qth_root(c) for c in a.coords), a.t - 1)


def verschiebung(a: WittVector) -> WittVector:
    return WittVector(a.ring, (a.ring.zero(),) + a.coords, a.t - 1)


def verschiebung_power(a: WittVector, r: int) -> WittVector:
    for _ in range(r):
        a = verschiebung(a)
    return a


def iota(a: WittVector) -> WittVector:
    return WittVector(a.ring, a.coords + (a.ring.zero(),), a.t)


def truncate(a: WittVector, r: int) -> WittVector:
    if not 0 <= r <= a.window:
        raise IndexError(f"cannot truncate window {a.window} to {r}")
    return WittVector(a.ring, a.coords[:r], a.t)


def unshift(a: WittVector, r: int) -> WittVector:
    """Inverse of V^r on its image: drop r leading zero coordinates."""
    if any(not c.is_zero() for c in a.coords[:r]):
        raise ValueError("vector is not in the image of V^r")
    return WittVector(a.ring, a.coords[r:], a.t + r)


def map_vector(a: WittVector, morphism: "RingMorphism") -> WittVector:
    return WittVector(morphism.target, tuple(morphism(c) for c in a.coords), a.t)


@dataclass(frozen=True)
class RingMorphism:
    """Map of residue rings given by images of generators; omega goes to the target's omega."""

    source: ResidueRing
    target: ResidueRing
    images: tuple[tuple[Var, Poly], ...]

    def __call__(self, f: Poly) -> Poly:
        return self.target.reduce(f.substitute(dict(self.images)))


# -- unit and counit ---------------------------------------------------------


@dataclass(frozen=True)
class UWClass:
    """Class of a Witt vector modulo pi W(k)."""

    vector: WittVector

    def residue(self) -> Poly:
        return self.vector.coords[0]

    def __eq__(self, other) -> bool:
        if not isinstance(other, UWClass):
            return NotImplemented
        return self.vector.ring == other.vector.ring and self.residue() == other.residue()

    def __hash__(self) -> int:
        return hash(self.residue())


def unit_eta(alpha: Poly | int, ring: ResidueRing, window: int, t: int = 0) -> UWClass:
    if not ring.is_perfect:
        raise NotPerfectError("the unit is only defined for perfect residue rings")
    return UWClass(teichmuller_section(alpha, ring, window, t))


def uw_add(a: UWClass, b: UWClass) -> UWClass:
    return UWClass(witt_add(a.vector, b.vector))


def uw_mul(a: UWClass, b: UWClass) -> UWClass:
    return UWClass(witt_mul(a.vector, b.vector))


def pi_multiple_witness(a: WittVector) -> WittVector:
    """For a = (0, a_1, a_2, ...) return b = (a_1^(1/q), a_2^(1/q), ...) with a = pi * b."""
    ring = a.ring
    if not ring.is_perfect:
        raise NotPerfectError("q-th roots need a perfect ring")
    if not a.coords[0].is_zero():
        raise ValueError("vector has nonzero residue")
    roots = tuple(ring.qth_root(c) for c in a.coords[1:]) + (ring.zero(),)
    return WittVector(ring, roots, a.t)


def counit_epsilon_expansion(a: WittVector) -> WittVector:
    """sum_i [a_i^(q^-i)] pi^i evaluated with Witt-vector operations."""
    ring = a.ring
    if not ring.is_perfect:
        raise NotPerfectError("the counit needs a perfect residue ring")
    w, t = a.window, a.t
    pi = pi_vector(ring, w, t)
    total = zero_vector(ring, w, t)
    shift = one_vector(ring, w, t)
    for i, c in enumerate(a.coords):
        if i > 0:
            shift = witt_mul(shift, pi)
        if c.is_zero():
            continue
        lift = teichmuller_section(ring.qth_root(c, i) if i else c, ring, w, t)
        total = witt_add(total, witt_mul(lift, shift))
    return total
