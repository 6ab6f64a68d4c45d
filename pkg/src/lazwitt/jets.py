"""Hasse-Schmidt derivation algebras and Lazardian jet algebras on free instances.

HS^m of a polynomial ring is the polynomial ring on the jet variables
``d^[n] t_j`` (``d^[0] t_j = t_j``), so elements are plain :class:`Poly`
objects.  The truncated power series ring ``A = k[[pi]]/(pi^(m+1))`` is a
:class:`KSeries`; the equal-characteristic universal residual perfection is the
map :func:`phi`.

The Lazardian side works on free algebras over Lazard's ring: d^[n] of a sum or
product is rewritten with the arithmetic polynomials, constants from the base
ring are expanded into Teichmuller coordinates.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence

from . import expr as ex
from .arith import ADD, DEFAULT_TABLE, MUL, QKey, QTable
from .lazard import RawSeries, normalize, teichmuller_digits
from .params import Params
from .poly import GEN, JET, OMEGA, PI, PI_VAR, Poly, Var, gen, jet, mono_from, var_text, xvar, yvar
from .witt import (
    ResidueRing,
    WittVector,
    integer_image,
    pi_vector,
    teichmuller_section,
    witt_add,
    witt_mul,
)


class JetError(ValueError):
    pass


# -- Hasse-Schmidt derivations -----------------------------------------------


def _source_name(v: Var) -> str:
    if v.kind == PI:
        return "pi"
    if v.kind != GEN:
        raise JetError(f"cannot differentiate through {var_text(v)}")
    return v.name


def jet_series(v: Var, m: int, p: int, modular: bool = True) -> list[Poly]:
    """(d^[0] v, ..., d^[m] v) as polynomials."""
    name = _source_name(v)
    return [Poly.var(jet(name, n), p, modular) for n in range(m + 1)]


def series_mul(a: Sequence[Poly], b: Sequence[Poly], m: int) -> list[Poly]:
    out = []
    for n in range(m + 1):
        acc = a[0] * b[n]
        for i in range(1, n + 1):
            if a[i] and b[n - i]:
                acc = acc + a[i] * b[n - i]
        out.append(acc)
    return out


def _series_pow(a: list[Poly], e: int, m: int) -> list[Poly]:
    one = Poly.const(1, a[0].p, a[0].modular)
    zero = Poly.zero(a[0].p, a[0].modular)
    result = [one] + [zero] * m
    base = a
    while e:
        if e & 1:
            result = series_mul(result, base, m)
        e >>= 1
        if e:
            base = series_mul(base, base, m)
    return result


def hs_series(f: Poly, m: int) -> list[Poly]:
    """(d^[0] f, ..., d^[m] f) for a polynomial in generators (and pi)."""
    p, modular = f.p, f.modular
    zero = Poly.zero(p, modular)
    total = [zero] * (m + 1)
    powers: dict = {}
    for mono, c in f.terms.items():
        acc = [Poly.const(c, p, modular)] + [zero] * m
        for v, e in mono:
            if not isinstance(e, int):
                raise JetError("Hasse-Schmidt derivatives need integer exponents")
            key = (v, e)
            if key not in powers:
                powers[key] = _series_pow(jet_series(v, m, p, modular), e, m)
            acc = series_mul(acc, powers[key], m)
        total = [x + y for x, y in zip(total, acc)]
    return total


def hs_derive(f: Poly, n: int, m: int) -> Poly:
    """d^[n] f in HS^m of the polynomial ring containing f."""
    if not 0 <= n <= m:
        raise JetError(f"jet order {n} outside 0..{m}")
    return hs_series(f, m)[n]


def hs_derive_expr(e: ex.Expr, n: int, m: int, p: int, modular: bool = True) -> Poly:
    """d^[n] of an expression tree by the additivity and Leibniz rules, without expanding first."""
    if not 0 <= n <= m:
        raise JetError(f"jet order {n} outside 0..{m}")
    memo: dict = {}

    def d(node: ex.Expr, k: int) -> Poly:
        key = (id(node), k)
        if key in memo:
            return memo[key]
        if isinstance(node, ex.Int):
            out = Poly.const(node.value if k == 0 else 0, p, modular)
        elif isinstance(node, ex.Sym):
            out = Poly.var(jet(_source_name(node.var), k), p, modular)
        elif isinstance(node, ex.Add):
            out = d(node.left, k) + d(node.right, k)
        else:
            out = Poly.zero(p, modular)
            for i in range(k + 1):
                out = out + d(node.left, i) * d(node.right, k - i)
        memo[key] = out
        return out

    return d(e, n)


def hs_functor(f: Poly, images: dict[Var, Poly], m: int) -> Poly:
    """HS^m(g) for the substitution g: generator -> polynomial, applied to a jet polynomial."""
    subst: dict[Var, Poly] = {}
    for v, img in images.items():
        series = hs_series(img, m)
        for n in range(m + 1):
            subst[jet(_source_name(v), n)] = series[n]
    return f.substitute(subst)


# -- the ring A = k[[pi]]/(pi^(m+1)) ----------------------------------------


@dataclass(frozen=True)
class KSeries:
    """Element sum_i a_i pi^i of k[[pi]]/(pi^(m+1)) with a_i in k."""

    coeffs: tuple[Poly, ...]

    @property
    def m(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[Poly], m: int, p: int, modular: bool = True) -> "KSeries":
        zero = Poly.zero(p, modular)
        cs = list(coeffs[: m + 1]) + [zero] * (m + 1 - len(coeffs))
        return cls(tuple(cs))

    @classmethod
    def from_poly(cls, f: Poly, m: int) -> "KSeries":
        """Split a polynomial in generators and pi by pi-degree."""
        buckets: list[dict] = [{} for _ in range(m + 1)]
        for mono, c in f.terms.items():
            k = dict(mono).get(PI_VAR, 0)
            if not isinstance(k, int):
                raise JetError("pi must appear with integer exponent")
            if k > m:
                continue
            rest = tuple((v, e) for v, e in mono if v != PI_VAR)
            buckets[k][rest] = buckets[k].get(rest, 0) + c
        return cls(tuple(Poly(b, f.p, f.modular) for b in buckets))

    def to_poly(self) -> Poly:
        pi = Poly.var(PI_VAR, self.coeffs[0].p, self.coeffs[0].modular)
        out = Poly.zero(self.coeffs[0].p, self.coeffs[0].modular)
        for i, c in enumerate(self.coeffs):
            out = out + c * pi.pow(i)
        return out

    def __add__(self, other: "KSeries") -> "KSeries":
        return KSeries(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other: "KSeries") -> "KSeries":
        return KSeries(tuple(series_mul(self.coeffs, other.coeffs, self.m)))

    def to_text(self) -> str:
        return render_series(self.coeffs)


_SUPERSCRIPT = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


def render_series(coeffs: Sequence[Poly]) -> str:
    parts = []
    for i, c in enumerate(coeffs):
        if c.is_zero():
            continue
        body = c.to_text()
        if i == 0:
            parts.append(body)
            continue
        pi = "π" if i == 1 else "π" + str(i).translate(_SUPERSCRIPT)
        if body == "1":
            parts.append(pi)
        elif len(c) > 1:
            parts.append(f"({body})·{pi}")
        else:
            parts.append(f"{body}·{pi}")
    return " + ".join(parts) if parts else "0"


def random_kseries(rng: random.Random, names: Sequence[str], m: int, p: int, degree: int = 2,
                   terms: int = 2) -> KSeries:
    gens = [gen(n) for n in names]
    coeffs = []
    for _ in range(m + 1):
        out = {}
        for _ in range(rng.randint(0, terms)):
            k = rng.randint(0, degree)
            pairs = [(rng.choice(gens), 1) for _ in range(k)]
            out[mono_from(pairs)] = rng.randint(1, p - 1)
        coeffs.append(Poly(out, p))
    return KSeries(tuple(coeffs))


def random_jet_poly(rng: random.Random, names: Sequence[str], m: int, p: int, terms: int = 3,
                    degree: int = 2, with_pi: bool = False) -> Poly:
    pool = [jet(n, k) for n in names for k in range(m + 1)]
    if with_pi:
        pool += [jet("pi", k) for k in range(m + 1)]
    out = {}
    for _ in range(rng.randint(1, terms)):
        pairs = [(rng.choice(pool), 1) for _ in range(rng.randint(0, degree))]
        out[mono_from(pairs)] = rng.randint(1, p - 1)
    return Poly(out, p)


def dn_on_A(a: KSeries, n: int) -> Poly:
    """d^[n] a = sum_{i<=n} d^[n-i] a_i, valid modulo d^[k] pi^i = delta_{ki}."""
    m = a.m
    if not 0 <= n <= m:
        raise JetError(f"jet order {n} outside 0..{m}")
    out = Poly.zero(a.coeffs[0].p, a.coeffs[0].modular)
    for i in range(n + 1):
        if a.coeffs[i]:
            out = out + hs_derive(a.coeffs[i], n - i, m)
    return out


def phi(a: KSeries) -> KSeries:
    """The ring map A -> HS^m(k)[[pi]]/(pi^(m+1)), a -> sum_n (d^[n] a) pi^n."""
    return KSeries(tuple(dn_on_A(a, n) for n in range(a.m + 1)))


def urp_structure_map(a: KSeries) -> KSeries:
    """Structure map of the universal residual perfection HS^m(k)^pf[[pi]]/(pi^(m+1))."""
    return phi(a)


def hs_derive_A(a: KSeries, n: int) -> Poly:
    """d^[n] a in HS^m(A), treating pi as one more generator (jet variables d^[k] pi)."""
    return hs_derive(a.to_poly(), n, a.m)


def phibar(x: Poly) -> Poly:
    """Retraction HS^m(A) -> HS^m(k): d^[n] t_j fixed, d^[n] pi -> delta_{n1}."""
    images = {}
    for v in x.variables():
        if v == PI_VAR:
            images[v] = Poly.zero(x.p, x.modular)
        elif v.kind == JET and v.name == "pi":
            images[v] = Poly.const(1 if v.index == 1 else 0, x.p, x.modular)
    return x.substitute(images)


def quotient_reduce(x: Poly, m: int) -> Poly:
    """Normal form in HS^m(A)/(d^[n] pi^i = delta_{ni}).

    Imposing the relation for i = 1 imposes it for every i; that is checked
    here for the jet orders in play before reducing.
    """
    for i in range(m + 1):
        series = hs_series(Poly.var(PI_VAR, x.p, x.modular).pow(i), m)
        for n, d in enumerate(series):
            if phibar(d) != Poly.const(1 if n == i else 0, x.p, x.modular):
                raise JetError(f"relation d^[{n}] pi^{i} = delta fails")
    return phibar(x)


def tensor_reduce(x: Poly) -> Poly:
    """Image in HS^m(A) (x)_{HS^m(O_m)} F_p: d^[n] c -> c_n for c in O_m = F_p[[pi]]/(pi^(m+1))."""
    images = {}
    for v in x.variables():
        if v == PI_VAR or (v.kind == JET and v.name == "pi"):
            n = 0 if v == PI_VAR else v.index
            # coordinates of pi in O_m: (0, 1, 0, ...)
            images[v] = Poly.const(1 if n == 1 else 0, x.p, x.modular)
    return x.substitute(images)


def retraction_phibar(x: Poly) -> Poly:
    return phibar(x)


# -- the universal triple-sum identity behind multiplicativity of phi -----------


def _xy(prefix: str, i: int, j: int) -> Var:
    return gen(f"{prefix}_{i}_{j}")


def lemma63_sides(n: int) -> tuple[list[tuple[Var, Var]], list[tuple[Var, Var]]]:
    """Raw (x, y) index pairs of both triple sums, before collecting terms."""
    lhs = [
        (_xy("x", a, e), _xy("y", n - g - a, g - e))
        for g in range(n + 1)
        for e in range(g + 1)
        for a in range(n - g + 1)
    ]
    rhs = [
        (_xy("x", t - i, i), _xy("y", n - t - j, j))
        for t in range(n + 1)
        for i in range(t + 1)
        for j in range(n - t + 1)
    ]
    return lhs, rhs


def lemma63_check(n: int) -> bool:
    lhs, rhs = lemma63_sides(n)

    def collect(pairs):
        out: dict = {}
        for x, y in pairs:
            m = mono_from([(x, 1), (y, 1)])
            out[m] = out.get(m, 0) + 1
        return out

    return collect(lhs) == collect(rhs)


def lemma63_term_count(n: int) -> int:
    """Number of raw summands on each side: C(n+3, 3)."""
    return comb(n + 3, 3)


# -- Lazardian jets ------------------------------------------------------------


@dataclass(frozen=True)
class JetContext:
    """Parameters (p, q, t, m) of the Lazardian jet algebra; window m+1."""

    p: int
    q: int
    t: int = 0
    m: int = 1
    table: QTable = DEFAULT_TABLE

    @property
    def window(self) -> int:
        return self.m + 1

    def params(self) -> Params:
        return Params(self.p, self.q, self.t, self.m, self.m + 1)

    def q_poly(self, op: str, n: int) -> Poly:
        return self.table.get(QKey(op, n, self.p, self.q, self.t))


def constant_series(e: ex.Expr, ctx: JetContext) -> RawSeries:
    f = ex.to_poly(e, ctx.p, modular=False)
    buckets: list[dict] = [{} for _ in range(ctx.window)]
    for mono, c in f.terms.items():
        k = dict(mono).get(PI_VAR, 0)
        if k >= ctx.window:
            continue
        rest = tuple((v, x) for v, x in mono if v != PI_VAR)
        buckets[k][rest] = buckets[k].get(rest, 0) + c
    return RawSeries(ctx.params(), tuple(Poly(b, ctx.p, False) for b in buckets))


def constant_coordinates(e: ex.Expr, ctx: JetContext) -> list[Poly]:
    """Teichmuller coordinates x_n of an element of L built from omega, pi, integers."""
    if not ex.is_constant(e):
        raise JetError("not an element of the base ring")
    return teichmuller_digits(normalize(constant_series(e, ctx)))


def jet_vector(e: ex.Expr, ctx: JetContext) -> list[Poly]:
    """(d^[0] e, ..., d^[m] e) in the free Lazardian jet algebra, via the defining relations."""
    memo: dict = {}

    def walk(node: ex.Expr) -> list[Poly]:
        key = id(node)
        if key in memo:
            return memo[key]
        if ex.is_constant(node):
            out = constant_coordinates(node, ctx)
        elif isinstance(node, ex.Sym):
            out = jet_series(node.var, ctx.m, ctx.p)
        elif isinstance(node, (ex.Add, ex.Mul)):
            op = ADD if isinstance(node, ex.Add) else MUL
            a, b = walk(node.left), walk(node.right)
            out = []
            for n in range(ctx.window):
                images = {}
                for i in range(n + 1):
                    images[xvar(i)] = a[i]
                    images[yvar(i)] = b[i]
                out.append(ctx.q_poly(op, n).substitute(images))
        else:
            raise JetError(f"unsupported expression {node!r}")
        memo[key] = out
        return out

    return walk(e)


def lazardian_jet_relations(e: ex.Expr, n: int, ctx: JetContext) -> Poly:
    if not 0 <= n <= ctx.m:
        raise JetError(f"jet order {n} outside 0..{ctx.m}")
    return jet_vector(e, ctx)[n]


def jet_ring(names: Iterable[str], ctx: JetContext) -> ResidueRing:
    gens = tuple(jet(nm, k) for nm in names for k in range(ctx.window))
    return ResidueRing(ctx.p, ctx.q, gens)


def eta_prime(e: ex.Expr, ctx: JetContext, ring: ResidueRing | None = None) -> WittVector:
    """a -> (d^[n] a)_n computed with Witt-vector operations over the jet ring."""
    ring = ring or jet_ring(sorted(v.name for v in ex.generators(e)), ctx)
    w, t = ctx.window, ctx.t

    def walk(node: ex.Expr) -> WittVector:
        if isinstance(node, ex.Int):
            return integer_image(node.value, ring, w, t)
        if isinstance(node, ex.Sym):
            v = node.var
            if v.kind == PI:
                return pi_vector(ring, w, t)
            if v.kind == OMEGA:
                return teichmuller_section(Poly.var(v, ctx.p), ring, w, t)
            return WittVector(ring, tuple(jet_series(v, ctx.m, ctx.p)), t)
        a, b = walk(node.left), walk(node.right)
        return witt_add(a, b, ctx.table) if isinstance(node, ex.Add) else witt_mul(a, b, ctx.table)

    return walk(e)


def eps_prime(w: WittVector, n: int) -> Poly:
    """Counit Delta W(k) -> k on generators: d^[n] (x_i)_i -> x_n."""
    return w.coords[n]


def delta_map(f: Poly, images: dict[str, ex.Expr], ctx: JetContext) -> Poly:
    """Delta(g) for the algebra map g: generator -> expression, applied to a jet polynomial."""
    subst: dict[Var, Poly] = {}
    for name, img in images.items():
        vec = jet_vector(img, ctx)
        for n in range(ctx.window):
            subst[jet(name, n)] = vec[n]
    return f.substitute(subst)


def left_triangle(f: Poly, names: Iterable[str], ctx: JetContext) -> Poly:
    """eps'_{Delta(A)} o Delta(eta'_A): d^[n] x -> d^[n] (d^[i] x)_i -> d^[n] x."""
    subst: dict[Var, Poly] = {}
    for name in names:
        vec = eta_prime(ex.Sym(gen(name)), ctx)
        for n in range(ctx.window):
            subst[jet(name, n)] = eps_prime(vec, n)
    return f.substitute(subst)


def right_triangle(x: WittVector) -> WittVector:
    """W(eps'_k) o eta'_{W(k)}: x -> (d^[n] x)_n -> (x_n)_n."""
    # eta' sends x to the vector whose n-th entry is the symbol d^[n] x; eps' evaluates it
    return WittVector(x.ring, tuple(eps_prime(x, n) for n in range(x.window)), x.t)
