"""The arithmetic polynomials Q^{+}_n and Q^{x}_n governing Lazardian Witt vectors.

Q_n is extracted from the identity

    sum_i X_i^(q^-i) pi^i  (*)  sum_i Y_i^(q^-i) pi^i  =  sum_i [Q_i^(q^-i)] pi^i

modulo pi^(n+1): subtract the Teichmuller terms of the already known Q_i
(i < n), read off the pi^n digit and undo the q^-n root.
"""

from __future__ import annotations

import json
import logging
import os
import threading
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .lazard import LazardElement, lz_add, lz_mul, lz_sub, teichmuller, teichmuller_direct
from .params import Params
from .poly import OMEGA, X, Y, Poly, Var, cq_polynomial, omega, xvar, yvar

log = logging.getLogger(__name__)

ADD, MUL = "add", "mul"
OPS = (ADD, MUL)

# (p, q) -> largest n exercised routinely
SUPPORTED_RANGE = {(2, 2): 4, (3, 3): 2, (2, 4): 2}


class QComputationError(ArithmeticError):
    """The extraction left residue below pi-degree n; impossible unless the code is wrong."""


class CacheIOError(OSError):
    pass


@dataclass(frozen=True, order=True)
class QKey:
    op: str
    n: int
    p: int
    q: int
    t: int = 0

    def __post_init__(self):
        if self.op not in OPS:
            raise ValueError(f"unknown operation {self.op!r}")
        if self.n < 0:
            raise ValueError("n must be >= 0")
        Params(self.p, self.q, self.t)

    def params(self) -> Params:
        return Params(self.p, self.q, self.t, None, self.n + 1)

    def with_n(self, n: int) -> "QKey":
        return QKey(self.op, n, self.p, self.q, self.t)

    def relpath(self) -> str:
        return f"p{self.p}_q{self.q}_t{self.t}/{self.op}_{self.n}.json"


class QTable:
    """Memo table of computed Q polynomials and their canonical integer lifts.

    Lookups are lock-free; insertion (and hence computation) is serialized.
    With ``cache_dir`` set, entries are also read from and written to disk.
    """

    def __init__(self, cache_dir: str | os.PathLike | None = None):
        self.cache_dir = Path(cache_dir) if cache_dir else None
        self._q: dict[QKey, Poly] = {}
        self._lift: dict[QKey, Poly] = {}
        self._lock = threading.RLock()

    def __contains__(self, key: QKey) -> bool:
        return key in self._q

    def clear(self) -> None:
        with self._lock:
            self._q.clear()
            self._lift.clear()

    def get(self, key: QKey) -> Poly:
        hit = self._q.get(key)
        if hit is not None:
            return hit
        with self._lock:
            hit = self._q.get(key)
            if hit is not None:
                return hit
            q = self._load(key)
            if q is None:
                limit = SUPPORTED_RANGE.get((key.p, key.q))
                if limit is None or key.n > limit:
                    log.warning("computing %s beyond the routinely tested range; this may be slow", key)
                q = _compute(key, self)
                self._store(key, q)
            self._q[key] = q
            self._lift[key] = q.lift()
            return q

    def lift(self, key: QKey) -> Poly:
        self.get(key)
        return self._lift[key]

    def _load(self, key: QKey) -> Poly | None:
        if self.cache_dir is None:
            return None
        path = self.cache_dir / key.relpath()
        if not path.exists():
            return None
        try:
            return Poly.from_json(json.loads(path.read_text()))
        except (OSError, ValueError, KeyError) as exc:
            raise CacheIOError(f"unreadable cache entry {path}: {exc}") from exc

    def _store(self, key: QKey, q: Poly) -> None:
        if self.cache_dir is None:
            return
        path = self.cache_dir / key.relpath()
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(json.dumps(q.to_json(), indent=1) + "\n")
        except OSError as exc:
            raise CacheIOError(f"cannot write cache entry {path}: {exc}") from exc


DEFAULT_TABLE = QTable()


def digit_series(params: Params, var) -> LazardElement:
    """sum_{i<N} V_i^(q^-i) pi^i for V = X or Y."""
    digits = tuple(Poly.var(var(i), params.p, exp=Fraction(1, params.q**i)) for i in range(params.N))
    return LazardElement(params, digits)


def _combine(op: str, a: LazardElement, b: LazardElement) -> LazardElement:
    return lz_add(a, b) if op == ADD else lz_mul(a, b)


def _compute(key: QKey, table: QTable) -> Poly:
    n = key.n
    params = key.params()
    rest = _combine(key.op, digit_series(params, xvar), digit_series(params, yvar))
    for i in range(n):
        qi = table.get(key.with_n(i))
        # [Q_i^(q^-i)] pi^i mod pi^(n+1) only needs the lift mod pi^(n+1-i)
        lift = teichmuller(qi.frobenius(-i, key.q), params.with_precision(n + 1 - i))
        rest = lz_sub(rest, lift.extend(n + 1).shift(i))
    for j in range(n):
        if not rest.coeffs[j].is_zero():
            raise QComputationError(f"{key}: nonzero remainder in pi-degree {j}")
    q = rest.coeffs[n].frobenius(n, key.q)
    if not verify_polynomiality(q, n, key.p, key.q, key.t):
        raise QComputationError(f"{key}: result is not a polynomial of the expected shape")
    return q


def compute_q(op: str, n: int, p: int, q: int, t: int = 0, table: QTable | None = None) -> Poly:
    """Q^{op,(t)}_{n,q} as an F_p polynomial in omega, X_0..X_n, Y_0..Y_n."""
    return (table or DEFAULT_TABLE).get(QKey(op, n, p, q, t))


def q_lift(op: str, n: int, p: int, q: int, t: int = 0, table: QTable | None = None) -> Poly:
    """The canonical integer lift P_n of Q_n (coefficients in [0, p-1])."""
    return (table or DEFAULT_TABLE).lift(QKey(op, n, p, q, t))


def verify_polynomiality(f: Poly, n: int, p: int, q: int, t: int = 0) -> bool:
    """Membership in F_p[omega_1^(q^t)..omega_n^(q^t); X_0..X_n; Y_0..Y_n]."""
    if not f.modular or f.p != p:
        return False
    step = Fraction(q) ** t
    for m in f.terms:
        for v, e in m:
            if v.kind in (X, Y):
                if v.index > n or Fraction(e).denominator != 1:
                    return False
            elif v.kind == OMEGA:
                if not 1 <= v.index <= n or (Fraction(e) / step).denominator != 1:
                    return False
            else:
                return False
    return True


def frobenius_shift_check(op: str, n: int, p: int, q: int, t: int = 0, table: QTable | None = None) -> bool:
    lhs = compute_q(op, n, p, q, t, table).coefficient_frobenius(1, q)
    return lhs == compute_q(op, n, p, q, t + 1, table)


def leading_linearity_check(n: int, p: int, q: int, t: int = 0, table: QTable | None = None) -> bool:
    """Q_n^+ = X_n + Y_n + R_n with R_n free of X_n and Y_n."""
    rest = compute_q(ADD, n, p, q, t, table) - Poly.var(xvar(n), p) - Poly.var(yvar(n), p)
    return not ({xvar(n), yvar(n)} & rest.variables())


def remainder_poly(n: int, p: int, q: int, t: int = 0, table: QTable | None = None) -> Poly:
    """R_n = Q_n^+ - X_n - Y_n."""
    return compute_q(ADD, n, p, q, t, table) - Poly.var(xvar(n), p) - Poly.var(yvar(n), p)


def swap_xy(f: Poly) -> Poly:
    mapping: dict[Var, Var] = {}
    for v in f.variables():
        if v.kind == X:
            mapping[v] = yvar(v.index)
        elif v.kind == Y:
            mapping[v] = xvar(v.index)
    return f.rename(mapping)


def set_y_zero(f: Poly) -> Poly:
    return f.drop_if(lambda m: any(v.kind == Y for v, _ in m))


def example_q1_add(p: int, q: int, t: int = 0) -> Poly:
    """X_1 + Y_1 + omega_1^(q^(t+1)) C_q(X_0, Y_0), reduced mod p."""
    w = Poly.var(omega(1), p, modular=False, exp=q ** (t + 1))
    return (Poly.var(xvar(1), p, False) + Poly.var(yvar(1), p, False) + w * cq_polynomial(p, q)).reduce()


def example_q1_mul(p: int, q: int) -> Poly:
    x0, x1, y0, y1 = (Poly.var(v, p) for v in (xvar(0), xvar(1), yvar(0), yvar(1)))
    return x0.pow(q) * y1 + x1 * y0.pow(q)


def classical_comparison(p: int, q: int) -> dict[str, Poly]:
    """The degree-one classical Witt polynomials S_1 and P_1 with omega_1 standing in for p/pi.

    S_1 = X_1 + Y_1 + (p/pi) C_q(X_0, Y_0) and P_1 = X_0^q Y_1 + X_1 Y_0^q + pi X_1 Y_1,
    reduced modulo (p, pi).  Used only to document that S_1 and Q_1^+ differ.
    """
    w = Poly.var(omega(1), p, modular=False)
    s1 = (Poly.var(xvar(1), p, False) + Poly.var(yvar(1), p, False) + w * cq_polynomial(p, q)).reduce()
    p1 = example_q1_mul(p, q)
    return {"S1": s1, "P1": p1}


def defining_identity_residual(op: str, n: int, p: int, q: int, t: int = 0, table: QTable | None = None) -> LazardElement:
    """A*B - sum_{i<=n} [Q_i^(q^-i)] pi^i modulo pi^(n+1), using the slow reference lifts.

    Zero exactly when Q_0..Q_n satisfy the defining identity.  Each lift is taken
    at the precision that survives multiplication by pi^i, with the direct
    (untruncated) power, and multiplied by pi through the ring product.
    """
    params = Params(p, q, t, None, n + 1)
    lhs = _combine(op, digit_series(params, xvar), digit_series(params, yvar))
    total = LazardElement.zero(params)
    pi = LazardElement.pi_power(params, 1)
    for i in range(n + 1):
        qi = compute_q(op, i, p, q, t, table)
        term = teichmuller_direct(qi.frobenius(-i, q), params.with_precision(n + 1 - i)).extend(n + 1)
        for _ in range(i):
            term = lz_mul(term, pi)
        total = lz_add(total, term)
    return lz_sub(lhs, total)
