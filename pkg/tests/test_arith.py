import json
import threading
from fractions import Fraction
from pathlib import Path

import pytest
import sympy as sp

from lazwitt.arith import (
    ADD,
    MUL,
    CacheIOError,
    QKey,
    QTable,
    classical_comparison,
    compute_q,
    defining_identity_residual,
    example_q1_add,
    example_q1_mul,
    frobenius_shift_check,
    leading_linearity_check,
    q_lift,
    remainder_poly,
    set_y_zero,
    swap_xy,
    verify_polynomiality,
)
from lazwitt.poly import OMEGA, X, Poly, omega, xvar, yvar

GOLDEN = Path(__file__).parent / "golden"
GOLDEN_FILES = sorted(GOLDEN.glob("*/*.json"))


def _key(path: Path) -> QKey:
    p, q, t = (int(s[1:]) for s in path.parent.name.split("_"))
    op, n = path.stem.split("_")
    return QKey(op, int(n), p, q, t)


def test_examples_degree_zero_and_one():
    for p, q in [(2, 2), (3, 3), (2, 4)]:
        x0, y0 = Poly.var(xvar(0), p), Poly.var(yvar(0), p)
        assert compute_q(ADD, 0, p, q) == x0 + y0
        assert compute_q(MUL, 0, p, q) == x0 * y0
        assert compute_q(ADD, 1, p, q) == example_q1_add(p, q)
        assert compute_q(MUL, 1, p, q) == example_q1_mul(p, q)
    assert compute_q(ADD, 1, 2, 2).to_text() == "X1 + Y1 + w1^2*X0*Y0"
    assert compute_q(MUL, 1, 3, 3).to_text() == "X0^3*Y1 + X1*Y0^3"


@pytest.mark.parametrize("path", GOLDEN_FILES, ids=lambda p: f"{p.parent.name}/{p.stem}")
def test_golden_files_cold_cache(path):
    key = _key(path)
    fresh = QTable().get(key)
    assert json.dumps(fresh.to_json(), indent=1) + "\n" == path.read_text()


def test_disk_cache_round_trip(tmp_path):
    table = QTable(tmp_path)
    q2 = table.get(QKey(ADD, 2, 2, 2))
    path = tmp_path / "p2_q2_t0" / "add_2.json"
    assert path.exists()
    assert QTable(tmp_path).get(QKey(ADD, 2, 2, 2)) == q2
    path.write_text("{broken")
    with pytest.raises(CacheIOError):
        QTable(tmp_path).get(QKey(ADD, 2, 2, 2))


def test_concurrent_reads_agree():
    table = QTable()
    results = []
    threads = [threading.Thread(target=lambda: results.append(table.get(QKey(MUL, 3, 2, 2)))) for _ in range(4)]
    for th in threads:
        th.start()
    for th in threads:
        th.join()
    assert len(set(results)) == 1


def test_defining_identity_reference_path():
    for op in (ADD, MUL):
        for n in range(5):
            assert defining_identity_residual(op, n, 2, 2).is_zero()
        assert defining_identity_residual(op, 2, 3, 3).is_zero()
        assert defining_identity_residual(op, 1, 2, 4, 1).is_zero()


def test_polynomiality_examples():
    assert verify_polynomiality(compute_q(ADD, 1, 2, 2), 1, 2, 2)
    assert not verify_polynomiality(Poly.var(xvar(0), 2, exp=Fraction(1, 2)), 0, 2, 2)
    assert not verify_polynomiality(Poly.var(omega(2), 2) * Poly.var(xvar(0), 2), 1, 2, 2)


def test_frobenius_shift_examples():
    assert frobenius_shift_check(ADD, 0, 2, 2)
    assert frobenius_shift_check(ADD, 1, 3, 3)
    assert frobenius_shift_check(MUL, 2, 2, 2)


def test_leading_linearity_examples():
    assert remainder_poly(0, 2, 2).is_zero()
    assert leading_linearity_check(1, 3, 3)
    assert leading_linearity_check(2, 2, 2)


@pytest.mark.parametrize("p,q,top", [(2, 2, 4), (3, 3, 2), (2, 4, 2)])
def test_symmetry_and_identities(p, q, top):
    for n in range(top + 1):
        for op in (ADD, MUL):
            f = compute_q(op, n, p, q)
            assert swap_xy(f) == f
        assert set_y_zero(compute_q(ADD, n, p, q)) == Poly.var(xvar(n), p)
        assert set_y_zero(compute_q(MUL, n, p, q)).is_zero()


def test_triangularity():
    for n in range(5):
        f = compute_q(ADD, n, 2, 2)
        assert all(v.index <= n for v in f.variables())


def test_lift_is_canonical():
    lifted = q_lift(ADD, 2, 3, 3)
    assert not lifted.modular and set(lifted.terms.values()) <= {1, 2}
    assert lifted.reduce() == compute_q(ADD, 2, 3, 3)


def test_classical_s1_differs_from_q1():
    # omega_1 enters S_1 to the first power but Q_1^+ to the q-th power
    assert classical_comparison(2, 2)["S1"] != compute_q(ADD, 1, 2, 2)
    assert classical_comparison(2, 2)["P1"] == compute_q(MUL, 1, 2, 2)


def test_bad_key():
    with pytest.raises(ValueError):
        QKey("pow", 1, 2, 2)
    with pytest.raises(ValueError):
        QKey(ADD, -1, 2, 2)


# -- independent oracle: classical q-typical Witt polynomials via sympy ----------------
#
# Setting omega_1 = 1 and omega_i = 0 (i >= 2) turns the relation into p = pi, where the
# expansion sum [x_i^(q^-i)] p^i is the usual Witt coordinate system.  So Q_n must reduce
# to the Witt polynomial defined by the ghost components sum_i p^i X_i^(q^(n-i)).


def _classical(op: str, n: int, p: int, q: int) -> dict:
    xs, ys = sp.symbols(f"X0:{n + 1}"), sp.symbols(f"Y0:{n + 1}")
    gens = xs + ys

    def ghost(vs, k):
        return sum((p**i * sp.Poly(vs[i], *gens) ** (q ** (k - i)) for i in range(k + 1)), sp.Poly(0, *gens))

    polys = []
    for k in range(n + 1):
        rhs = ghost(xs, k) + ghost(ys, k) if op == ADD else ghost(xs, k) * ghost(ys, k)
        rest = rhs - sum((p**i * polys[i] ** (q ** (k - i)) for i in range(k)), sp.Poly(0, *gens))
        quotient, remainder = sp.div(rest, sp.Poly(p**k, *gens))
        assert remainder.is_zero
        polys.append(quotient)
    out = {}
    for mono, c in polys[n].terms():
        if c % p:
            out[tuple(sorted((i // (n + 1), i % (n + 1), e) for i, e in enumerate(mono) if e))] = int(c % p)
    return out


def _specialize(f: Poly) -> dict:
    out: dict = {}
    for mono, c in f.terms.items():
        if any(v.kind == OMEGA and v.index >= 2 for v, _ in mono):
            continue
        key = tuple(sorted((0 if v.kind == X else 1, v.index, e) for v, e in mono if v.kind != OMEGA))
        out[key] = (out.get(key, 0) + c) % f.p
    return {k: c for k, c in out.items() if c}


@pytest.mark.parametrize("p,q,top", [(2, 2, 3), (3, 3, 2), (2, 4, 2)])
@pytest.mark.parametrize("op", [ADD, MUL])
def test_specialization_matches_classical_witt(p, q, top, op):
    for n in range(top + 1):
        assert _specialize(compute_q(op, n, p, q)) == _classical(op, n, p, q), f"n={n}"
