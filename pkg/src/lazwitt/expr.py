"""Small expression trees over generators, omega_j, pi and integers."""

from __future__ import annotations

import ast
import random
from dataclasses import dataclass

from .poly import GEN, OMEGA, PI, Poly, Var, gen, omega, parse_var, PI_VAR


class ExprError(ValueError):
    pass


@dataclass(frozen=True)
class Sym:
    var: Var


@dataclass(frozen=True)
class Int:
    value: int


@dataclass(frozen=True)
class Add:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Mul:
    left: "Expr"
    right: "Expr"


Expr = Sym | Int | Add | Mul


def sym(name: str) -> Sym:
    return Sym(parse_var(name))


def is_constant(e: Expr) -> bool:
    """True when e only involves omega, pi and integers (an element of L)."""
    if isinstance(e, Int):
        return True
    if isinstance(e, Sym):
        return e.var.kind in (OMEGA, PI)
    return is_constant(e.left) and is_constant(e.right)


def generators(e: Expr) -> set[Var]:
    if isinstance(e, Int):
        return set()
    if isinstance(e, Sym):
        return {e.var} if e.var.kind == GEN else set()
    return generators(e.left) | generators(e.right)


def to_poly(e: Expr, p: int, modular: bool = False) -> Poly:
    if isinstance(e, Int):
        return Poly.const(e.value, p, modular)
    if isinstance(e, Sym):
        return Poly.var(e.var, p, modular)
    a, b = to_poly(e.left, p, modular), to_poly(e.right, p, modular)
    return a + b if isinstance(e, Add) else a * b


def substitute(e: Expr, images: dict[Var, Expr]) -> Expr:
    if isinstance(e, Int):
        return e
    if isinstance(e, Sym):
        return images.get(e.var, e)
    return type(e)(substitute(e.left, images), substitute(e.right, images))


def to_text(e: Expr) -> str:
    if isinstance(e, Int):
        return str(e.value)
    if isinstance(e, Sym):
        return str(e.var)
    op = " + " if isinstance(e, Add) else "*"
    return f"({to_text(e.left)}{op}{to_text(e.right)})"


def parse(text: str) -> Expr:
    """Parse ``+ - *`` and integer powers of names and integers."""
    try:
        tree = ast.parse(text.replace("^", "**").replace("·", "*").replace("π", "pi"), mode="eval")
    except SyntaxError as exc:
        raise ExprError(f"cannot parse {text!r}: {exc.msg}") from exc
    return _convert(tree.body)


def _convert(node: ast.AST) -> Expr:
    if isinstance(node, ast.Constant) and type(node.value) is int:
        return Int(node.value)
    if isinstance(node, ast.Name):
        try:
            return Sym(parse_var(node.id))
        except ValueError as exc:
            raise ExprError(str(exc)) from exc
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
        return Mul(Int(-1), _convert(node.operand))
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.UAdd):
        return _convert(node.operand)
    if isinstance(node, ast.BinOp):
        if isinstance(node.op, ast.Add):
            return Add(_convert(node.left), _convert(node.right))
        if isinstance(node.op, ast.Sub):
            return Add(_convert(node.left), Mul(Int(-1), _convert(node.right)))
        if isinstance(node.op, ast.Mult):
            return Mul(_convert(node.left), _convert(node.right))
        if isinstance(node.op, ast.Pow):
            k = node.right
            if not (isinstance(k, ast.Constant) and type(k.value) is int and k.value >= 1):
                raise ExprError("only positive integer powers are supported")
            base = _convert(node.left)
            out = base
            for _ in range(k.value - 1):
                out = Mul(out, base)
            return out
    raise ExprError(f"unsupported expression element {ast.dump(node)}")


def random_expr(rng: random.Random, names: list[str], depth: int = 2, constants: bool = True) -> Expr:
    leaves: list[Expr] = [Sym(gen(n)) for n in names]
    if constants:
        leaves += [Int(rng.randint(-2, 3)), Sym(PI_VAR), Sym(omega(1))]
    if depth == 0 or rng.random() < 0.25:
        return rng.choice(leaves)
    node = Add if rng.random() < 0.5 else Mul
    return node(random_expr(rng, names, depth - 1, constants), random_expr(rng, names, depth - 1, constants))
