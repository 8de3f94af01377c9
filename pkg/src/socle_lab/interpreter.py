"""Execution of parsed scripts: bind rings and ideals, evaluate print
statements, and collect check results."""

from __future__ import annotations

from dataclasses import dataclass, field

from .groebner import ideal_equal
from .ideal import (
    IdealHandle,
    colon,
    ideal_power,
    ideal_product,
    ideal_sum,
    intersect,
    krull_dimension,
    maxideal,
)
from .invariants import buchsbaum_defect, length, min_generators, multiplicity
from .parse import (
    CallExpr,
    CheckStmt,
    GensExpr,
    IdealDecl,
    IntExpr,
    MaxIdealExpr,
    NameExpr,
    PrintStmt,
    RingDecl,
    ScalarExpr,
    Script,
)

_SCALARS = {
    "length": length,
    "mult": multiplicity,
    "mu": min_generators,
    "defect": buchsbaum_defect,
    "dim": krull_dimension,
}


@dataclass
class ScriptResult:
    outputs: list = field(default_factory=list)
    checks: list = field(default_factory=list)  # (text, passed)

    @property
    def ok(self) -> bool:
        return all(passed for _, passed in self.checks)


class _Session:
    def __init__(self):
        self.ideals = {}

    def ideal_value(self, expr) -> IdealHandle:
        if isinstance(expr, GensExpr):
            return IdealHandle(expr.ring, expr.polys)
        if isinstance(expr, NameExpr):
            return self.ideals[expr.name]
        if isinstance(expr, MaxIdealExpr):
            return maxideal(expr.ring)
        if isinstance(expr, CallExpr):
            first = self.ideal_value(expr.args[0])
            if expr.func == "power":
                return ideal_power(first, expr.args[1])
            second = self.ideal_value(expr.args[1])
            if expr.func == "colon":
                return colon(first, second)
            if expr.func == "sum":
                return ideal_sum(first, second)
            if expr.func == "product":
                return ideal_product(first, second)
            if expr.func == "intersect":
                return intersect(first, second)
        raise TypeError(f"not an ideal expression: {expr!r}")

    def value(self, expr):
        if isinstance(expr, IntExpr):
            return expr.value
        if isinstance(expr, ScalarExpr):
            return _SCALARS[expr.func](self.ideal_value(expr.arg))
        return self.ideal_value(expr)


def _render(value) -> str:
    if isinstance(value, IdealHandle):
        basis = value.basis()
        inside = ", ".join(str(p) for p in basis.polys) or "0"
        return f"({inside})"
    return str(value)


def run_script(script: Script) -> ScriptResult:
    session = _Session()
    result = ScriptResult()
    for stmt in script.statements:
        if isinstance(stmt, RingDecl):
            continue
        if isinstance(stmt, IdealDecl):
            session.ideals[stmt.name] = session.ideal_value(stmt.expr)
        elif isinstance(stmt, PrintStmt):
            result.outputs.append(_render(session.value(stmt.expr)))
        elif isinstance(stmt, CheckStmt):
            left = session.value(stmt.left)
            right = session.value(stmt.right)
            if isinstance(left, IdealHandle):
                same = ideal_equal(left, right)
            else:
                same = left == right
            passed = same if stmt.op == "==" else not same
            text = f"check {_render(left)} {stmt.op} {_render(right)}"
            result.checks.append((text, passed))
    return result
