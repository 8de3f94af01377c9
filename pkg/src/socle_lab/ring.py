"""Ring presentations: a polynomial ring over an exact field with a
monomial order, optionally equipped with defining relations.

A presentation with defining generators models the quotient localized at
the irrelevant maximal ideal.  Every computation on quotient elements
happens on representatives in the ambient polynomial ring with the
defining generators appended, so two presentations sharing variables,
field and order exchange polynomials freely.
"""

from __future__ import annotations

import re

from .errors import RingMismatchError
from .order import DEGREVLEX, MonomialOrder
from .polynomial import Polynomial

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class Ring:
    __slots__ = ("variables", "field", "order", "defining", "graded",
                 "ambient_key", "_dimension")

    def __init__(self, variables, field, order: MonomialOrder = DEGREVLEX,
                 defining=()):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ValueError(f"variable names must be distinct: {variables}")
        for name in variables:
            if not _NAME.match(name):
                raise ValueError(f"bad variable name {name!r}")
        if order.kind == "block" and not 0 < order.block < len(variables):
            raise ValueError("elimination block must be a proper prefix")
        self.variables = variables
        self.field = field
        self.order = order
        self.ambient_key = (field.key, variables, order.kind, order.block)
        gens = []
        for g in defining:
            if g.ring.ambient_key != self.ambient_key:
                raise RingMismatchError(
                    f"defining generator {g} does not live in {self.ring_id}"
                )
            if not g.is_zero:
                gens.append(g)
        self.defining = tuple(gens)
        self.graded = all(g.is_homogeneous() for g in self.defining)
        self._dimension = None

    # -- construction helpers --

    def quotient(self, gens) -> "Ring":
        """Presentation of the quotient by the given relations."""
        return Ring(self.variables, self.field, self.order, tuple(gens))

    def ambient(self) -> "Ring":
        if not self.defining:
            return self
        return Ring(self.variables, self.field, self.order)

    def zero_poly(self) -> Polynomial:
        return Polynomial(self, ())

    @property
    def zero(self) -> Polynomial:
        return Polynomial(self, ())

    @property
    def one(self) -> Polynomial:
        return self.const(1)

    def const(self, value) -> Polynomial:
        c = self.field.coerce(value)
        if c == self.field.zero:
            return Polynomial(self, ())
        return Polynomial(self, (((0,) * len(self.variables), c),))

    def var(self, name: str) -> Polynomial:
        i = self.variables.index(name)
        exps = tuple(1 if j == i else 0 for j in range(len(self.variables)))
        return Polynomial(self, ((exps, self.field.one),))

    def gens(self):
        return tuple(self.var(name) for name in self.variables)

    def monomial(self, exps, coefficient=1) -> Polynomial:
        exps = tuple(exps)
        if len(exps) != len(self.variables) or any(e < 0 for e in exps):
            raise ValueError(f"bad exponent vector {exps}")
        c = self.field.coerce(coefficient)
        if c == self.field.zero:
            return Polynomial(self, ())
        return Polynomial(self, ((exps, c),))

    def poly(self, text: str) -> Polynomial:
        from .parse import parse_polynomial

        return parse_polynomial(self, text)

    def ideal(self, *gens):
        from .ideal import IdealHandle

        polys = [self.poly(g) if isinstance(g, str) else g for g in gens]
        return IdealHandle(self, polys)

    # -- identity --

    @property
    def ring_id(self) -> str:
        base = f"{self.field.key}[{','.join(self.variables)}]"
        if self.defining:
            base += f"/({len(self.defining)} relations)"
        if self.order != DEGREVLEX:
            base += f" {self.order.descriptor()}"
        return base

    def __eq__(self, other):
        if not isinstance(other, Ring):
            return NotImplemented
        return (
            self.ambient_key == other.ambient_key
            and tuple(g.terms for g in self.defining)
            == tuple(g.terms for g in other.defining)
        )

    def __hash__(self):
        return hash((self.ambient_key, tuple(g.terms for g in self.defining)))

    def __repr__(self):
        return f"Ring({self.ring_id})"
