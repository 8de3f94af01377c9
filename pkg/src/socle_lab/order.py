"""Monomial orders: degrevlex, lex, and block elimination orders.

An order exposes a ``key`` function on exponent tuples; monomial u exceeds
v exactly when ``key(u) > key(v)``.  All three orders are total,
multiplicative (u < v implies uw < vw) and have 1 as the unique minimum.
The block order compares the leading block degrevlex-first, so any
monomial touching a first-block variable outranks every monomial free of
them; that is the property elimination relies on.
"""

from __future__ import annotations

from dataclasses import dataclass


def _grevlex_key(exps):
    total = 0
    for e in exps:
        total += e
    return (total, tuple(-e for e in reversed(exps)))


@dataclass(frozen=True)
class MonomialOrder:
    kind: str  # "degrevlex" | "lex" | "block"
    block: int | None = None  # size of the eliminated leading block

    def key(self, exps):
        if self.kind == "degrevlex":
            return _grevlex_key(exps)
        if self.kind == "lex":
            return exps
        k = self.block
        return (_grevlex_key(exps[:k]), _grevlex_key(exps[k:]))

    def descriptor(self) -> str:
        if self.kind == "block":
            return f"block({self.block})"
        return self.kind

    def __str__(self):
        return self.descriptor()


DEGREVLEX = MonomialOrder("degrevlex")
LEX = MonomialOrder("lex")


def elimination_order(first_block_size: int) -> MonomialOrder:
    if first_block_size < 1:
        raise ValueError("elimination block must contain at least one variable")
    return MonomialOrder("block", first_block_size)


def order_from_name(name: str) -> MonomialOrder:
    name = name.strip()
    if name == "degrevlex":
        return DEGREVLEX
    if name == "lex":
        return LEX
    if name.startswith("block(") and name.endswith(")"):
        return elimination_order(int(name[6:-1]))
    raise ValueError(f"unknown monomial order {name!r}")
