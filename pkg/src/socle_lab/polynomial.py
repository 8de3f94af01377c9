"""Sparse multivariate polynomials over an exact field.

A monomial is a bare tuple of non-negative exponents, one slot per ring
variable.  A polynomial stores its terms as a tuple of
``(exponents, coefficient)`` pairs, strictly descending in the ring's
monomial order and free of zero coefficients; the zero polynomial is the
empty tuple.  Instances are immutable, hashable and safe to share.

This module also houses multivariate division (``normal_form``): the
order-highest reducible monomial is always reduced by the first divisor,
in list order, whose leading monomial divides it, which makes the result
deterministic for a fixed divisor list.
"""

from __future__ import annotations

from .errors import RingMismatchError

# -- monomial helpers (exponent tuples) --------------------------------------


def mon_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mon_div(a, b):
    return tuple(x - y for x, y in zip(a, b))


def mon_divides(a, b):
    """True when a | b, i.e. componentwise a <= b."""
    return all(x <= y for x, y in zip(a, b))


def mon_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def mon_degree(a):
    return sum(a)


def mon_coprime(a, b):
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def mon_support(a):
    return tuple(i for i, e in enumerate(a) if e)


class Polynomial:
    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        # `terms` must already be canonical; use from_dict for raw data.
        self.ring = ring
        self.terms = terms

    @classmethod
    def from_dict(cls, ring, data: dict) -> "Polynomial":
        zero = ring.field.zero
        items = [(m, c) for m, c in data.items() if c != zero]
        key = ring.order.key
        items.sort(key=lambda mc: key(mc[0]), reverse=True)
        return cls(ring, tuple(items))

    # -- inspection --

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def leading_term(self):
        """The order-maximal (monomial, coefficient) pair."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return self.terms[0]

    def leading_monomial(self):
        return self.leading_term()[0]

    def leading_coefficient(self):
        return self.leading_term()[1]

    def constant_term(self):
        n = len(self.ring.variables)
        zero_mon = (0,) * n
        for m, c in self.terms:
            if m == zero_mon:
                return c
        return self.ring.field.zero

    def degree(self) -> int:
        """Total degree; the zero polynomial reports -1."""
        if not self.terms:
            return -1
        return max(mon_degree(m) for m, _ in self.terms)

    def is_homogeneous(self) -> bool:
        if not self.terms:
            return True
        degs = {mon_degree(m) for m, _ in self.terms}
        return len(degs) == 1

    # -- arithmetic --

    def _compat(self, other: "Polynomial"):
        if self.ring.ambient_key != other.ring.ambient_key:
            raise RingMismatchError(
                f"operands live in different rings: {self.ring.ring_id} "
                f"vs {other.ring.ring_id}"
            )

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = self.ring.const(other)
        self._compat(other)
        field = self.ring.field
        data = dict(self.terms)
        for m, c in other.terms:
            v = field.add(data.get(m, field.zero), c)
            if v == field.zero:
                data.pop(m, None)
            else:
                data[m] = v
        return Polynomial.from_dict(self.ring, data)

    __radd__ = __add__

    def __neg__(self):
        neg = self.ring.field.neg
        return Polynomial(self.ring, tuple((m, neg(c)) for m, c in self.terms))

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = self.ring.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._compat(other)
        field = self.ring.field
        data = {}
        zero = field.zero
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                m = mon_mul(m1, m2)
                v = field.add(data.get(m, zero), field.mul(c1, c2))
                if v == zero:
                    data.pop(m, None)
                else:
                    data[m] = v
        return Polynomial.from_dict(self.ring, data)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, scalar):
        field = self.ring.field
        c = field.coerce(scalar)
        if c == field.zero:
            return Polynomial(self.ring, ())
        return Polynomial(
            self.ring, tuple((m, field.mul(c, cf)) for m, cf in self.terms)
        )

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers take non-negative integers")
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def shift(self, monomial, scalar):
        """Multiply by a single term.  Preserves the descending term order."""
        field = self.ring.field
        c = field.coerce(scalar)
        if c == field.zero:
            return Polynomial(self.ring, ())
        return Polynomial(
            self.ring,
            tuple((mon_mul(m, monomial), field.mul(c, cf)) for m, cf in self.terms),
        )

    def monic(self):
        if not self.terms:
            return self
        lc = self.leading_coefficient()
        if lc == self.ring.field.one:
            return self
        return self.scale(self.ring.field.invert(lc))

    def evaluate(self, images):
        """Substitute ``images[i]`` for the i-th variable.

        The images must be polynomials of a common ring over the same
        field; the result lives in that ring.
        """
        if len(images) != len(self.ring.variables):
            raise ValueError("one image per variable is required")
        target = images[0].ring
        field = target.field
        if field.key != self.ring.field.key:
            raise RingMismatchError("substitution across different fields")
        total = target.zero
        for m, c in self.terms:
            part = target.const(c)
            for img, e in zip(images, m):
                if e:
                    part = part * img**e
            total = total + part
        return total

    # -- equality / presentation --

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return (
            self.ring.ambient_key == other.ring.ambient_key
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ring.ambient_key, self.terms))

    def __str__(self):
        if not self.terms:
            return "0"
        field = self.ring.field
        names = self.ring.variables
        pieces = []
        for i, (m, c) in enumerate(self.terms):
            text = field.coeff_str(c)
            negative = text.startswith("-")
            mag = text[1:] if negative else text
            factors = []
            if mag != "1" or not any(m):
                factors.append(mag)
            for name, e in zip(names, m):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            body = "*".join(factors)
            if i == 0:
                pieces.append(("-" if negative else "") + body)
            else:
                pieces.append(("- " if negative else "+ ") + body)
        return " ".join(pieces)

    def __repr__(self):
        return f"<{self} in {self.ring.ring_id}>"


# -- division ---------------------------------------------------------------


def _prepare_divisors(f, divisors):
    lead = []
    for g in divisors:
        f._compat(g)
        if g.is_zero:
            raise ValueError("division by a list containing the zero polynomial")
        lead.append((g.leading_monomial(), g.leading_coefficient(), g.terms))
    return lead


def normal_form(f: Polynomial, divisors) -> Polynomial:
    """Remainder of f under multivariate division by ``divisors``.

    ``f - normal_form(f, divisors)`` lies in the ideal the divisors
    generate, and no monomial of the remainder is divisible by any
    divisor's leading monomial.
    """
    if not divisors:
        return f
    lead = _prepare_divisors(f, divisors)
    ring = f.ring
    field = ring.field
    zero = field.zero
    key = ring.order.key
    work = dict(f.terms)
    out = {}
    while work:
        m = max(work, key=key)
        c = work.pop(m)
        for lm, lc, terms in lead:
            if mon_divides(lm, m):
                q = mon_div(m, lm)
                fac = field.div(c, lc)
                for mg, cg in terms[1:]:
                    mm = mon_mul(q, mg)
                    v = field.sub(work.get(mm, zero), field.mul(fac, cg))
                    if v == zero:
                        work.pop(mm, None)
                    else:
                        work[mm] = v
                break
        else:
            out[m] = c
    return Polynomial.from_dict(ring, out)


def normal_form_with_quotients(f: Polynomial, divisors):
    """Like ``normal_form`` but also returns quotients q_i with
    ``f == sum(q_i * g_i) + remainder`` exactly."""
    lead = _prepare_divisors(f, divisors)
    ring = f.ring
    field = ring.field
    zero = field.zero
    key = ring.order.key
    work = dict(f.terms)
    out = {}
    quotients = [dict() for _ in divisors]
    while work:
        m = max(work, key=key)
        c = work.pop(m)
        for idx, (lm, lc, terms) in enumerate(lead):
            if mon_divides(lm, m):
                q = mon_div(m, lm)
                fac = field.div(c, lc)
                qd = quotients[idx]
                qd[q] = field.add(qd.get(q, zero), fac)
                for mg, cg in terms[1:]:
                    mm = mon_mul(q, mg)
                    v = field.sub(work.get(mm, zero), field.mul(fac, cg))
                    if v == zero:
                        work.pop(mm, None)
                    else:
                        work[mm] = v
                break
        else:
            out[m] = c
    rem = Polynomial.from_dict(ring, out)
    qs = [Polynomial.from_dict(ring, qd) for qd in quotients]
    return rem, qs


def exact_divide(f: Polynomial, divisor: Polynomial) -> Polynomial:
    """Quotient of an exact polynomial division; the remainder must vanish."""
    rem, qs = normal_form_with_quotients(f, [divisor])
    if not rem.is_zero:
        raise ArithmeticError(
            f"exact division failed: {f} is not a multiple of {divisor}"
        )
    return qs[0]


def poly_arith(op: str, f: Polynomial, g) -> Polynomial:
    """Named dispatcher over the ring operations."""
    if op == "add":
        return f + g
    if op == "subtract":
        return f - g
    if op == "multiply":
        return f * g
    if op == "scale":
        return f.scale(g)
    raise ValueError(f"unknown polynomial operation {op!r}")
