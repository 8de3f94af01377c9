"""Exact coefficient fields: the rationals and prime fields F_p.

Scalars are plain Python values (``fractions.Fraction`` for the rationals,
ints in ``[0, p)`` for F_p); the field object supplies the arithmetic so
that the polynomial layer never branches on the coefficient type.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import CoefficientError

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime(n: int) -> bool:
    # Deterministic Miller-Rabin; exact for every n below 3.3e24.
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class RationalField:
    """The field of rational numbers, stored in lowest terms."""

    characteristic = 0
    key = "Q"

    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        raise CoefficientError(f"cannot interpret {x!r} as a rational number")

    def from_fraction(self, numerator: int, denominator: int):
        if denominator == 0:
            raise CoefficientError("zero denominator")
        return Fraction(numerator, denominator)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def invert(self, a):
        if a == 0:
            raise CoefficientError("division by zero")
        return 1 / a

    def div(self, a, b):
        return a / self._nonzero(b)

    def _nonzero(self, b):
        if b == 0:
            raise CoefficientError("division by zero")
        return b

    def coeff_str(self, a) -> str:
        return str(a)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")


class PrimeField:
    """The prime field F_p; elements are ints reduced into ``[0, p)``."""

    def __init__(self, p: int):
        if not isinstance(p, int) or not _is_prime(p):
            raise CoefficientError(f"{p!r} is not a prime")
        if p >= 1 << 62:
            raise CoefficientError(f"prime {p} does not fit a machine word")
        self.p = p
        self.characteristic = p
        self.key = f"F{p}"
        self.zero = 0
        self.one = 1 % p

    def coerce(self, x):
        if isinstance(x, int):
            return x % self.p
        if isinstance(x, Fraction):
            return self.from_fraction(x.numerator, x.denominator)
        raise CoefficientError(f"cannot interpret {x!r} in F_{self.p}")

    def from_fraction(self, numerator: int, denominator: int):
        den = denominator % self.p
        if den == 0:
            raise CoefficientError(
                f"denominator {denominator} vanishes in F_{self.p}"
            )
        return numerator * pow(den, -1, self.p) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def invert(self, a):
        if a % self.p == 0:
            raise CoefficientError("division by zero")
        return pow(a, -1, self.p)

    def div(self, a, b):
        return a * self.invert(b) % self.p

    def coeff_str(self, a) -> str:
        return str(a)

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("F", self.p))


QQ = RationalField()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_for_characteristic(char: int):
    """Field with the given characteristic: 0 for the rationals, p prime."""
    return QQ if char == 0 else GF(char)
