"""Numerical invariants of the local ring at the origin.

Lengths are standard-monomial counts of Artinian quotients, so every
entry point gates its argument through ``is_origin_primary``: for an
ideal supported exactly at the origin the graded/affine length agrees
with the length over the localization, and non-conforming inputs are
rejected rather than silently localized.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product as cartesian

from .errors import (
    ContainmentError,
    NotCohenMacaulayError,
    NotOriginPrimaryError,
    PostulationNotReachedError,
    SamplingError,
)
from .groebner import ideal_equal, is_member
from .ideal import (
    IdealHandle,
    _origin_primary_witness,
    colon,
    ideal_power,
    ideal_product,
    is_origin_primary,
    maxideal,
    ring_dimension,
    zero_ideal,
)
from .polynomial import Polynomial, mon_divides, mon_support
from .ring import Ring


@dataclass(frozen=True)
class ArtinianQuotient:
    """Standard-monomial basis of the quotient by an origin-primary ideal."""

    ring: Ring
    ideal: IdealHandle
    standard_monomials: tuple

    @property
    def length(self) -> int:
        return len(self.standard_monomials)


def _require_origin_primary(J: IdealHandle):
    if J._origin_primary is True:
        return
    witness = _origin_primary_witness(J)
    if witness is not None:
        J._origin_primary = False
        raise NotOriginPrimaryError(*witness)
    J._origin_primary = True


def artinian_quotient(J: IdealHandle) -> ArtinianQuotient:
    if J._artinian is not None:
        return J._artinian
    _require_origin_primary(J)
    basis = J.basis()
    lms = basis.leading_monomials()
    n = len(J.ring.variables)
    bounds = [None] * n
    for lm in lms:
        support = mon_support(lm)
        if len(support) == 1:
            i = support[0]
            e = lm[i]
            if bounds[i] is None or e < bounds[i]:
                bounds[i] = e
    standard = []
    for exps in cartesian(*(range(b) for b in bounds)):
        if not any(mon_divides(lm, exps) for lm in lms):
            standard.append(exps)
    key = J.ring.order.key
    standard.sort(key=key)
    J._artinian = ArtinianQuotient(J.ring, J, tuple(standard))
    return J._artinian


def length(J: IdealHandle) -> int:
    """Composition-series length of the quotient by an origin-primary ideal."""
    return artinian_quotient(J).length


def _colength(J: IdealHandle) -> int:
    """Like ``length`` but the unit ideal counts 0 (the zero module)."""
    if J.is_unit:
        return 0
    return length(J)


def relative_length(inner: IdealHandle, outer: IdealHandle) -> int:
    """Length of outer/inner for a containment inner ⊆ outer."""
    for g in inner.gens:
        if not is_member(g, outer):
            raise ContainmentError(
                g, f"containment fails: generator {g} lies outside the outer ideal"
            )
    return length(inner) - _colength(outer)


def socle(J: IdealHandle):
    """The socle (J : m, length (J:m)/J) of the quotient by J."""
    _require_origin_primary(J)
    K = colon(J, maxideal(J.ring))
    return K, length(J) - _colength(K)


def min_generators(I: IdealHandle) -> int:
    """Minimal number of generators, via mu(I) = len(I / mI)."""
    mI = ideal_product(maxideal(I.ring), I)
    return length(mI) - _colength(I)


@dataclass(frozen=True)
class HilbertSamuel:
    values: tuple
    truncated: bool = False


def hilbert_samuel(q: IdealHandle, nmax: int, max_quotient_length=None) -> HilbertSamuel:
    """The sequence len(A/q^n) for n = 1..nmax."""
    d = ring_dimension(q.ring)
    if nmax < d + 2:
        raise ValueError(f"nmax must be at least dim + 2 = {d + 2}")
    _require_origin_primary(q)
    values = []
    for n in range(1, nmax + 1):
        v = length(ideal_power(q, n))
        if max_quotient_length is not None and v > max_quotient_length:
            return HilbertSamuel(tuple(values), truncated=True)
        values.append(v)
    return HilbertSamuel(tuple(values))


def _differences(values, times: int):
    out = list(values)
    for _ in range(times):
        out = [b - a for a, b in zip(out, out[1:])]
    return out


def multiplicity(q: IdealHandle, nmax=None) -> int:
    """The multiplicity e^0_q: stable d-th finite difference of the
    Hilbert-Samuel sequence, where d is the ring dimension."""
    d = ring_dimension(q.ring)
    if len(q.gens) < d:
        raise ValueError(
            f"multiplicity needs at least dim = {d} generators, got {len(q.gens)}"
        )
    _require_origin_primary(q)
    if nmax is None:
        nmax = d + 6
    values = []
    for n in range(1, nmax + 1):
        values.append(length(ideal_power(q, n)))
        if len(values) >= d + 2:
            diffs = _differences(values, d)
            if diffs[-1] == diffs[-2]:
                return diffs[-1]
    raise PostulationNotReachedError(values)


def buchsbaum_defect(q: IdealHandle, nmax=None) -> int:
    """len(A/q) - e^0_q(A); zero exactly in the Cohen-Macaulay case."""
    return length(q) - multiplicity(q, nmax=nmax)


def cm_type(Q: IdealHandle) -> int:
    """Cohen-Macaulay type via the socle of a parameter ideal."""
    if buchsbaum_defect(Q) != 0:
        raise NotCohenMacaulayError("type via socle requires Cohen-Macaulay")
    K = colon(Q, maxideal(Q.ring))
    return length(Q) - _colength(K)


def stability_index(I: IdealHandle, Q: IdealHandle, kmax: int):
    """Least n <= kmax with I^(n+1) = Q I^n, or None when no such n exists
    within the window."""
    for g in Q.gens:
        if not is_member(g, I):
            raise ContainmentError(g, f"Q is not contained in I: witness {g}")
    for n in range(1, kmax + 1):
        if ideal_equal(ideal_power(I, n + 1), ideal_product(Q, ideal_power(I, n))):
            return n
    return None


# -- sampling and depth -------------------------------------------------------


def random_linear_form(ring: Ring, rng: random.Random) -> Polynomial:
    """A nonzero linear form with coefficients drawn from the field
    (uniform residues for F_p, small integers for the rationals)."""
    field = ring.field
    while True:
        if field.characteristic:
            coeffs = [rng.randrange(field.characteristic) for _ in ring.variables]
        else:
            coeffs = [rng.randint(-9, 9) for _ in ring.variables]
        if any(coeffs):
            break
    form = ring.zero
    for c, name in zip(coeffs, ring.variables):
        if c:
            form = form + ring.var(name).scale(c)
    return form


def random_quadric(ring: Ring, rng: random.Random) -> Polynomial:
    names = ring.variables
    field = ring.field
    poly = ring.zero
    for _ in range(2):
        i = rng.randrange(len(names))
        j = rng.randrange(len(names))
        if field.characteristic:
            c = rng.randrange(field.characteristic)
        else:
            c = rng.randint(-3, 3)
        if c:
            poly = poly + (ring.var(names[i]) * ring.var(names[j])).scale(c)
    return poly


def sample_parameter_ideal(
    ring: Ring,
    rng: random.Random,
    inhomogeneous: bool = False,
    max_rejects: int = 50,
) -> IdealHandle:
    """d random linear forms (optionally perturbed by random quadrics),
    accepted only when origin-primary; up to ``max_rejects`` rejections."""
    d = ring_dimension(ring)
    for _ in range(max_rejects + 1):
        forms = []
        for _ in range(d):
            f = random_linear_form(ring, rng)
            if inhomogeneous:
                f = f + random_quadric(ring, rng)
            forms.append(f)
        candidate = IdealHandle(ring, forms)
        if len(candidate.gens) == d and is_origin_primary(candidate):
            return candidate
    raise SamplingError(
        f"no origin-primary sample found in {max_rejects} draws"
    )


@dataclass(frozen=True)
class DepthProbe:
    bound: int
    witnesses: tuple
    trials: int


def depth_probe(
    ring: Ring,
    trials: int = 6,
    seed: int = 0,
    candidates_per_level: int = 4,
) -> DepthProbe:
    """Certified lower bound on depth: greedily extend a regular sequence
    of random linear forms, certifying each step by colon((prev), f) = (prev).

    The bound is sound but possibly weak; callers combine it with a
    measured nonzero defect to pin depth = dim - 1 exactly.
    """
    d = ring_dimension(ring)
    rng = random.Random(seed)
    best: tuple = ()
    for _ in range(trials):
        chain: list = []
        while len(chain) < d:
            extended = False
            current = IdealHandle(ring, chain)
            for _ in range(candidates_per_level):
                f = random_linear_form(ring, rng)
                quotient = colon(current, IdealHandle(ring, [f]))
                if ideal_equal(quotient, current):
                    chain.append(f)
                    extended = True
                    break
            if not extended:
                break
        if len(chain) > len(best):
            best = tuple(chain)
        if len(best) == d:
            break
    return DepthProbe(len(best), best, trials)


@dataclass(frozen=True)
class InvariantRecord:
    """Bundle of the measured local invariants for one parameter ideal."""

    multiplicity: int
    colengths: tuple
    defect: int
    depth_lower_bound: int
    witnesses: tuple


def invariant_record(q: IdealHandle, depth: DepthProbe, nmax=None) -> InvariantRecord:
    d = ring_dimension(q.ring)
    window = nmax if nmax is not None else d + 6
    series = hilbert_samuel(q, window)
    e = multiplicity(q, nmax=window)
    return InvariantRecord(
        multiplicity=e,
        colengths=series.values,
        defect=series.values[0] - e,
        depth_lower_bound=depth.bound,
        witnesses=depth.witnesses,
    )
