"""Buchberger's algorithm and canonical reduced Groebner bases.

The pair queue uses the normal selection strategy: smallest lcm total
degree first, ties broken by the monomial order on the lcm and then by
pair index.  Both classical pruning criteria are applied when a pair is
popped: coprime leading monomials, and the chain criterion (some third
basis element divides the pair's lcm and both side pairs have already
left the queue).  The final basis is inter-reduced, made monic and sorted
by leading monomial, which makes it the unique reduced basis of the
ideal: equality of ideals is equality of bases.
"""

from __future__ import annotations

import heapq

from . import cache
from .errors import RingMismatchError
from .polynomial import (
    Polynomial,
    mon_coprime,
    mon_degree,
    mon_div,
    mon_divides,
    mon_lcm,
    normal_form,
)


class GroebnerBasis:
    """A reduced Groebner basis; canonical for (ideal, order)."""

    __slots__ = ("ring", "polys")

    def __init__(self, ring, polys):
        self.ring = ring
        self.polys = tuple(polys)

    @property
    def is_zero_ideal(self) -> bool:
        return not self.polys

    @property
    def contains_unit(self) -> bool:
        return len(self.polys) == 1 and self.polys[0].degree() == 0

    def leading_monomials(self):
        return tuple(p.leading_monomial() for p in self.polys)

    def normal_form(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self.polys)

    def __iter__(self):
        return iter(self.polys)

    def __len__(self):
        return len(self.polys)

    def __eq__(self, other):
        if not isinstance(other, GroebnerBasis):
            return NotImplemented
        return (
            self.ring.ambient_key == other.ring.ambient_key
            and self.polys == other.polys
        )

    def __hash__(self):
        return hash((self.ring.ambient_key, self.polys))

    def __repr__(self):
        return f"GroebnerBasis({', '.join(str(p) for p in self.polys)})"

    def selfcheck(self) -> bool:
        """Verify the defining properties directly (test support)."""
        lms = self.leading_monomials()
        for i, p in enumerate(self.polys):
            if p.leading_coefficient() != self.ring.field.one:
                return False
            for m, _ in p.terms:
                for j, lm in enumerate(lms):
                    if i != j and mon_divides(lm, m):
                        return False
        for i in range(len(self.polys)):
            for j in range(i + 1, len(self.polys)):
                s = s_polynomial(self.polys[i], self.polys[j])
                if not normal_form(s, self.polys).is_zero:
                    return False
        return True


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    lf, cf = f.leading_term()
    lg, cg = g.leading_term()
    lcm = mon_lcm(lf, lg)
    field = f.ring.field
    return f.shift(mon_div(lcm, lf), field.invert(cf)) - g.shift(
        mon_div(lcm, lg), field.invert(cg)
    )


def _prepare(gens, ring):
    seen = set()
    polys = []
    for g in gens:
        if g.ring.ambient_key != ring.ambient_key:
            raise RingMismatchError(
                f"generator in {g.ring.ring_id} does not belong to {ring.ring_id}"
            )
        if g.is_zero:
            continue
        g = g.monic()
        if g.terms in seen:
            continue
        seen.add(g.terms)
        polys.append(g)
    return polys


def _unique_reduced(ring, polys):
    """Minimalize and tail-reduce an arbitrary Groebner basis."""
    key = ring.order.key
    polys = sorted(polys, key=lambda p: key(p.leading_monomial()))
    minimal = []
    for p in polys:
        lm = p.leading_monomial()
        if not any(mon_divides(q.leading_monomial(), lm) for q in minimal):
            minimal.append(p)
    reduced = []
    for i, p in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1 :]
        reduced.append(normal_form(p, others).monic() if others else p)
    reduced.sort(key=lambda p: key(p.leading_monomial()))
    return reduced


def _buchberger_core(ring, gens):
    G = _prepare(gens, ring)
    if not G:
        return []
    if any(g.degree() == 0 for g in G):
        return [ring.one]
    key = ring.order.key
    lms = [g.leading_monomial() for g in G]
    pending = set()
    heap = []

    def push_pairs(j):
        for i in range(j):
            lcm = mon_lcm(lms[i], lms[j])
            heapq.heappush(heap, (mon_degree(lcm), key(lcm), i, j))
            pending.add((i, j))

    for j in range(len(G)):
        push_pairs(j)

    while heap:
        _, _, i, j = heapq.heappop(heap)
        pending.discard((i, j))
        lmi, lmj = lms[i], lms[j]
        if mon_coprime(lmi, lmj):
            continue
        lcm = mon_lcm(lmi, lmj)
        skip = False
        for k in range(len(G)):
            if k in (i, j):
                continue
            if (
                mon_divides(lms[k], lcm)
                and (min(i, k), max(i, k)) not in pending
                and (min(j, k), max(j, k)) not in pending
            ):
                skip = True
                break
        if skip:
            continue
        r = normal_form(s_polynomial(G[i], G[j]), G)
        if r.is_zero:
            continue
        if r.degree() == 0:
            return [ring.one]
        r = r.monic()
        G.append(r)
        lms.append(r.leading_monomial())
        push_pairs(len(G) - 1)

    return _unique_reduced(ring, G)


def _cache_key(ring, gens):
    parts = sorted(str(g.monic()) for g in gens if not g.is_zero)
    order = ring.order
    return "|".join(
        [
            ring.field.key,
            ",".join(ring.variables),
            order.descriptor(),
            ";".join(parts),
        ]
    )


def buchberger(ring, gens, use_cache: bool = True) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal the generators span in the
    ambient polynomial ring, under the ring's own order."""
    if use_cache:
        key = _cache_key(ring, gens)
        lines = cache.lookup(key)
        if lines is not None:
            from .parse import parse_polynomial

            try:
                return GroebnerBasis(
                    ring, tuple(parse_polynomial(ring, line) for line in lines)
                )
            except Exception:
                pass  # unreadable entry: fall through and recompute
        basis = GroebnerBasis(ring, _buchberger_core(ring, gens))
        cache.store(key, [str(p) for p in basis.polys])
        return basis
    return GroebnerBasis(ring, _buchberger_core(ring, gens))


def buchberger_with_certificates(ring, gens):
    """Reduced basis plus, for each element, the quotients expressing it
    as an explicit combination of the input generators.

    Returns (basis, certificates) where certificates[i] is a list of
    polynomials c with basis[i] == sum(c_k * gens_k).  Slower than
    ``buchberger``; intended for audits and tests.
    """
    from .polynomial import normal_form_with_quotients

    inputs = [g for g in gens if not g.is_zero]
    field = ring.field

    # Track every working element as (polynomial, coefficient row).
    rows = []
    G = []
    for idx, g in enumerate(inputs):
        row = [ring.zero] * len(inputs)
        row[idx] = ring.const(field.invert(g.leading_coefficient()))
        G.append(g.monic())
        rows.append(row)

    def combine(poly, row):
        if poly.is_zero:
            return poly, row
        lc = poly.leading_coefficient()
        inv = field.invert(lc)
        return poly.monic(), [c.scale(inv) for c in row]

    changed = True
    # Naive completion loop: certificates favour transparency over speed.
    while changed:
        changed = False
        for i in range(len(G)):
            for j in range(i + 1, len(G)):
                s = s_polynomial(G[i], G[j])
                rem, quotients = normal_form_with_quotients(s, G)
                if rem.is_zero:
                    continue
                lf, cf = G[i].leading_term()
                lg, cg = G[j].leading_term()
                lcm = mon_lcm(lf, lg)
                a = mon_div(lcm, lf)
                b = mon_div(lcm, lg)
                row = [
                    rows[i][k].shift(a, field.invert(cf))
                    - rows[j][k].shift(b, field.invert(cg))
                    for k in range(len(inputs))
                ]
                for g_idx, q in enumerate(quotients):
                    if q.is_zero:
                        continue
                    row = [
                        row[k] - q * rows[g_idx][k] for k in range(len(inputs))
                    ]
                poly, row = combine(rem, row)
                G.append(poly)
                rows.append(row)
                changed = True

    basis = _unique_reduced(ring, list(G))
    certificates = []
    for p in basis:
        rem, quotients = normal_form_with_quotients(p, G)
        assert rem.is_zero
        row = [ring.zero] * len(inputs)
        for g_idx, q in enumerate(quotients):
            if q.is_zero:
                continue
            row = [row[k] + q * rows[g_idx][k] for k in range(len(inputs))]
        certificates.append(row)
    return GroebnerBasis(ring, basis), certificates


def is_member(f: Polynomial, ideal) -> bool:
    """Ideal membership via normal form against the reduced basis."""
    basis = ideal if isinstance(ideal, GroebnerBasis) else ideal.basis()
    if f.ring.ambient_key != basis.ring.ambient_key:
        raise RingMismatchError(
            f"{f.ring.ring_id} does not match {basis.ring.ring_id}"
        )
    return basis.normal_form(f).is_zero


def ideal_equal(I, J) -> bool:
    """Two ideals are equal exactly when their reduced bases coincide."""
    bi = I if isinstance(I, GroebnerBasis) else I.basis()
    bj = J if isinstance(J, GroebnerBasis) else J.basis()
    if bi.ring.ambient_key != bj.ring.ambient_key:
        raise RingMismatchError(
            f"{bi.ring.ring_id} does not match {bj.ring.ring_id}"
        )
    return bi.polys == bj.polys
