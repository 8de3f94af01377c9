"""Ideal handles and the ideal calculus.

An ideal of a quotient presentation R = S/a is carried by its visible
generators; every computation happens on representatives in S with the
defining generators appended (the "lifted" ideal).  Sums, products and
powers act on visible generators; intersections run through the classical
tag-variable construction; colons intersect with a principal ideal of S
and divide exactly, so a failed division certifies a bug rather than a
bad input.
"""

from __future__ import annotations

from itertools import combinations_with_replacement

from .errors import RingMismatchError
from .groebner import GroebnerBasis, buchberger, ideal_equal, is_member
from .order import DEGREVLEX, elimination_order
from .polynomial import Polynomial, exact_divide, mon_support
from .ring import Ring


class IdealHandle:
    __slots__ = ("ring", "gens", "_basis", "_artinian", "_origin_primary")

    def __init__(self, ring: Ring, gens=()):
        seen = set()
        kept = []
        for g in gens:
            if g.ring.ambient_key != ring.ambient_key:
                raise RingMismatchError(
                    f"generator from {g.ring.ring_id} cannot enter an ideal "
                    f"of {ring.ring_id}"
                )
            if g.is_zero or g.terms in seen:
                continue
            seen.add(g.terms)
            kept.append(g)
        self.ring = ring
        self.gens = tuple(kept)
        self._basis = None
        self._artinian = None
        self._origin_primary = None

    @property
    def lifted_gens(self):
        return self.gens + self.ring.defining

    def basis(self) -> GroebnerBasis:
        if self._basis is None:
            self._basis = buchberger(self.ring, self.lifted_gens)
        return self._basis

    @property
    def is_unit(self) -> bool:
        return self.basis().contains_unit

    def contains(self, f: Polynomial) -> bool:
        return is_member(f, self)

    def __add__(self, other):
        return ideal_sum(self, other)

    def __mul__(self, other):
        return ideal_product(self, other)

    def __pow__(self, n):
        return ideal_power(self, n)

    def __repr__(self):
        inside = ", ".join(str(g) for g in self.gens) or "0"
        return f"Ideal({inside})"


def maxideal(ring: Ring) -> IdealHandle:
    """The ideal of all variables: the irrelevant maximal ideal."""
    return IdealHandle(ring, ring.gens())


def zero_ideal(ring: Ring) -> IdealHandle:
    return IdealHandle(ring, ())


def unit_ideal(ring: Ring) -> IdealHandle:
    return IdealHandle(ring, (ring.one,))


def _check_same_ring(I: IdealHandle, J: IdealHandle):
    if I.ring != J.ring:
        raise RingMismatchError(
            f"ideals live in different rings: {I.ring.ring_id} vs {J.ring.ring_id}"
        )


def _propagate_true(result: IdealHandle, *handles):
    if all(h._origin_primary is True for h in handles):
        result._origin_primary = True
    return result


def ideal_sum(I: IdealHandle, J: IdealHandle) -> IdealHandle:
    _check_same_ring(I, J)
    return _propagate_true(IdealHandle(I.ring, I.gens + J.gens), I, J)


def ideal_product(I: IdealHandle, J: IdealHandle) -> IdealHandle:
    _check_same_ring(I, J)
    result = IdealHandle(I.ring, tuple(f * g for f in I.gens for g in J.gens))
    if I._origin_primary is False or J._origin_primary is False:
        result._origin_primary = False
        return result
    return _propagate_true(result, I, J)


def ideal_power(I: IdealHandle, n: int) -> IdealHandle:
    if not isinstance(n, int) or n < 1:
        raise ValueError(
            "ideal powers take exponents n >= 1; the unit ideal is out of "
            "the data model"
        )
    products = []
    for combo in combinations_with_replacement(I.gens, n):
        p = combo[0]
        for f in combo[1:]:
            p = p * f
        products.append(p)
    result = IdealHandle(I.ring, products)
    # The radical of a power equals the radical of the base.
    result._origin_primary = I._origin_primary
    return result


def combine(op: str, I: IdealHandle, other) -> IdealHandle:
    if op == "sum":
        return ideal_sum(I, other)
    if op == "product":
        return ideal_product(I, other)
    if op == "power":
        return ideal_power(I, other)
    raise ValueError(f"unknown ideal combination {op!r}")


# -- ring plumbing for tag variables and eliminations ------------------------


def _fresh_name(taken, stem="t"):
    if stem not in taken:
        return stem
    k = 0
    while f"{stem}{k}" in taken:
        k += 1
    return f"{stem}{k}"


def _transfer(poly: Polynomial, target: Ring, slots) -> Polynomial:
    """Rebuild a polynomial in `target`, sending variable i to slot
    ``slots[i]``; re-canonicalizes under the target order."""
    width = len(target.variables)
    data = {}
    for m, c in poly.terms:
        exps = [0] * width
        for i, e in enumerate(m):
            if e:
                exps[slots[i]] = e
        data[tuple(exps)] = c
    return Polynomial.from_dict(target, data)


def _project(poly: Polynomial, target: Ring, keep_slots) -> Polynomial:
    """Drop all slots outside ``keep_slots`` (their exponents must vanish)."""
    data = {}
    for m, c in poly.terms:
        exps = tuple(m[i] for i in keep_slots)
        data[exps] = c
    return Polynomial.from_dict(target, data)


def _intersect_raw(ring: Ring, gens_a, gens_b):
    """Generators of (gens_a) ∩ (gens_b) as plain ideals of the ambient
    polynomial ring, via elimination of a tag variable t from
    t*A + (1-t)*B."""
    tag = _fresh_name(set(ring.variables))
    ext = Ring((tag,) + ring.variables, ring.field, elimination_order(1))
    slots = [i + 1 for i in range(len(ring.variables))]
    t = ext.var(tag)
    one_minus_t = ext.one - t
    gens = [t * _transfer(g, ext, slots) for g in gens_a]
    gens += [one_minus_t * _transfer(g, ext, slots) for g in gens_b]
    basis = buchberger(ext, gens)
    keep = list(range(1, len(ext.variables)))
    out = []
    for p in basis:
        if all(m[0] == 0 for m, _ in p.terms):
            out.append(_project(p, ring, keep))
    return out


def intersect(I: IdealHandle, J: IdealHandle) -> IdealHandle:
    _check_same_ring(I, J)
    gens = _intersect_raw(I.ring, I.lifted_gens, J.lifted_gens)
    return _propagate_true(IdealHandle(I.ring, gens), I, J)


def colon(I: IdealHandle, J: IdealHandle) -> IdealHandle:
    """The colon ideal I : J = {f : fJ ⊆ I}."""
    _check_same_ring(I, J)
    if ideal_equal(J, zero_ideal(J.ring)):
        raise ValueError("colon by zero ideal")
    parts = []
    for f in J.gens:
        if is_member(f, I):
            continue  # (I : f) is the whole ring
        common = _intersect_raw(I.ring, I.lifted_gens, [f])
        quotients = [exact_divide(g, f) for g in common]
        parts.append(IdealHandle(I.ring, quotients))
    if not parts:
        return unit_ideal(I.ring)
    result = parts[0]
    for part in parts[1:]:
        result = intersect(result, part)
    return result


def eliminate(I: IdealHandle, first_block) -> IdealHandle:
    """Generators of I ∩ k[remaining variables], as an ideal of the
    polynomial ring on the remaining variables."""
    ring = I.ring
    block = [v for v in ring.variables if v in set(first_block)]
    if len(block) != len(set(first_block)):
        missing = set(first_block) - set(ring.variables)
        raise ValueError(f"not ring variables: {sorted(missing)}")
    rest = [v for v in ring.variables if v not in set(block)]
    if not block:
        raise ValueError("elimination block is empty")
    if not rest:
        raise ValueError("cannot eliminate every variable")
    perm_ring = Ring(
        tuple(block) + tuple(rest), ring.field, elimination_order(len(block))
    )
    slot_of = {v: i for i, v in enumerate(perm_ring.variables)}
    slots = [slot_of[v] for v in ring.variables]
    gens = [_transfer(g, perm_ring, slots) for g in I.lifted_gens]
    basis = buchberger(perm_ring, gens)
    target = Ring(tuple(rest), ring.field, DEGREVLEX)
    keep = list(range(len(block), len(perm_ring.variables)))
    k = len(block)
    out = []
    for p in basis:
        if all(all(m[i] == 0 for i in range(k)) for m, _ in p.terms):
            out.append(_project(p, target, keep))
    return IdealHandle(target, out)


def krull_dimension(I: IdealHandle) -> int:
    """Dimension of the quotient by the lifted ideal, read combinatorially
    off the leading-monomial staircase: the largest set of variables that
    contains the support of no leading monomial."""
    basis = I.basis()
    if basis.contains_unit:
        raise ValueError("the unit ideal has no dimension")
    n = len(I.ring.variables)
    supports = set()
    for lm in basis.leading_monomials():
        supports.add(sum(1 << i for i in mon_support(lm)))
    best = 0
    for mask in range(1 << n):
        size = mask.bit_count()
        if size <= best:
            continue
        if all(sup & ~mask for sup in supports):
            best = size
    return best


def ring_dimension(ring: Ring) -> int:
    """Krull dimension of the presented ring itself."""
    if ring._dimension is None:
        ring._dimension = krull_dimension(zero_ideal(ring))
    return ring._dimension


def _origin_primary_witness(I: IdealHandle):
    """None when the quotient is supported exactly at the origin, else a
    (variable, reason) pair naming the first failure."""
    basis = I.basis()
    if basis.contains_unit:
        return ("1", "generates the unit ideal")
    ring = I.ring
    lms = basis.leading_monomials()
    pure = set()
    for lm in lms:
        support = mon_support(lm)
        if len(support) == 1:
            pure.add(support[0])
    for i, name in enumerate(ring.variables):
        if i not in pure:
            return (name, "has no pure power among the leading monomials")
    # Rabinowitsch: x lies in the radical iff 1 ∈ I + (t*x - 1).
    tag = _fresh_name(set(ring.variables))
    ext = Ring((tag,) + ring.variables, ring.field, DEGREVLEX)
    slots = [i + 1 for i in range(len(ring.variables))]
    t = ext.var(tag)
    lifted = [_transfer(g, ext, slots) for g in I.lifted_gens]
    for i, name in enumerate(ring.variables):
        x = ext.var(name)
        trial = buchberger(ext, lifted + [t * x - ext.one])
        if not trial.contains_unit:
            return (name, "does not lie in the radical")
    return None


def is_origin_primary(I: IdealHandle) -> bool:
    """True when the quotient by the lifted ideal is finite-dimensional
    and supported only at the origin."""
    if I._origin_primary is None:
        I._origin_primary = _origin_primary_witness(I) is None
    return I._origin_primary


def subalgebra_presentation(target_ring: Ring, images, pres_names) -> IdealHandle:
    """Kernel of the map pres_names[k] -> images[k] into the target
    presentation, as an ideal of a fresh polynomial ring on pres_names."""
    pres_names = tuple(pres_names)
    if len(pres_names) != len(images):
        raise ValueError("one presentation variable per image is required")
    if len(set(pres_names)) != len(pres_names):
        raise ValueError("presentation variable names must be distinct")
    if set(pres_names) & set(target_ring.variables):
        raise ValueError("presentation variables clash with the target ring")
    for img in images:
        if img.ring.ambient_key != target_ring.ambient_key:
            raise RingMismatchError(
                f"image {img} does not live in {target_ring.ring_id}"
            )
    k = len(target_ring.variables)
    combined = Ring(
        target_ring.variables + pres_names,
        target_ring.field,
        elimination_order(k),
    )
    slots = list(range(k))
    graph = []
    for j, img in enumerate(images):
        graph.append(combined.var(pres_names[j]) - _transfer(img, combined, slots))
    graph += [_transfer(g, combined, slots) for g in target_ring.defining]
    basis = buchberger(combined, graph)
    target = Ring(pres_names, target_ring.field, DEGREVLEX)
    keep = list(range(k, len(combined.variables)))
    out = []
    for p in basis:
        if all(all(m[i] == 0 for i in range(k)) for m, _ in p.terms):
            out.append(_project(p, target, keep))
    return IdealHandle(target, out)
