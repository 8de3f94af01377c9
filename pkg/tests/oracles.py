"""Independent oracles for the test suite.

Nothing in this module calls Buchberger, colon ideals, or the length
machinery under test: membership and dimension questions are settled by
exact linear algebra on coefficient matrices over F_p (numpy int64,
entries reduced mod p), staircase counts by direct lattice enumeration on
the original generator exponents.
"""

from __future__ import annotations

from itertools import product as cartesian

import numpy as np

from socle_lab.polynomial import mon_divides, mon_mul


def monomials_up_to(nvars: int, max_degree: int):
    """All exponent tuples of total degree <= max_degree, fixed order."""
    out = []

    def rec(prefix, remaining, slots):
        if slots == 0:
            out.append(tuple(prefix))
            return
        for e in range(remaining + 1):
            rec(prefix + [e], remaining - e, slots - 1)

    rec([], max_degree, nvars)
    out.sort()
    return out


def monomials_of_degree(nvars: int, degree: int):
    return [m for m in monomials_up_to(nvars, degree) if sum(m) == degree]


class ModSpan:
    """Row space over F_p with incremental row reduction."""

    def __init__(self, ncols: int, p: int):
        self.p = p
        self.ncols = ncols
        self.pivots = {}  # pivot column -> normalized row (np.ndarray)

    def _reduce(self, row):
        row = row % self.p
        for col in sorted(self.pivots):
            if row[col]:
                row = (row - row[col] * self.pivots[col]) % self.p
        return row

    def add(self, row) -> bool:
        """Insert a row; returns True when it enlarged the span."""
        row = self._reduce(np.asarray(row, dtype=np.int64))
        nz = np.nonzero(row)[0]
        if nz.size == 0:
            return False
        col = int(nz[0])
        inv = pow(int(row[col]), -1, self.p)
        row = (row * inv) % self.p
        for other_col, other in list(self.pivots.items()):
            if other[col]:
                self.pivots[other_col] = (other - other[col] * row) % self.p
        self.pivots[col] = row
        return True

    def contains(self, row) -> bool:
        return np.nonzero(self._reduce(np.asarray(row, dtype=np.int64)))[0].size == 0

    @property
    def rank(self) -> int:
        return len(self.pivots)


def _coeff_vector(poly, index, p):
    vec = np.zeros(len(index), dtype=np.int64)
    for m, c in poly.terms:
        vec[index[m]] = int(c) % p
    return vec


def macaulay_span(gens, max_degree: int) -> tuple:
    """Row space spanned by all multiples m*g of total degree <= max_degree.

    Returns (span, index) where index maps exponent tuples to columns.
    """
    ring = gens[0].ring
    p = ring.field.characteristic
    assert p > 0, "the Macaulay oracle works over a prime field"
    nvars = len(ring.variables)
    cols = monomials_up_to(nvars, max_degree)
    index = {m: i for i, m in enumerate(cols)}
    span = ModSpan(len(cols), p)
    for g in gens:
        gdeg = g.degree()
        if gdeg > max_degree:
            continue
        for mult in monomials_up_to(nvars, max_degree - gdeg):
            shifted = {mon_mul(mult, m): c for m, c in g.terms}
            vec = np.zeros(len(cols), dtype=np.int64)
            for m, c in shifted.items():
                vec[index[m]] = int(c) % p
            span.add(vec)
    return span, index


def macaulay_member(f, gens, max_degree: int = 8) -> bool:
    """Membership of f in (gens) via the degree-bounded coefficient matrix."""
    span, index = macaulay_span(gens, max_degree)
    p = f.ring.field.characteristic
    return span.contains(_coeff_vector(f, index, p))


def graded_quotient_dimension(gens, max_degree: int = 10) -> int:
    """Vector-space dimension of the quotient by a homogeneous ideal whose
    quotient is finite dimensional, by per-degree rank counting."""
    ring = gens[0].ring
    p = ring.field.characteristic
    nvars = len(ring.variables)
    total = 0
    for d in range(max_degree + 1):
        degree_monomials = monomials_of_degree(nvars, d)
        index = {m: i for i, m in enumerate(degree_monomials)}
        span = ModSpan(len(degree_monomials), p)
        for g in gens:
            gdeg = g.degree()
            if gdeg > d:
                continue
            for mult in monomials_of_degree(nvars, d - gdeg):
                vec = np.zeros(len(degree_monomials), dtype=np.int64)
                for m, c in g.terms:
                    vec[index[mon_mul(mult, m)]] = int(c) % p
                span.add(vec)
        slice_dim = len(degree_monomials) - span.rank
        total += slice_dim
        if slice_dim == 0 and d > 0:
            return total
    raise AssertionError(f"quotient not visibly finite below degree {max_degree}")


def staircase_complement_count(exponents) -> int:
    """Lattice points outside the staircase of a monomial ideal, counted
    directly from the generator exponent vectors.  Requires a pure power
    of every variable among the generators."""
    nvars = len(exponents[0])
    bounds = [None] * nvars
    for e in exponents:
        support = [i for i, x in enumerate(e) if x]
        if len(support) == 1:
            i = support[0]
            if bounds[i] is None or e[i] < bounds[i]:
                bounds[i] = e[i]
    assert all(b is not None for b in bounds), "need a pure power per variable"
    count = 0
    for point in cartesian(*(range(b) for b in bounds)):
        if not any(mon_divides(e, point) for e in exponents):
            count += 1
    return count


def socle_dimension_by_kernel(aq) -> int:
    """Socle dimension of an Artinian quotient: kernel of the stacked
    multiplication-by-variable matrices on the standard-monomial basis."""
    from socle_lab.polynomial import normal_form

    ring = aq.ring
    p = ring.field.characteristic
    assert p > 0
    basis = aq.standard_monomials
    index = {m: i for i, m in enumerate(basis)}
    gb = list(aq.ideal.basis().polys)
    rows = []
    for var in ring.variables:
        x = ring.var(var)
        for m in basis:
            image = normal_form(x * ring.monomial(m), gb)
            vec = np.zeros(len(basis), dtype=np.int64)
            for mm, c in image.terms:
                vec[index[mm]] = int(c) % p
            rows.append((index[m], vec))
    # Columns are the basis monomials; stack one block per variable.
    nvars = len(ring.variables)
    L = len(basis)
    matrix = np.zeros((nvars * L, L), dtype=np.int64)
    for block in range(nvars):
        for col in range(L):
            src, vec = rows[block * L + col]
            matrix[block * L : (block + 1) * L, src] = vec
    span = ModSpan(nvars * L, p)
    rank = 0
    for col in range(L):
        if span.add(matrix[:, col]):
            rank += 1
    return L - rank
