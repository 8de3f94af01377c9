"""Constructors for the ring families under study and the verification
driver that measures every quantitative claim on concrete instances.

Families
--------
* ``section4_ring(m, d)``: for 1 <= d < m, the quotient of
  k[x_1..x_m, v, a_1..a_d] by (x_i | i < m)^2 + (x_m^2) + (x_i v) +
  (v^2 - sum a_i x_i).  A d-dimensional Buchsbaum ring of multiplicity 2m
  and depth d-1 whose distinguished reduction Q = (a_1..a_d) satisfies
  I^2 != QI but I^3 = QI^2 for I = Q : m.
* ``fiber_product_ring(d)``: k[x_1..x_d, y_1..y_d]/(x_i y_j), two regular
  branches meeting at the origin; multiplicity 2, and I^2 = QI for every
  parameter ideal Q.
* ``field_extension_ring(d, minpoly)``: the subring generated by
  {x_j, u x_j} of a rank-two extension ring, presented by elimination;
  multiplicity 2 and I^2 = QI for every parameter ideal.
* ``regular_param_scenarios()``: parameter ideals of k[x,y] realizing the
  socle-length dichotomy (d for the integrally closed shape (x, y^q),
  type + d for (x^2, y^2)), plus the k[x] instance where no power
  stability ever occurs.
* ``semigroup_curve_ring()``: the monomial curve k[t^3, t^4, t^5], a
  one-dimensional Cohen-Macaulay domain of type 2.

Every expected value carries a provenance tag: "literature" for values
asserted by published results, "derived" for values established by an
independent oracle named in the note.  ``verify`` refuses tables with
untagged entries.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass

from . import __version__
from .errors import ToolkitError
from .field import field_for_characteristic
from .groebner import ideal_equal, is_member
from .ideal import (
    IdealHandle,
    colon,
    ideal_power,
    ideal_product,
    intersect,
    maxideal,
    ring_dimension,
    subalgebra_presentation,
    zero_ideal,
)
from .invariants import (
    buchsbaum_defect,
    cm_type,
    depth_probe,
    length,
    min_generators,
    multiplicity,
    relative_length,
    sample_parameter_ideal,
    socle,
    stability_index,
)
from .parse import parse_polynomial
from .report import ReportRow, VerificationReport, merge_reports
from .ring import Ring

SOURCES = ("literature", "derived")


@dataclass(frozen=True)
class Expected:
    value: object
    source: str
    note: str = ""


@dataclass
class FamilyInstance:
    tag: str
    params: dict
    ring: Ring
    ideals: dict
    expected: dict


@dataclass(frozen=True)
class VerifyConfig:
    samples: int = 5
    seed: int = 0
    kmax: int = 4
    nmax: int | None = None
    depth_trials: int = 4
    inhomogeneous: bool = False


# -- constructors -------------------------------------------------------------


def section4_ring(m: int, d: int, char: int = 101) -> FamilyInstance:
    if not 1 <= d < m:
        raise ValueError(
            f"section4 family needs 1 <= d < m, got (m, d) = ({m}, {d})"
        )
    k = field_for_characteristic(char)
    names = tuple(
        [f"x{i}" for i in range(1, m + 1)]
        + ["v"]
        + [f"a{j}" for j in range(1, d + 1)]
    )
    ambient = Ring(names, k)
    x = [ambient.var(f"x{i}") for i in range(1, m + 1)]
    v = ambient.var("v")
    a = [ambient.var(f"a{j}") for j in range(1, d + 1)]
    relations = []
    for i in range(m - 1):
        for j in range(i, m - 1):
            relations.append(x[i] * x[j])
    relations.append(x[m - 1] * x[m - 1])
    for i in range(m):
        relations.append(x[i] * v)
    vv = v * v
    for j in range(d):
        vv = vv - a[j] * x[j]
    relations.append(vv)
    ring = ambient.quotient(relations)
    Q = IdealHandle(ring, a)
    squares = IdealHandle(ring, [f * f for f in a])
    socle_form = IdealHandle(
        ring, list(a) + [x[i] * x[m - 1] for i in range(m - 1)] + [v]
    )
    expected = {
        "quotient-colength": Expected(2 * m + 1, "literature",
                                      "colength of the distinguished reduction is 2m+1"),
        "reduction-multiplicity": Expected(2 * m, "literature",
                                           "multiplicity with respect to the reduction is 2m"),
        "ring-dimension": Expected(d, "literature", "the quotient has dimension d"),
        "socle-ideal-form": Expected(True, "literature",
                                     "Q:m = Q + (x_i x_m | i < m) + (v)"),
        "link-colength": Expected(m + 1, "derived", "standard-monomial count"),
        "square-equals-QI": Expected(False, "literature", "I^2 != QI"),
        "cube-equals-QI2": Expected(True, "literature", "I^3 = QI^2"),
        "stability-index": Expected(2, "literature",
                                    "least n with I^(n+1) = QI^n is 2"),
        "squared-params-defect": Expected(1, "literature",
                                          "colength minus multiplicity of (a^2) is 1"),
        "squared-params-multiplicity": Expected((2 ** d) * 2 * m, "literature",
                                                "e of (a^2) is 2^d times e of (a)"),
        "cube-reduction-identity": Expected(True, "literature",
                                            "M^3 = Q M^2, hence Q is a reduction"),
        "depth": Expected(d - 1, "literature", "depth is d-1"),
        "min-generation-identity": Expected(True, "literature",
                                            "mu(Q:m) = len((Q:m)/Q) + d"),
        "parameter-defect-constancy": Expected(1, "derived",
                                               "count of distinct sampled defects"),
    }
    return FamilyInstance(
        tag="section4",
        params={"m": m, "d": d, "char": char},
        ring=ring,
        ideals={"Q": Q, "a-squares": squares, "socle-form": socle_form},
        expected=expected,
    )


def fiber_product_ring(d: int, char: int = 101) -> FamilyInstance:
    if d < 1:
        raise ValueError(f"fiber-product family needs d >= 1, got {d}")
    k = field_for_characteristic(char)
    names = tuple(
        [f"x{i}" for i in range(1, d + 1)] + [f"y{i}" for i in range(1, d + 1)]
    )
    ambient = Ring(names, k)
    xs = [ambient.var(f"x{i}") for i in range(1, d + 1)]
    ys = [ambient.var(f"y{i}") for i in range(1, d + 1)]
    relations = [xi * yj for xi in xs for yj in ys]
    ring = ambient.quotient(relations)
    expected = {
        "component-intersection-zero": Expected(True, "literature",
                                                "the two branch primes meet in (0)"),
        "component-product-zero": Expected(True, "derived",
                                           "membership of every pairwise product"),
        "ring-dimension": Expected(d, "derived",
                                   "each branch is regular of dimension d"),
        "reduction-multiplicity": Expected(2, "derived",
                                           "sum of the two branch multiplicities"),
        "stability-index": Expected(1, "literature",
                                    "I^2 = QI for every parameter ideal"),
        "min-generation-identity": Expected(True, "literature",
                                            "mu(Q:m) = len((Q:m)/Q) + d"),
        "parameter-defect-constancy": Expected(1, "derived",
                                               "count of distinct sampled defects"),
    }
    return FamilyInstance(
        tag="fiber-product",
        params={"d": d, "char": char},
        ring=ring,
        ideals={
            "Q": IdealHandle(ring, [xi + yi for xi, yi in zip(xs, ys)]),
            "p1": IdealHandle(ring, xs),
            "p2": IdealHandle(ring, ys),
        },
        expected=expected,
    )


def default_minpoly(char: int) -> str:
    """A monic irreducible quadric u^2 + a*u + b over the chosen field,
    found by deterministic search (u^2+1 over the rationals)."""
    if char == 0:
        return "u^2 + 1"
    for b in range(1, char):
        for a in range(char):
            if all((r * r + a * r + b) % char for r in range(char)):
                if a == 0:
                    return f"u^2 + {b}"
                return f"u^2 + {a}*u + {b}"
    raise ValueError(f"no irreducible quadric over F_{char}")


def _quadric_is_irreducible(a, b, char: int) -> bool:
    """Whether u^2 + a*u + b is irreducible over the chosen field."""
    if char == 0:
        disc = a * a - 4 * b  # Fractions; reducible iff disc is a square
        if disc < 0:
            return True
        num, den = disc.numerator, disc.denominator
        return not (math.isqrt(num) ** 2 == num and math.isqrt(den) ** 2 == den)
    return all((r * r + a * r + b) % char for r in range(char))


def field_extension_ring(d: int = 2, minpoly: str | None = None,
                         char: int = 101) -> FamilyInstance:
    if d < 2:
        raise ValueError(f"field-extension family needs d >= 2, got {d}")
    k = field_for_characteristic(char)
    if minpoly is None:
        minpoly = default_minpoly(char)
    target_names = tuple([f"x{i}" for i in range(1, d + 1)] + ["u"])
    target_ambient = Ring(target_names, k)
    mp = parse_polynomial(target_ambient, minpoly)
    u_slot = len(target_names) - 1
    degree = max((m[u_slot] for m, _ in mp.terms), default=0)
    if degree != 2 or any(
        any(e and i != u_slot for i, e in enumerate(m)) for m, _ in mp.terms
    ):
        raise ValueError(
            "only quadratic extensions modeled: the minimal polynomial must "
            "be monic of degree 2 in u alone"
        )
    coeff_of = {e: c for (m, c) in mp.terms for e in [m[u_slot]]}
    one = k.one
    if coeff_of.get(2) != one:
        raise ValueError("the minimal polynomial must be monic")
    lin = coeff_of.get(1, k.zero)
    const = coeff_of.get(0, k.zero)
    target = target_ambient.quotient([mp])
    u = target_ambient.var("u")
    xs = [target_ambient.var(f"x{i}") for i in range(1, d + 1)]
    images = list(xs) + [u * xi for xi in xs]
    pres_names = tuple(
        [f"y{i}" for i in range(1, d + 1)] + [f"z{i}" for i in range(1, d + 1)]
    )
    kernel = subalgebra_presentation(target, images, pres_names)
    ring = kernel.ring.quotient(kernel.gens)
    ys = [ring.var(f"y{i}") for i in range(1, d + 1)]
    zs = [ring.var(f"z{i}") for i in range(1, d + 1)]
    # Relations forced by u^2 = -(lin*u + const) under y_i -> x_i, z_i -> u x_i.
    quadrics = []
    for i in range(d):
        quadrics.append(zs[i] * zs[i] + zs[i] * ys[i] * lin + ys[i] * ys[i] * const)
    for i in range(d):
        for j in range(i + 1, d):
            quadrics.append(zs[i] * zs[j] + zs[i] * ys[j] * lin + ys[i] * ys[j] * const)
            quadrics.append(ys[i] * zs[j] - ys[j] * zs[i])
    expected = {
        "kernel-contains-quadrics": Expected(True, "derived",
                                             "substitution identity for each quadric"),
        "ring-dimension": Expected(d, "derived", "the subring has dimension d"),
        "reduction-multiplicity": Expected(2, "literature",
                                           "multiplicity equals the extension degree"),
        "max-square-reduction": Expected(True, "literature", "m^2 = Q m"),
        "stability-index": Expected(1, "literature",
                                    "I^2 = QI for every parameter ideal"),
        "min-generation-identity": Expected(True, "literature",
                                            "mu(Q:m) = len((Q:m)/Q) + d"),
        "parameter-defect-constancy": Expected(1, "derived",
                                               "count of distinct sampled defects"),
    }
    return FamilyInstance(
        tag="field-extension",
        params={
            "d": d,
            "char": char,
            "minpoly": minpoly,
            "irreducible": _quadric_is_irreducible(lin, const, char),
        },
        ring=ring,
        ideals={
            "Q": IdealHandle(ring, ys),
            "kernel": kernel,
            "quadrics": IdealHandle(ring.ambient(), quadrics),
        },
        expected=expected,
    )


def regular_param_scenarios(char: int = 0):
    """Parameter-ideal shapes in a regular ring: the socle-length
    dichotomy in k[x,y] and the stability-free line k[x]."""
    k = field_for_characteristic(char)
    plane = Ring(("x", "y"), k)
    x, y = plane.var("x"), plane.var("y")
    plane_instance = FamilyInstance(
        tag="regular-param",
        params={"char": char, "ring": "plane"},
        ring=plane,
        ideals={
            "Q-closed": IdealHandle(plane, [x, y**3]),
            "Q-nonclosed": IdealHandle(plane, [x * x, y * y]),
            "Q-linear": IdealHandle(plane, [x, y]),
        },
        expected={
            "socle-closed-shape": Expected(2, "literature",
                                           "socle length d for the shape (x, y^q)"),
            "socle-nonclosed-shape": Expected(3, "literature",
                                              "socle length type + d otherwise"),
            "socle-linear-shape": Expected(2, "derived", "q = 1 closed shape, hand count"),
            "cm-type": Expected(1, "derived", "regular local rings are Gorenstein"),
            "ring-multiplicity": Expected(1, "derived", "regular ring"),
        },
    )
    line = Ring(("x",), k)
    t = line.var("x")
    line_instance = FamilyInstance(
        tag="regular-param",
        params={"char": char, "ring": "line"},
        ring=line,
        ideals={"Q": IdealHandle(line, [t * t]), "I": IdealHandle(line, [t])},
        expected={
            "stability-absent": Expected(None, "derived",
                                         "degree count: I^(n+1) has degree n+1, QI^n degree n+2"),
        },
    )
    return [plane_instance, line_instance]


def semigroup_curve_ring(char: int = 101) -> FamilyInstance:
    """The numerical-semigroup curve k[t^3, t^4, t^5]."""
    k = field_for_characteristic(char)
    ambient = Ring(("x", "y", "z"), k)
    x, y, z = ambient.var("x"), ambient.var("y"), ambient.var("z")
    ring = ambient.quotient([y * y - x * z, z * z - x * x * y, x**3 - y * z])
    return FamilyInstance(
        tag="semigroup-curve",
        params={"char": char},
        ring=ring,
        ideals={"Q": IdealHandle(ring, [x])},
        expected={
            "cm-type": Expected(2, "derived", "socle count via the toolkit, kernel oracle"),
            "parameter-defect": Expected(0, "derived", "one-dimensional domain is CM"),
            "reduction-multiplicity": Expected(3, "derived",
                                               "colength of a reduction in a CM ring"),
            "ring-dimension": Expected(1, "derived", "monomial curve"),
            "min-generation-identity": Expected(True, "literature",
                                                "mu(Q:m) = len((Q:m)/Q) + d"),
        },
    )


FAMILY_TAGS = (
    "section4",
    "fiber-product",
    "field-extension",
    "regular-param",
    "semigroup-curve",
)


# -- verification driver ------------------------------------------------------


class _RowRunner:
    def __init__(self, rows):
        self.rows = rows

    def run(self, claim_id, claim, expected: Expected | None, thunk,
            flagged=False):
        start = time.perf_counter()
        try:
            computed = thunk()
            error = None
        except ToolkitError as exc:
            computed = None
            error = str(exc)
        wall_ms = (time.perf_counter() - start) * 1000.0
        if error is not None:
            row = ReportRow(claim_id, claim, None, _expected_value(expected),
                            _expected_source(expected), False, flagged, error,
                            wall_ms)
        elif flagged or expected is None:
            row = ReportRow(claim_id, claim, computed, _expected_value(expected),
                            _expected_source(expected), True, True, None, wall_ms)
        else:
            row = ReportRow(claim_id, claim, computed, expected.value,
                            expected.source, computed == expected.value,
                            False, None, wall_ms)
        self.rows.append(row)
        return row


def _expected_value(expected):
    return None if expected is None else expected.value


def _expected_source(expected):
    return "info" if expected is None else expected.source


def _validate_expected(instance: FamilyInstance):
    for claim_id, expected in instance.expected.items():
        if expected.source not in SOURCES:
            raise ToolkitError(
                f"expected value {claim_id!r} lacks provenance: {expected.source!r}"
            )
        if expected.source == "derived" and not expected.note:
            raise ToolkitError(
                f"derived expected value {claim_id!r} does not name its oracle"
            )


def _sample_parameters(instance, config):
    rng = random.Random(config.seed)
    samples = []
    for _ in range(config.samples):
        samples.append(
            sample_parameter_ideal(
                instance.ring, rng, inhomogeneous=config.inhomogeneous
            )
        )
    return samples


def _generation_identity(Q: IdealHandle, runner, expected, claim_id):
    ring = Q.ring
    d = ring_dimension(ring)
    I = colon(Q, maxideal(ring))

    def check():
        return min_generators(I) == relative_length(Q, I) + d

    runner.run(claim_id, "mu(Q:m) = len((Q:m)/Q) + dim", expected, check)


def _defect_rows(instance, runner, defects, flag_discrepancy=False):
    expected = instance.expected["parameter-defect-constancy"]
    runner.run(
        "parameter-defect-constancy",
        "number of distinct defects over the sampled parameter ideals",
        expected,
        lambda: len(set(defects)),
    )
    d = ring_dimension(instance.ring)
    if flag_discrepancy and d >= 2:
        runner.run(
            "buchsbaum-invariant-measured",
            f"measured defect; literature candidates disagree (d = {d} vs "
            f"d-1 = {d - 1}), no side chosen",
            None,
            lambda: defects[0],
            flagged=True,
        )


def _verify_section4(instance, config, runner):
    ring = instance.ring
    m, d = instance.params["m"], instance.params["d"]
    Q = instance.ideals["Q"]
    squares = instance.ideals["a-squares"]
    M = maxideal(ring)
    J = colon(Q, M)
    exp = instance.expected

    runner.run("quotient-colength", "len(A/Q) equals 2m+1",
               exp["quotient-colength"], lambda: length(Q))
    runner.run("reduction-multiplicity", "e(Q) equals 2m",
               exp["reduction-multiplicity"],
               lambda: multiplicity(Q, nmax=config.nmax))
    runner.run("ring-dimension", "dim A equals d", exp["ring-dimension"],
               lambda: ring_dimension(ring))
    runner.run("socle-ideal-form", "Q:m = Q + (x_i x_m | i < m) + (v)",
               exp["socle-ideal-form"],
               lambda: ideal_equal(J, instance.ideals["socle-form"]))
    runner.run("link-colength", "len(A/(Q:m)) equals m+1",
               exp["link-colength"], lambda: length(J))
    runner.run("square-equals-QI", "I^2 = QI for I = Q:m",
               exp["square-equals-QI"],
               lambda: ideal_equal(ideal_power(J, 2), ideal_product(Q, J)))
    runner.run("cube-equals-QI2", "I^3 = QI^2 for I = Q:m",
               exp["cube-equals-QI2"],
               lambda: ideal_equal(ideal_power(J, 3),
                                   ideal_product(Q, ideal_power(J, 2))))
    runner.run("stability-index", "least n with I^(n+1) = QI^n",
               exp["stability-index"],
               lambda: stability_index(J, Q, config.kmax))
    runner.run("squared-params-defect", "defect of (a_1^2..a_d^2) equals 1",
               exp["squared-params-defect"],
               lambda: buchsbaum_defect(squares, nmax=config.nmax))
    runner.run("squared-params-multiplicity", "e of (a_1^2..a_d^2)",
               exp["squared-params-multiplicity"],
               lambda: multiplicity(squares, nmax=config.nmax))
    runner.run("cube-reduction-identity", "M^3 = Q M^2",
               exp["cube-reduction-identity"],
               lambda: ideal_equal(ideal_power(M, 3),
                                   ideal_product(Q, ideal_power(M, 2))))

    def classified_depth():
        probe = depth_probe(ring, trials=config.depth_trials, seed=config.seed)
        if probe.bound == d:
            return d
        if probe.bound == d - 1 and buchsbaum_defect(Q) > 0:
            return d - 1
        return probe.bound  # sound lower bound; reported as-is

    runner.run("depth", "probe bound plus nonzero defect pins depth",
               exp["depth"], classified_depth)
    _generation_identity(Q, runner, exp["min-generation-identity"],
                         "min-generation-identity")

    defects = [buchsbaum_defect(Q, nmax=config.nmax)]
    for idx, sample in enumerate(_sample_parameters(instance, config), start=1):
        defects.append(buchsbaum_defect(sample, nmax=config.nmax))
        _generation_identity(sample, runner, exp["min-generation-identity"],
                             f"min-generation-identity-sample-{idx}")
    _defect_rows(instance, runner, defects)


def _verify_fiber(instance, config, runner):
    ring = instance.ring
    Q = instance.ideals["Q"]
    p1, p2 = instance.ideals["p1"], instance.ideals["p2"]
    M = maxideal(ring)
    exp = instance.expected

    runner.run("component-intersection-zero", "p1 meets p2 in (0)",
               exp["component-intersection-zero"],
               lambda: ideal_equal(intersect(p1, p2), zero_ideal(ring)))
    runner.run("component-product-zero", "p1 * p2 = (0)",
               exp["component-product-zero"],
               lambda: ideal_equal(ideal_product(p1, p2), zero_ideal(ring)))
    runner.run("ring-dimension", "dim A equals d", exp["ring-dimension"],
               lambda: ring_dimension(ring))
    runner.run("reduction-multiplicity", "e(Q) equals 2",
               exp["reduction-multiplicity"],
               lambda: multiplicity(Q, nmax=config.nmax))
    runner.run("stability-index", "I^2 = QI for the distinguished Q",
               exp["stability-index"],
               lambda: stability_index(colon(Q, M), Q, config.kmax))
    _generation_identity(Q, runner, exp["min-generation-identity"],
                         "min-generation-identity")

    defects = [buchsbaum_defect(Q, nmax=config.nmax)]
    for idx, sample in enumerate(_sample_parameters(instance, config), start=1):
        runner.run(f"stability-index-sample-{idx}",
                   "I^2 = QI for a sampled parameter ideal",
                   exp["stability-index"],
                   lambda s=sample: stability_index(colon(s, M), s, config.kmax))
        defects.append(buchsbaum_defect(sample, nmax=config.nmax))
        _generation_identity(sample, runner, exp["min-generation-identity"],
                             f"min-generation-identity-sample-{idx}")
    _defect_rows(instance, runner, defects, flag_discrepancy=True)


def _verify_field_extension(instance, config, runner):
    ring = instance.ring
    Q = instance.ideals["Q"]
    kernel = instance.ideals["kernel"]
    quadrics = instance.ideals["quadrics"]
    M = maxideal(ring)
    exp = instance.expected

    runner.run("kernel-contains-quadrics",
               "every forced quadric lies in the presentation kernel",
               exp["kernel-contains-quadrics"],
               lambda: all(is_member(q, kernel) for q in quadrics.gens))
    runner.run("ring-dimension", "dim A equals d", exp["ring-dimension"],
               lambda: ring_dimension(ring))
    runner.run("reduction-multiplicity", "e(A) equals the extension degree",
               exp["reduction-multiplicity"],
               lambda: multiplicity(Q, nmax=config.nmax))
    runner.run("max-square-reduction", "m^2 = Q m",
               exp["max-square-reduction"],
               lambda: ideal_equal(ideal_power(M, 2), ideal_product(Q, M)))
    runner.run("stability-index", "I^2 = QI for the distinguished Q",
               exp["stability-index"],
               lambda: stability_index(colon(Q, M), Q, config.kmax))
    _generation_identity(Q, runner, exp["min-generation-identity"],
                         "min-generation-identity")

    defects = [buchsbaum_defect(Q, nmax=config.nmax)]
    for idx, sample in enumerate(_sample_parameters(instance, config), start=1):
        runner.run(f"stability-index-sample-{idx}",
                   "I^2 = QI for a sampled parameter ideal",
                   exp["stability-index"],
                   lambda s=sample: stability_index(colon(s, M), s, config.kmax))
        defects.append(buchsbaum_defect(sample, nmax=config.nmax))
        _generation_identity(sample, runner, exp["min-generation-identity"],
                             f"min-generation-identity-sample-{idx}")
    _defect_rows(instance, runner, defects, flag_discrepancy=True)


def _verify_regular_param(instance, config, runner):
    ring = instance.ring
    exp = instance.expected
    if instance.params.get("ring") == "plane":
        M = maxideal(ring)
        runner.run("socle-closed-shape", "socle length of m/Qm for Q = (x, y^3)",
                   exp["socle-closed-shape"],
                   lambda: socle(ideal_product(instance.ideals["Q-closed"], M))[1])
        runner.run("socle-nonclosed-shape",
                   "socle length of m/Qm for Q = (x^2, y^2)",
                   exp["socle-nonclosed-shape"],
                   lambda: socle(ideal_product(instance.ideals["Q-nonclosed"], M))[1])
        runner.run("socle-linear-shape", "socle length of m/Qm for Q = (x, y)",
                   exp["socle-linear-shape"],
                   lambda: socle(ideal_product(instance.ideals["Q-linear"], M))[1])
        runner.run("cm-type", "type of the regular local ring",
                   exp["cm-type"],
                   lambda: cm_type(instance.ideals["Q-linear"]))
        runner.run("ring-multiplicity", "e(A) of the regular ring",
                   exp["ring-multiplicity"],
                   lambda: multiplicity(maxideal(ring), nmax=config.nmax))
    else:
        runner.run("stability-absent",
                   "no n has I^(n+1) = QI^n for Q = (x^2), I = (x)",
                   exp["stability-absent"],
                   lambda: stability_index(instance.ideals["I"],
                                           instance.ideals["Q"], config.kmax))


def _verify_semigroup(instance, config, runner):
    ring = instance.ring
    Q = instance.ideals["Q"]
    exp = instance.expected
    runner.run("ring-dimension", "dim A equals 1", exp["ring-dimension"],
               lambda: ring_dimension(ring))
    runner.run("parameter-defect", "defect of the reduction (x)",
               exp["parameter-defect"],
               lambda: buchsbaum_defect(Q, nmax=config.nmax))
    runner.run("reduction-multiplicity", "e(A) equals 3",
               exp["reduction-multiplicity"],
               lambda: multiplicity(Q, nmax=config.nmax))
    runner.run("cm-type", "socle length of (Q:m)/Q", exp["cm-type"],
               lambda: cm_type(Q))
    _generation_identity(Q, runner, exp["min-generation-identity"],
                         "min-generation-identity")


_VERIFIERS = {
    "section4": _verify_section4,
    "fiber-product": _verify_fiber,
    "field-extension": _verify_field_extension,
    "regular-param": _verify_regular_param,
    "semigroup-curve": _verify_semigroup,
}


def verify(instance: FamilyInstance, config: VerifyConfig | None = None) -> VerificationReport:
    """Measure every applicable claim on the instance and report rows with
    computed vs expected values and provenance."""
    config = config or VerifyConfig()
    _validate_expected(instance)
    rows: list = []
    runner = _RowRunner(rows)
    _VERIFIERS[instance.tag](instance, config, runner)
    return VerificationReport(
        version=__version__,
        instance={"family": instance.tag,
                  "params": {k: v for k, v in sorted(instance.params.items())}},
        characteristic=instance.ring.field.characteristic,
        seed=config.seed,
        rows=rows,
    )


def build_instances(family: str, m=None, d=None, char=101, minpoly=None):
    """Instances for a CLI family name; regular-param yields two."""
    if family == "section4":
        return [section4_ring(m if m is not None else 2,
                              d if d is not None else 1, char)]
    if family in ("fiber", "fiber-product"):
        return [fiber_product_ring(d if d is not None else 1, char)]
    if family in ("field-extension", "field-ext"):
        return [field_extension_ring(d if d is not None else 2, minpoly, char)]
    if family == "regular-param":
        return regular_param_scenarios(char)
    if family in ("semigroup", "semigroup-curve"):
        return [semigroup_curve_ring(char)]
    raise ValueError(f"unknown family {family!r}; known: {FAMILY_TAGS}")


def verify_family(family: str, config: VerifyConfig | None = None,
                  m=None, d=None, char=101, minpoly=None) -> VerificationReport:
    instances = build_instances(family, m=m, d=d, char=char, minpoly=minpoly)
    reports = [verify(instance, config) for instance in instances]
    if len(reports) == 1:
        return reports[0]
    merged = merge_reports(*reports)
    merged.instance = {"family": family,
                       "params": {"char": char}}
    return merged
