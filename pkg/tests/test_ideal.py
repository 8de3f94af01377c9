import random

import pytest

from socle_lab import (
    GF,
    QQ,
    IdealHandle,
    Ring,
    colon,
    combine,
    eliminate,
    fiber_product_ring,
    ideal_equal,
    ideal_power,
    ideal_product,
    ideal_sum,
    intersect,
    is_member,
    is_origin_primary,
    krull_dimension,
    maxideal,
    section4_ring,
    subalgebra_presentation,
    zero_ideal,
)
from conftest import random_ideal, random_polynomial

F101 = GF(101)


def _strs(handle):
    return {str(p) for p in handle.basis().polys}


# -- combine -------------------------------------------------------------------


def test_sum_product_power_examples(qq_xy):
    x, y = qq_xy.var("x"), qq_xy.var("y")
    assert _strs(ideal_sum(qq_xy.ideal(x), qq_xy.ideal(y))) == {"x", "y"}
    m = qq_xy.ideal(x, y)
    assert _strs(ideal_product(m, m)) == {"x^2", "x*y", "y^2"}
    assert _strs(combine("power", m, 2)) == {"x^2", "x*y", "y^2"}


def test_power_zero_rejected(qq_xy):
    with pytest.raises(ValueError, match="unit ideal"):
        ideal_power(qq_xy.ideal("x"), 0)


def test_section4_square_identity():
    """J^2 = QJ + (v^2) in the m=2, d=1 quotient."""
    inst = section4_ring(2, 1, char=101)
    R = inst.ring
    Q = inst.ideals["Q"]
    J = colon(Q, maxideal(R))
    left = ideal_power(J, 2)
    right = ideal_sum(ideal_product(Q, J), R.ideal("v^2"))
    assert ideal_equal(left, right)


def test_power_generators_deduplicated(qq_xy):
    m = qq_xy.ideal("x", "y", "x")  # duplicate dropped at construction
    assert len(m.gens) == 2
    cube = ideal_power(m, 3)
    assert len(cube.gens) == 4  # monomials x^3, x^2 y, x y^2, y^3


# -- intersect ------------------------------------------------------------------


def test_intersect_examples(qq_xy):
    assert _strs(intersect(qq_xy.ideal("x"), qq_xy.ideal("y"))) == {"x*y"}
    got = intersect(qq_xy.ideal("x^2", "y"), qq_xy.ideal("x"))
    assert _strs(got) == {"x^2", "x*y"}


def test_intersect_derived_example_against_membership_oracle(f101_xy):
    """(x^2, y) ∩ (x) = (x^2, xy), confirmed monomial by monomial."""
    from oracles import macaulay_member

    A = f101_xy.ideal("x^2", "y")
    B = f101_xy.ideal("x")
    got = intersect(A, B)
    x, y = f101_xy.var("x"), f101_xy.var("y")
    for mono in (x * x, x * y, x * x * y, x * x * x):
        expected = macaulay_member(mono, list(A.gens)) and macaulay_member(
            mono, list(B.gens)
        )
        assert is_member(mono, got) == expected
    assert not is_member(x, got)


def test_fiber_component_intersection_is_zero():
    inst = fiber_product_ring(2, char=101)
    meet = intersect(inst.ideals["p1"], inst.ideals["p2"])
    assert ideal_equal(meet, zero_ideal(inst.ring))


def test_intersect_symmetry_and_containment():
    rng = random.Random(31)
    R = Ring(("x", "y"), F101)
    for _ in range(6):
        I = random_ideal(R, rng, ngens=2, max_degree=2)
        J = random_ideal(R, rng, ngens=2, max_degree=2)
        left = intersect(I, J)
        right = intersect(J, I)
        assert ideal_equal(left, right)
        assert left.basis() == right.basis()
        for g in left.gens:
            assert is_member(g, I) and is_member(g, J)


# -- colon ----------------------------------------------------------------------


def test_colon_examples(qq_xy):
    assert _strs(colon(qq_xy.ideal("x^2"), qq_xy.ideal("x"))) == {"x"}


def test_colon_fiber_link():
    inst = fiber_product_ring(1, char=0)
    R = inst.ring
    link = colon(R.ideal("x1 + y1"), maxideal(R))
    assert ideal_equal(link, maxideal(R))


def test_colon_section4_socle_form():
    inst = section4_ring(2, 1, char=101)
    R = inst.ring
    J = colon(inst.ideals["Q"], maxideal(R))
    assert ideal_equal(J, inst.ideals["socle-form"])


def test_colon_by_zero_rejected(qq_xy):
    with pytest.raises(ValueError, match="colon by zero ideal"):
        colon(qq_xy.ideal("x"), zero_ideal(qq_xy))


def test_colon_of_containing_ideal_is_unit(qq_xy):
    result = colon(qq_xy.ideal("x"), qq_xy.ideal("x"))
    assert result.is_unit


def test_colon_containment_property():
    """product(colon(I, J), J) ⊆ I on 50 random small ideals."""
    rng = random.Random(404)
    R = Ring(("x", "y"), F101)
    for _ in range(50):
        I = random_ideal(R, rng, ngens=2, max_degree=2)
        J = random_ideal(R, rng, ngens=2, max_degree=2)
        if ideal_equal(J, zero_ideal(R)):
            continue
        Q = colon(I, J)
        for f in Q.gens:
            for g in J.gens:
                assert is_member(f * g, I)
        # extensivity: I ⊆ colon(I, J)
        for f in I.gens:
            assert is_member(f, Q)


def test_colon_extensivity_by_single_element(qq_xy):
    I = qq_xy.ideal("x^2", "x*y")
    by_f = colon(I, qq_xy.ideal("y"))
    for g in I.gens:
        assert is_member(g, by_f)


# -- eliminate ------------------------------------------------------------------


def test_eliminate_examples():
    R = Ring(("t", "x"), QQ)
    assert eliminate(R.ideal("t*x - 1"), ["t"]).basis().is_zero_ideal

    R2 = Ring(("t", "x", "y"), QQ)
    got = eliminate(R2.ideal("t*x", "(1 - t)*y"), ["t"])
    assert _strs(got) == {"x*y"}

    R3 = Ring(("t", "p", "q"), QQ)
    cusp = eliminate(R3.ideal("p - t^2", "q - t^3"), ["t"])
    assert _strs(cusp) == {"p^3 - q^2"}


def test_eliminate_soundness():
    """Every returned generator lies in the original ideal."""
    rng = random.Random(77)
    R = Ring(("t", "x", "y"), F101)
    for _ in range(6):
        I = random_ideal(R, rng, ngens=2, max_degree=2)
        small = eliminate(I, ["t"])
        for g in small.gens:
            lifted = R.poly(str(g))
            assert is_member(lifted, I)


def test_eliminate_validates_variables(qq_xy):
    with pytest.raises(ValueError):
        eliminate(qq_xy.ideal("x"), ["nope"])
    with pytest.raises(ValueError):
        eliminate(qq_xy.ideal("x"), ["x", "y"])


# -- dimension ------------------------------------------------------------------


def test_krull_dimension_examples(qq_xy):
    assert krull_dimension(zero_ideal(qq_xy)) == 2
    inst = section4_ring(2, 1, char=101)
    assert krull_dimension(zero_ideal(inst.ring)) == 1
    fib = fiber_product_ring(2, char=101)
    assert krull_dimension(zero_ideal(fib.ring)) == 2


def test_krull_dimension_unit_rejected(qq_xy):
    with pytest.raises(ValueError, match="unit ideal"):
        krull_dimension(qq_xy.ideal("1"))


def test_origin_primary_dimension_zero(f101_xy):
    J = f101_xy.ideal("x^2", "y^3")
    assert is_origin_primary(J)
    assert krull_dimension(J) == 0


# -- origin-primary gate ----------------------------------------------------------


def test_is_origin_primary_examples(qq_xy):
    assert is_origin_primary(qq_xy.ideal("x^2", "y^3"))
    assert not is_origin_primary(qq_xy.ideal("x"))
    assert is_origin_primary(qq_xy.ideal("x*y", "x + y"))


def test_origin_primary_rejects_displaced_points(qq_xy):
    # finite-dimensional quotient supported away from the origin
    J = qq_xy.ideal("x - 1", "y")
    assert not is_origin_primary(J)


def test_propagated_verdicts_match_direct_computation(f101_xy):
    rng = random.Random(5)
    base = f101_xy.ideal("x^2", "x*y", "y^3")
    assert is_origin_primary(base)
    square = ideal_power(base, 2)
    assert square._origin_primary is True  # propagated, not recomputed
    fresh = IdealHandle(f101_xy, square.gens)
    assert is_origin_primary(fresh)  # direct computation agrees


# -- subalgebra presentation ------------------------------------------------------


def test_subalgebra_presentation_examples():
    Rx = Ring(("x",), QQ)
    assert subalgebra_presentation(Rx, [Rx.var("x")], ("p",)).basis().is_zero_ideal

    Rt = Ring(("t",), QQ)
    t = Rt.var("t")
    cusp = subalgebra_presentation(Rt, [t**2, t**3], ("p", "q"))
    assert _strs(cusp) == {"p^3 - q^2"}


def test_subalgebra_presentation_restriction_of_scalars():
    """d=2 quadratic extension u^2 = -1: the four classical quadrics."""
    target_ambient = Ring(("x1", "x2", "u"), QQ)
    target = target_ambient.quotient([target_ambient.poly("u^2 + 1")])
    u = target_ambient.var("u")
    x1, x2 = target_ambient.var("x1"), target_ambient.var("x2")
    kernel = subalgebra_presentation(
        target, [x1, x2, u * x1, u * x2], ("y1", "y2", "z1", "z2")
    )
    amb = kernel.ring
    for text in ("y1^2 + z1^2", "y2^2 + z2^2", "y1*y2 + z1*z2", "y1*z2 - y2*z1"):
        assert is_member(amb.poly(text), kernel)
        # each relation vanishes under the substitution y -> x, z -> u x
        poly = amb.poly(text)
        images = [x1, x2, u * x1, u * x2]
        substituted = poly.evaluate(images)
        assert is_member(substituted, IdealHandle(target_ambient,
                                                  target.defining))
