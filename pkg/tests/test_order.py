"""Monomial order axioms: totality, multiplicativity, 1 minimal."""

from hypothesis import given
from hypothesis import strategies as st

from socle_lab import DEGREVLEX, LEX, elimination_order
from socle_lab.polynomial import mon_mul

ORDERS = [DEGREVLEX, LEX, elimination_order(2)]

exps = st.tuples(*(st.integers(0, 6) for _ in range(4)))


@given(exps, exps)
def test_totality(u, v):
    for order in ORDERS:
        ku, kv = order.key(u), order.key(v)
        assert (ku < kv) or (kv < ku) or (u == v)


@given(exps, exps, exps)
def test_multiplicativity(u, v, w):
    for order in ORDERS:
        if order.key(u) < order.key(v):
            assert order.key(mon_mul(u, w)) < order.key(mon_mul(v, w))


@given(exps)
def test_one_minimal(u):
    one = (0, 0, 0, 0)
    for order in ORDERS:
        if u != one:
            assert order.key(one) < order.key(u)


def test_elimination_block_dominates():
    order = elimination_order(2)
    # any monomial touching the first block beats any block-free monomial
    assert order.key((1, 0, 0, 0)) > order.key((0, 0, 9, 9))
    assert order.key((0, 1, 0, 0)) > order.key((0, 0, 1, 0))


def test_degrevlex_examples():
    # x^2 beats x*y at equal degree; degree dominates otherwise
    assert DEGREVLEX.key((2, 0)) > DEGREVLEX.key((1, 1))
    assert DEGREVLEX.key((0, 3)) > DEGREVLEX.key((1, 0))
    assert LEX.key((1, 0)) > LEX.key((0, 3))
