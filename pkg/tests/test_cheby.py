from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from reflect3.cheby import (eval_poly, halfturn_identities,
                            is_exact_rotation_order, rotation_order, u_eval,
                            u_poly)
from reflect3.errors import BadInput


def test_u_poly_low_degrees():
    assert u_poly(0) == ()
    assert u_poly(1) == (Fraction(1),)
    assert u_poly(2) == (Fraction(1),)
    assert u_poly(3) == (Fraction(-1), Fraction(1))


@given(n=st.integers(min_value=1, max_value=18),
       x=st.fractions(min_value=-9, max_value=9, max_denominator=4))
@settings(max_examples=80, deadline=None)
def test_recurrence(n, x):
    assert u_eval(n + 2, x) == (x - 2) * u_eval(n, x) - u_eval(n - 2, x)


def test_boundary_values():
    assert u_eval(-1, Fraction(7)) == -1
    assert u_eval(0, Fraction(7)) == 0
    with pytest.raises(BadInput):
        u_poly(-2)


def test_rotation_orders_at_dihedral_values():
    # x = 2 + 2cos(2 pi / n) vanishes u_n first
    assert rotation_order(Fraction(1)) == 3   # (3,3,3) parameter
    assert rotation_order(Fraction(2)) == 4
    assert rotation_order(Fraction(3)) == 6
    assert rotation_order(Fraction(4)) is None
    assert rotation_order(Fraction(5)) is None


def test_is_exact_rotation_order():
    assert is_exact_rotation_order(Fraction(3), 6)
    assert not is_exact_rotation_order(Fraction(3), 12)
    assert not is_exact_rotation_order(Fraction(1), 6)
    with pytest.raises(BadInput):
        is_exact_rotation_order(Fraction(1), 0)


def test_eval_poly_horner():
    assert eval_poly((Fraction(1), Fraction(2), Fraction(3)), Fraction(2)) == 17
    assert eval_poly((), Fraction(5)) == 0


@pytest.mark.parametrize("x,p", [(Fraction(2), 4), (Fraction(3), 6),
                                 (Fraction(1), 3)])
def test_halfturn_identities_hold_at_exact_orders(x, p):
    if p % 2:
        with pytest.raises(BadInput):
            halfturn_identities(x, p)
        return
    for name, lhs, rhs in halfturn_identities(x, p):
        assert lhs == rhs, name
