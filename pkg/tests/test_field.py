"""Exact arithmetic in the cyclotomic real subfields and their quadratic
extensions: axioms, embeddings, square roots, minimal polynomials."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from reflect3.errors import BadInput, FieldError
from reflect3.field import (CycloBase, cyclotomic_poly, make_field,
                            minpoly_cos, sqrt_in_field, two_cos)

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=12)


def elem_strategy(field):
    deg = field.base.degree
    coords = st.tuples(*([rationals] * deg))
    if field.ncomp == 1:
        return coords.map(lambda t: field.from_base(t))
    return st.tuples(coords, coords).map(
        lambda ab: field.from_base(ab[0]) + field.from_base(ab[1]) * field.gen())


F12 = make_field(12)
F12X = make_field(12, Fraction(-1))
F8 = make_field(8)


@given(x=elem_strategy(F12), y=elem_strategy(F12), z=elem_strategy(F12))
@settings(max_examples=60, deadline=None)
def test_ring_axioms_base(x, y, z):
    assert x + y == y + x
    assert (x + y) + z == x + (y + z)
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + (-x) == F12.zero()


@given(x=elem_strategy(F12X), y=elem_strategy(F12X), z=elem_strategy(F12X))
@settings(max_examples=40, deadline=None)
def test_ring_axioms_extension(x, y, z):
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z


@given(x=elem_strategy(F12))
@settings(max_examples=40, deadline=None)
def test_multiplicative_inverse(x):
    if not x:
        with pytest.raises(FieldError):
            x.inv()
        return
    assert x * x.inv() == F12.one()
    assert (x / x) == F12.one()


@given(x=elem_strategy(F12X))
@settings(max_examples=40, deadline=None)
def test_extension_inverse_and_sigma(x):
    # sigma negates the adjoined square root and fixes the base
    s = x.sigma()
    assert s.sigma() == x
    norm = x * s
    assert norm.base_part()[1] == F12X.base.zero()
    if x:
        assert x * x.inv() == F12X.one()


@given(x=elem_strategy(F8), y=elem_strategy(F8))
@settings(max_examples=50, deadline=None)
def test_embedding_is_homomorphism(x, y):
    for j in range(F8.base.degree):
        ex, ey = x.embed(j), y.embed(j)
        assert abs((x + y).embed(j) - (ex + ey)) < 1e-9
        assert abs((x * y).embed(j) - ex * ey) < 1e-9


def test_generator_squares_to_declared_value():
    th = F12X.gen()
    assert th * th == F12X.from_rational(-1)
    f2 = make_field(3, Fraction(2))
    assert f2.gen() * f2.gen() == f2.from_rational(2)


def test_make_field_rejects_square_extension():
    # 2 = (2cos(pi/4))^2 already lives in the n=4 base
    with pytest.raises(BadInput):
        make_field(4, Fraction(2))


def test_two_cos_values():
    b = CycloBase(12)
    # 2cos(pi/3) = 1, 2cos(pi/2) = 0, 2cos(pi/6) = sqrt(3)
    assert b.embed(two_cos(b, 4)) == pytest.approx(1.0)
    assert b.embed(two_cos(b, 6)) == pytest.approx(0.0)
    assert b.embed(two_cos(b, 2)) == pytest.approx(math.sqrt(3.0))
    assert two_cos(b, 0) == b.from_rational(2)


def test_cyclotomic_poly_known_values():
    assert cyclotomic_poly(1) == (-1, 1)
    assert cyclotomic_poly(2) == (1, 1)
    assert cyclotomic_poly(4) == (1, 0, 1)
    assert cyclotomic_poly(12) == (1, 0, -1, 0, 1)
    with pytest.raises(BadInput):
        cyclotomic_poly(0)


@pytest.mark.parametrize("n", range(1, 31))
def test_minpoly_cos_annihilates_numeric_root(n):
    coeffs = minpoly_cos(n)
    assert coeffs[-1] == 1  # monic
    x = 2.0 * math.cos(math.pi / n)
    val = 0.0
    for c in reversed(coeffs):
        val = val * x + float(c)
    assert abs(val) < 1e-10


def test_minpoly_cos_degree_matches_field_degree():
    for n in (3, 4, 5, 6, 8, 12):
        assert len(minpoly_cos(n)) - 1 == CycloBase(n).degree


def test_sqrt_in_field_finds_square():
    # sqrt_in_field takes base coordinates: find sqrt of c^2 = 2 + sqrt(2)
    f = make_field(8)
    csq = (f.c() * f.c()).base_part()[0]
    r = sqrt_in_field(f, csq)
    assert r is not None and r * r == f.c() * f.c()
    # 2 is not a square in Q, but is in Q(sqrt 2) = Q(2cos(pi/4))
    f4 = make_field(4)
    r2 = sqrt_in_field(f4, f4.base.from_rational(2))
    assert r2 is not None and r2 * r2 == f4.from_rational(2)
    # in the extension by theta^2 = -1, -1 acquires a root
    fx = make_field(3, Fraction(-1))
    r3 = sqrt_in_field(fx, fx.base.from_rational(-1))
    assert r3 is not None and r3 * r3 == fx.from_rational(-1)


def test_sqrt_in_field_rejects_nonsquare():
    f = make_field(3)  # base is Q
    assert sqrt_in_field(f, f.base.from_rational(-1)) is None
    assert sqrt_in_field(f, f.base.from_rational(2)) is None


def test_rational_detection():
    f = make_field(12, Fraction(-1))
    x = f.from_rational(Fraction(7, 3))
    assert x.is_rational() and x.as_fraction() == Fraction(7, 3)
    assert not f.c().is_rational()
    with pytest.raises(FieldError):
        f.gen().as_fraction()


def test_same_structure():
    assert make_field(12).same_structure(make_field(12))
    assert not make_field(12).same_structure(make_field(8))
    assert not make_field(12).same_structure(make_field(12, Fraction(-1)))


def test_fmt_roundtrip_readability():
    f = make_field(12)
    x = f.c() * f.c() - f.from_rational(1)
    s = f.fmt(x)
    assert "c" in s
    assert f.fmt(f.zero()) == "0"
