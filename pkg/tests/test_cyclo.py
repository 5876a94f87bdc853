import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pentadyn.cyclo import (
    Cyclo,
    QuadReal,
    ReduciblePolynomialError,
    digits,
    embed,
    from_lozenge_coordinates,
    galois,
    imag_over_sin72,
    is_pisot,
    is_unit,
    lozenge_coordinates,
    omega,
    parse_cyclo,
    real_part_quad,
    root_moduli_classes,
    sign_imag,
    sign_real,
    zeta,
)

from conftest import cyclo5, unit_coordinate

Z = complex(math.cos(2 * math.pi / 5), math.sin(2 * math.pi / 5))
W = (1 + math.sqrt(5)) / 2


def test_zeta_order_and_golden_ratio():
    z = zeta()
    assert z ** 5 == 1
    assert z != 1
    w = omega()
    assert w * w == w + 1
    assert w == -(z ** 2 + z ** 3)
    assert abs(complex(w) - W) < 1e-12


def test_digits_values():
    d = digits()
    expect = [0, 1, Z, Z / W, -1 / (W * Z ** 2), -1 / (W * Z)]
    for got, want in zip(d, expect):
        assert abs(complex(got) - want) < 1e-12


@given(cyclo5(), cyclo5(), cyclo5())
@settings(max_examples=60)
def test_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    if not a.is_zero():
        assert a * a.inverse() == 1
        assert (b / a) * a == b


@given(cyclo5(), cyclo5())
@settings(max_examples=60)
def test_embedding_is_a_ring_map(a, b):
    assert abs(complex(a * b) - complex(a) * complex(b)) < 1e-9
    assert abs(complex(a + b) - complex(a) - complex(b)) < 1e-9


@given(cyclo5())
@settings(max_examples=60)
def test_galois_is_multiplicative_and_fixes_q(a):
    b = a * a + 1
    assert galois(a * b, 2) == galois(a, 2) * galois(b, 2)
    assert galois(Cyclo.from_rational(5, Fraction(3, 7)), 2) == Fraction(3, 7)


def test_galois_of_omega_and_dual_digit():
    w = omega()
    assert galois(w, 2) == -w.inverse()
    # phi(zeta/omega) = -omega zeta^2
    assert galois(digits()[3], 2) == -w * zeta() ** 2


@given(unit_coordinate(), unit_coordinate())
@settings(max_examples=80)
def test_lozenge_coordinates_round_trip(s, t):
    x = from_lozenge_coordinates(s, t)
    assert lozenge_coordinates(x) == (s, t)
    assert abs(complex(x) - (float(s) - float(t) / Z)) < 1e-9


@given(cyclo5())
@settings(max_examples=60)
def test_exact_signs_match_floats(a):
    c = complex(a)
    if abs(c.real) > 1e-9:
        assert sign_real(a) == (1 if c.real > 0 else -1)
    if abs(c.imag) > 1e-9:
        assert sign_imag(a) == (1 if c.imag > 0 else -1)
    assert abs(float(real_part_quad(a)) - c.real) < 1e-9
    assert abs(float(imag_over_sin72(a)) * math.sin(2 * math.pi / 5) - c.imag) < 1e-9


def test_signs_for_other_orders():
    for n in (7, 9):
        z = Cyclo.zeta(n)
        assert sign_imag(z) == 1
        assert sign_imag(z.conjugate()) == -1
        assert sign_imag(z + z.conjugate()) == 0
        assert sign_real(Cyclo.zeta(n, n // 2)) == -1


def test_embed_encloses_value():
    a = Cyclo(5, [Fraction(1, 3), 2, -1, Fraction(5, 7)])
    re, im = embed(a, 80)
    c = complex(a)
    assert float(re.delta) < 1e-20 and float(im.delta) < 1e-20
    assert abs(float(re.mid) - c.real) < 1e-12
    assert abs(float(im.mid) - c.imag) < 1e-12


def test_quadreal_order_and_floor():
    w = QuadReal.omega()
    assert QuadReal(1) < w < QuadReal(2)
    assert (w * 3).floor() == 4
    assert (-w).floor() == -2
    assert (w * 5).frac() == w * 5 - 8
    assert w.conjugate() == 1 - w


def test_parse_forms():
    assert parse_cyclo("1/3") == Fraction(1, 3)
    assert parse_cyclo("zeta^-1") == zeta() ** -1
    assert parse_cyclo("-2*z^-1/3") == -2 * zeta() ** -1 / 3
    assert parse_cyclo("1/4,1,1/2,1/2") == Cyclo(5, [Fraction(1, 4), 1, Fraction(1, 2), Fraction(1, 2)])
    assert parse_cyclo("omega**2") == omega() + 1
    with pytest.raises((ValueError, SyntaxError)):
        parse_cyclo("import os")


def test_pisot_and_unit():
    assert is_pisot([1, -1, -1])
    assert is_unit([1, -1, -1])
    assert not is_pisot([1, 0, -2])  # sqrt 2 has conjugate -sqrt 2
    assert not is_pisot([1, -1, 1])  # complex roots on the unit circle
    assert not is_unit([1, 0, -2])
    assert root_moduli_classes([1, -3, 0, 1]).count(1) == 1
    with pytest.raises(ReduciblePolynomialError):
        is_pisot([1, 0, -1])


@given(st.integers(2, 30))
def test_integer_polynomial_not_pisot_when_reducible(k):
    with pytest.raises(ReduciblePolynomialError):
        is_pisot([1, -(k + 1), k])  # (x - 1)(x - k)
