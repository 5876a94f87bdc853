import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pentadyn.cyclo import Cyclo, galois, omega, zeta
from pentadyn.dynamics import NotInDomainError, step_S, step_T, step_Ttilde
from pentadyn.fractal import in_dual_cover
from pentadyn.odometer import (
    Dyadic,
    NaturalExtensionPoint,
    PeriodicPointError,
    add_one,
    additive_diagram_suite,
    address_of_dyadic,
    drop_digit,
    drop_digit_mismatches,
    iota,
    iota_inv,
    is_cutpoint_address,
    is_open_edge_address,
    multiplicative_diagram_suite,
    natural_extension_step,
    natural_extension_suite,
    phi_map,
    phi_prime,
    pure_periodicity_test,
    random_dyadic,
    rho,
    rho_hat,
)
from pentadyn.symbolic import Lasso, eval_address

dyadics = st.builds(lambda p, q: Dyadic(Fraction(p, 2 * q + 1)), st.integers(-500, 500), st.integers(0, 40))


def test_add_one_carries():
    minus_one = Dyadic.parse("|3")  # ...3333 in base 4
    assert minus_one.value == -1
    assert add_one(minus_one) == Dyadic(0)
    assert str(add_one(Dyadic.parse("33|0"))) == "001|0"


def test_dyadic_rejects_even_denominators():
    with pytest.raises(ValueError):
        Dyadic(Fraction(1, 2))
    with pytest.raises(ValueError):
        Dyadic.from_digits([1], [])


@given(dyadics)
def test_digits_round_trip(x):
    u, v = x.digits
    assert Dyadic.from_digits(u, v) == x
    assert Dyadic.parse(str(x)) == x


def test_iota_table_rows():
    assert iota("|0") == Dyadic(0)  # the sigma0 fixed point
    assert iota("|3") == Dyadic(1)  # -3333... in base 4
    assert iota("2|3") == -Dyadic.parse("2|3")
    assert iota_inv(Dyadic(1)) == Lasso("", "3")


@given(dyadics)
def test_iota_inverse(x):
    assert iota(iota_inv(x)) == x


def test_drop_digit_example_and_rho():
    x = Dyadic.parse("2|3")
    assert drop_digit(x) == Dyadic.parse("|3")
    # rho is the shift of the multiplicative coding read through iota
    assert rho(x) == Dyadic(0)
    assert rho(x) == -drop_digit(-x)


@given(dyadics)
def test_rho_is_conjugate_shift(x):
    assert rho(x) == iota(Lasso(*_shift(iota_inv(x))))


def _shift(lasso):
    if lasso.u:
        return lasso.u[1:], lasso.v
    return "", lasso.v[1:] + lasso.v[:1]


def test_drop_digit_is_not_the_renormalisation():
    assert drop_digit_mismatches(40, seed=0) > 0


def test_phi_of_small_integers():
    assert phi_map(Dyadic(0)) == 0
    y = phi_map(Dyadic(1))
    w2 = omega() ** 2
    assert y == zeta(5, 5) / w2 * y + (-1 / (omega() * zeta()))
    assert address_of_dyadic(Dyadic(1)) == Lasso("", "5")


@given(dyadics)
@settings(max_examples=40, deadline=None)
def test_phi_uses_address(x):
    assert phi_map(x) == eval_address(address_of_dyadic(x))


def test_cut_point_classes():
    assert is_cutpoint_address(Lasso("53", "0"))
    assert not is_cutpoint_address(Lasso("", "0235"))
    assert is_open_edge_address(Lasso("2", "0"))
    assert not is_open_edge_address(Lasso("", "0235"))


@pytest.mark.parametrize("suite", [additive_diagram_suite, multiplicative_diagram_suite,
                                   natural_extension_suite])
def test_diagrams_exact_off_open_edges(suite):
    report = suite(samples=60, seed=4, avoid_cutpoints=True)
    assert report["exact_passes"] == 60
    assert not report["failures"] and not report["cutpoint_exceptions"]


@pytest.mark.parametrize("suite", [additive_diagram_suite, multiplicative_diagram_suite])
def test_diagram_exceptions_are_open_edge_points(suite):
    report = suite(samples=60, seed=2)
    assert not report["failures"]
    assert report["exact_passes"] + len(report["cutpoint_exceptions"]) == 60


def test_additive_diagram_single_point():
    x = Dyadic(Fraction(1, 3))
    assert phi_map(add_one(x)) == step_Ttilde(phi_map(x))
    assert phi_map(rho(x)) == step_S(phi_map(x))


def test_phi_prime_and_natural_extension():
    assert phi_prime(Fraction(0)) == 0
    with pytest.raises(ValueError):
        phi_prime(Fraction(1))
    origin = NaturalExtensionPoint(Cyclo.zero(), Cyclo.zero())
    assert natural_extension_step(origin) == origin
    x = Dyadic(Fraction(1, 3))
    y = Fraction(5, 16)
    x2, y2 = rho_hat(x, y)
    lhs = NaturalExtensionPoint(phi_map(x2), phi_prime(y2))
    assert lhs == natural_extension_step(NaturalExtensionPoint(phi_map(x), phi_prime(y)))
    with pytest.raises(ValueError):
        natural_extension_step(NaturalExtensionPoint(phi_map(x), phi_prime(y)), m=4)


def test_purity_of_the_orbit_of_one_third():
    report = pure_periodicity_test(step_T(Fraction(1, 3)))
    assert report.purely_periodic and report.cycle == 4
    assert report.dual_inside and report.dual_depth == 8
    report = pure_periodicity_test(Fraction(1, 3))
    assert not report.purely_periodic and report.preperiod == 2
    assert report.to_json()["preperiod"] == 2


def test_purity_of_the_d5_fixed_point():
    y = phi_map(Dyadic(1))
    # the (d5)^inf point is -zeta^-1, the excluded corner of L
    assert y == -zeta(5, -1)
    with pytest.raises(NotInDomainError):
        pure_periodicity_test(y)
    assert in_dual_cover(galois(y, 2), 8) == (True, 8)


def test_periodic_points_are_rejected():
    with pytest.raises(PeriodicPointError):
        pure_periodicity_test(Fraction(1, 2))


def test_random_dyadic_deterministic():
    a = [random_dyadic(random.Random(7)) for _ in range(3)]
    b = [random_dyadic(random.Random(7)) for _ in range(3)]
    assert a == b
