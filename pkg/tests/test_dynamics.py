from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pentadyn.cyclo import Cyclo, QuadReal, digits, from_lozenge_coordinates, omega, parse_cyclo, zeta
from pentadyn.dynamics import (
    APERIODIC,
    NotInDomainError,
    Undefined,
    classify,
    enumerate_B,
    first_hit_U,
    first_return_Lprime,
    orbit_T,
    period,
    recurrence_check,
    sample_L,
    self_inducing_check,
    step_S,
    step_T,
    step_T_inv,
    step_Ttilde,
    ttilde_itinerary,
)
from pentadyn.regions import named_region

from conftest import unit_coordinate


def point(s, t):
    return from_lozenge_coordinates(s, t)


def test_T_on_the_two_pieces():
    z = zeta()
    x = Fraction(1, 3)  # in the trapezoid
    assert step_T(x) == (Cyclo.from_rational(5, x) - 1) / z
    y = z / 2  # on the closed edge of the triangle
    assert step_T(y) == y / z


def test_T_rejects_points_outside_L():
    with pytest.raises(NotInDomainError):
        step_T(Cyclo.one())
    with pytest.raises(NotInDomainError):
        step_T(-Fraction(1, 4))


@given(unit_coordinate(), unit_coordinate())
@settings(max_examples=100, deadline=None)
def test_T_is_a_bijection(s, t):
    x = point(s, t)
    y = step_T(x)
    assert named_region("L").contains(y)
    assert step_T_inv(y) == x


def test_fixed_point_and_period_five_centre():
    assert step_T(Cyclo.zero()) == 0
    c = 1 / (1 - zeta())  # centre of P0, fixed by the trapezoid rotation
    assert step_T(c) == c and period(c) == 1
    y = c + Fraction(1, 50)
    assert period(y) == 5


def test_classify_one_third():
    cert = classify(Fraction(1, 3))
    assert cert.kind == "Aperiodic"
    w2 = omega() ** 2
    assert cert.s_orbit[1] == w2 / 3
    assert (cert.preperiod, cert.cycle) == (2, 4)
    assert step_S(cert.s_orbit[5]) == cert.s_orbit[2]  # S^6 = S^2
    assert cert.verify()
    assert period(Fraction(1, 3)) is APERIODIC


def test_classify_zero_is_fixed():
    cert = classify(0)
    assert cert.periodic and cert.period == 1
    assert cert.verify()


def test_classify_half_lattice():
    for x in enumerate_B(2):
        cert = classify(x)
        assert cert.periodic, x
        assert cert.verify()
        assert orbit_T(x, cert.period)[-1] == x


def test_certificate_json():
    data = classify(Fraction(1, 3)).to_json()
    assert data["schema"] == 1 and data["kind"] == "Aperiodic"
    assert data["preperiod"] == 2 and data["cycle"] == 4


def test_first_hit_closed_form_and_undefined():
    x = Fraction(1, 3)
    h = first_hit_U(x)
    assert h.value == (Cyclo.from_rational(5, x) - digits()[h.steps]) / zeta(5, h.steps)
    assert first_hit_U(1 / (1 - zeta())) is Undefined
    assert step_S(1 / (1 - zeta())) is Undefined


def test_return_times_on_cells():
    samples = [x for x in sample_L(3000, seed=5) if named_region("Lprime").contains(x)]
    w2 = omega() ** -2
    samples += [x * w2 for x in sample_L(600, seed=6)]
    seen = set()
    for x in samples:
        _, m = first_return_Lprime(x)
        seen.add(m)
        if named_region("Triangle1").contains(x):
            assert m == 1
        elif named_region("Deltaprime").contains(x):
            assert m == 3
        elif named_region("D").contains(x):
            assert m == 6
        else:
            assert m == 1
    assert seen == {1, 3, 6}


def test_self_inducing_holds_off_the_period_pentagon():
    p0 = named_region("P0")
    for x in sample_L(2000, seed=1):
        first, second = self_inducing_check(x)
        if p0.contains(x):
            continue
        assert first
        assert second in (True, None)


def test_self_inducing_fails_exactly_inside_p0():
    # on the return-time-3 cell the first return turns by zeta^-3, not zeta^-1
    c = 1 / (1 - zeta())
    failures = []
    for x in sample_L(2000, seed=1) + [c + Fraction(1, 50)]:
        first, second = self_inducing_check(x)
        if not first or second is False:
            failures.append(x)
    assert failures
    assert all(named_region("P0").contains(x) for x in failures)
    assert self_inducing_check(c) == (True, True)


def test_ttilde_letters_and_domain():
    x = parse_cyclo("-2*z^-1/3")
    word = ttilde_itinerary(x, 20)
    assert set(word) <= {"a", "b"}
    y = x
    for letter in word[:5]:
        y2 = step_Ttilde(y)
        assert (y2 == step_T(step_T(y))) == (letter == "a")
        y = y2
    with pytest.raises(NotInDomainError):
        step_Ttilde(step_T(zeta() / 2))  # T(Delta) is outside T(Z)


def test_recurrence_matches_orbit():
    for a0, a1 in [(0, 0), (1, 0), (3, -2), (7, 5)]:
        r = recurrence_check(a0, a1)
        assert r.agree, (a0, a1, r)


def test_sample_L_has_boundary_points():
    pts = sample_L(400, seed=2)
    assert len(pts) == 400
    on_edge = [x for x in pts if named_region("L").polygon.contains_closure(x)
               and not named_region("L").polygon.contains_interior(x)]
    assert on_edge
    assert sample_L(50, seed=9) == sample_L(50, seed=9)



@given(st.integers(-10 ** 9, 10 ** 9))
def test_integer_floor_of_omega_multiple(v):
    from pentadyn.dynamics import _floor_omega

    assert _floor_omega(v) == (QuadReal.omega() * v).floor()
