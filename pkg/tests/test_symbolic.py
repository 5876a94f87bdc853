from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pentadyn.cyclo import Cyclo, omega, parse_cyclo
from pentadyn.dynamics import classify, step_S
from pentadyn.regions import osc_pentagon
from pentadyn.symbolic import (
    CUT_POINT_PAIRS,
    KAPPA,
    Lasso,
    SadicError,
    ab_to_01,
    accepts_lasso,
    address_lasso,
    address_of,
    apply_substitution,
    build_edge_automaton,
    classify_multiplicative,
    coding_d,
    coding_dtilde,
    cylinder_polygon,
    eval_address,
    forbidden_graph,
    load_golden_automaton,
    sadic_compose,
    sadic_decompose,
    sigma0_fixed_point,
    suffix_in_graph,
)

ONE_THIRD_D = "10110101011010101101101101"


def test_coding_one_third():
    assert coding_d(Fraction(1, 3), 26) == ONE_THIRD_D


def test_induced_coding_lifts_to_d_coding():
    x = parse_cyclo("-2*z^-1/3")  # T(1/3)
    word = coding_dtilde(x, 40)
    lifted = ab_to_01(word)
    assert lifted.startswith(coding_d(x, len(lifted)))
    assert coding_d(Fraction(1, 3), len(lifted) + 1)[1:] == lifted


def test_coding_length_validation():
    with pytest.raises(ValueError):
        coding_d(Fraction(1, 3), 0)


def test_substitutions_shape():
    for i in range(4):
        img = apply_substitution(i, "ab")
        assert len(img) == 8
    with pytest.raises(ValueError):
        apply_substitution(4, "a")
    with pytest.raises(ValueError):
        apply_substitution(0, "abc")


def test_sigma0_fixed_point_is_fixed():
    w = sigma0_fixed_point(64)
    assert apply_substitution(0, w)[:64] == w


@given(st.lists(st.integers(0, 3), min_size=1, max_size=3), st.text("ab", min_size=8, max_size=12))
@settings(max_examples=60)
def test_sadic_decompose_recovers_first_index(indices, tail):
    word = sadic_compose(indices, tail)
    found, _ = sadic_decompose(word, min_length=8)
    if found:
        assert found[0] == indices[0]


def test_sadic_rejects_non_limits():
    with pytest.raises(SadicError) as err:
        sadic_decompose("bbbbbbbbbbbb")
    assert err.value.position >= 0


def test_kappa_prefixes():
    assert KAPPA == ("", "a", "ba", "aba")


def test_address_lasso_of_one_third():
    lasso = address_lasso(Fraction(1, 3))
    cert = classify(Fraction(1, 3))
    assert len(lasso.u) == cert.preperiod and len(lasso.v) == cert.cycle
    assert eval_address(lasso) == Cyclo.from_rational(5, Fraction(1, 3))
    word, truncated = address_of(Fraction(1, 3), 12)
    assert not truncated and word == lasso.prefix(12)


@given(st.text("0235", max_size=4), st.text("0235", min_size=1, max_size=3))
@settings(max_examples=60, deadline=None)
def test_eval_address_shift(u, v):
    # S-like shift: f_u(f_v(fixed)) is the same point as the lasso u|v
    x = eval_address(u, v)
    assert eval_address(u + v, v) == x
    assert osc_pentagon().contains_closure(eval_address("", v))
    assert cylinder_polygon(u).contains_closure(x)


def test_cut_point_pairs_are_equal():
    for left, right in CUT_POINT_PAIRS:
        assert eval_address(left) == eval_address(right)


def test_edge_automaton_matches_golden_file():
    aut = build_edge_automaton()
    assert aut.to_json() == load_golden_automaton()
    assert {"3L", "0R"} <= {t for s, _, t in aut.edges if s == "5R"}
    assert aut.spectral_radius() <= 2.01


def test_lasso_acceptance():
    aut = build_edge_automaton()
    # the (d0)^inf suffix accepted once it enters 0R and stays on its loop
    assert accepts_lasso(aut, "3|0")
    assert accepts_lasso(aut, "53|0")
    # the fixed point 0 is a corner of K, not on an open edge: no run reaches 0R
    assert not accepts_lasso(aut, Lasso("", "0"))
    assert not accepts_lasso(aut, address_lasso(Fraction(1, 3)))
    with pytest.raises(ValueError):
        Lasso.parse("3505")


def test_suffix_semantics_and_multiplicative():
    assert suffix_in_graph("", "0")
    assert suffix_in_graph("532", "0")
    assert not suffix_in_graph(address_lasso(Fraction(1, 3)))
    assert classify_multiplicative("", "0") == "periodic-suffix"
    g = forbidden_graph()
    assert g.spectral_radius() == pytest.approx(build_edge_automaton().spectral_radius())


def test_periodic_points_have_finite_addresses():
    word, truncated = address_of(Fraction(1, 2), 20)
    assert truncated
    assert classify(Fraction(1, 2)).periodic
    y = omega() ** 2 / 3
    assert step_S(Fraction(1, 3)) == y
