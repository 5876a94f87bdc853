import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pentadyn.cyclo import Cyclo, QuadReal, galois, omega, parse_cyclo, zeta
from pentadyn.fractal import (
    PULLBACK_RELATIONS,
    AffineMap,
    attractor_cover,
    box_dimension,
    chaos_game,
    convex_hull,
    cover_json,
    cylinder,
    cylinder_freq,
    cylinder_pullback,
    dual_digits,
    dual_seed,
    ifs_dual,
    ifs_Y,
    ifs_Yprime,
    in_dual_cover,
    osc_check,
    pentagon_removal,
    removal_area_ratio,
    svg_polygons,
)
from pentadyn.regions import named_region, osc_pentagon
from pentadyn.symbolic import eval_address


def test_affine_compose_and_fixed_point():
    f = ifs_Yprime().word_map("35")
    g = ifs_Yprime().word_map("3")
    h = ifs_Yprime().word_map("5")
    y = Cyclo.from_rational(5, Fraction(1, 7)) + zeta() / 3
    assert f(y) == g(h(y))
    assert f.label == "35"
    fp = h.fixed_point()
    assert h(fp) == fp
    assert fp == eval_address("", "5")


def test_dual_digits():
    u = dual_digits()
    w = omega()
    z = zeta()
    assert u[0] == 0
    assert u[2] == z ** 2
    assert u[3] == 1 + z ** 4 == -w * z ** 2
    assert u[5] == galois(-1 / (w * z), 2)


def test_systems_sizes():
    assert len(ifs_Y().maps) == 6
    assert ifs_Yprime().labels == ["0", "2", "3", "5"]
    assert len(ifs_dual().maps) == 4


def test_osc_depth_one_and_two():
    for depth in (1, 2):
        report = osc_check(ifs_Yprime(), depth)
        assert report.pieces == 4 ** depth
        assert report.ok, (report.overlaps, report.outside)


def test_seeds_are_invariant():
    for system in (ifs_Y(), ifs_dual()):
        report = osc_check(system, 1)
        assert not report.outside


def test_dual_seed_shape():
    seed = dual_seed()
    assert len(seed) == 10
    assert abs(float(seed.area_over_sin72()) - 0.3468) < 1e-3


def test_removal_ratio_exact():
    target = QuadReal(20, -12)  # 4 / omega^4
    assert QuadReal(4) / QuadReal.omega() ** 4 == target
    for i in range(4):
        assert removal_area_ratio(i) == target ** i
    assert len(pentagon_removal(2)) == 16


def test_first_removal_identity():
    w = omega()
    z = zeta()
    p0 = named_region("P0").polygon
    small = p0.map(w ** -2, Cyclo.zero())
    other = p0.map(w ** -2 / z, -1 / z)
    removed = [named_region("P1").polygon, small, other]
    d1 = [q for _, parts in pentagon_removal(1) for q in parts]
    area = sum((p.area_over_sin72() for p in d1), QuadReal(0))
    area += sum((p.area_over_sin72() for p in removed), QuadReal(0))
    assert area == named_region("D0").area_over_sin72()
    for p in removed:
        assert all(p.interiors_disjoint(q) for q in d1)
    for i, p in enumerate(removed):
        for q in removed[i + 1:]:
            assert p.interiors_disjoint(q)


def test_cylinder_pullbacks():
    branches = [cylinder_pullback(t, s) for t, s in PULLBACK_RELATIONS]
    assert branches == ["A", "B", "A", "A", "B", "A"]
    assert cylinder_pullback("3", "2") is None


def test_cylinder_measure_and_validation():
    assert cylinder("53").measure == Fraction(1, 16)
    assert cylinder("").polygon == osc_pentagon().map(Cyclo.one(), Cyclo.zero(), name="[]")
    with pytest.raises(ValueError):
        cylinder("14")


def test_cylinder_frequencies_short_run():
    freq = cylinder_freq(parse_cyclo("-2*z^-1/3"), 2000, 2)
    assert len(freq) == 16
    assert all(abs(v - 1 / 16) < 0.02 for v in freq.values())
    assert sum(freq.values()) == pytest.approx(1)


@given(st.text("0235", min_size=1, max_size=3), st.text("0235", min_size=1, max_size=3))
@settings(max_examples=40, deadline=None)
def test_refinement_consistency(u, v):
    # every depth-|uv| piece sits inside its depth-|u| ancestor
    assert cylinder(u).polygon.closure_contains_polygon(cylinder(u + v).polygon)


def test_box_dimension_estimate():
    pts = chaos_game(ifs_Yprime(), 200_000, seed=1)
    dim = box_dimension(pts)
    expect = math.log(4) / (2 * math.log((1 + math.sqrt(5)) / 2))  # log 4 / log omega^2
    assert abs(dim - expect) < 0.05


def test_chaos_game_deterministic():
    assert chaos_game(ifs_Y(), 50, seed=3) == chaos_game(ifs_Y(), 50, seed=3)
    with pytest.raises(ValueError):
        chaos_game(ifs_Y(), 0)


def test_in_dual_cover():
    assert in_dual_cover(Cyclo.zero(), 4) == (True, 4)
    inside, depth = in_dual_cover(Cyclo.from_rational(5, 10), 4)
    assert not inside and depth == 0


def test_convex_hull_drops_interior_points():
    z = zeta()
    pts = [Cyclo.zero(), Cyclo.one(), z, 1 + z, (1 + z) / 3]
    hull = convex_hull(pts)
    assert len(hull) == 4


def test_svg_and_json_are_deterministic():
    cover = [p for _, p in attractor_cover(ifs_Yprime(), 1)]
    a = svg_polygons(cover)
    assert a == svg_polygons(cover)
    assert a.startswith("<svg") and a.count("<path") == 4
    assert '"depth": 1' in cover_json(ifs_Yprime(), 1)


def test_affine_map_identity():
    one = AffineMap(Cyclo.one(), Cyclo.zero(), "")
    f = ifs_Yprime().maps[1]
    assert one.compose(f)(zeta()) == f(zeta())
