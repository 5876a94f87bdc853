from fractions import Fraction

import pytest
from hypothesis import given, settings

from pentadyn.cyclo import Cyclo, QuadReal, from_lozenge_coordinates, omega, zeta
from pentadyn.dynamics import sample_L, step_T
from pentadyn.regions import (
    HalfOpenConvexPolygon,
    PolygonError,
    build_named_regions,
    lozenge,
    named_region,
    osc_pentagon,
    partition_check,
    period5_centre,
    period10_centre,
    printed_k_vertices,
)

from conftest import unit_coordinate

TILES = ["Lprime", "P0", "P1", "P2"] + [f"T{k}D" for k in range(1, 6)] + ["T1Deltaprime", "T2Deltaprime"]


def test_unit_square_flags():
    z = zeta()
    sq = HalfOpenConvexPolygon([Cyclo.zero(), Cyclo.one(), 1 + z, z], [True, False, False, True])
    assert sq.contains(Cyclo.zero())
    assert not sq.contains(Cyclo.one())
    assert sq.contains(z / 2)
    assert not sq.contains((1 + z + 1) / 2)  # midpoint of the open edge 1 -> 1+z
    assert sq.contains_closure(Cyclo.one())


def test_polygon_rejects_nonconvex():
    z = zeta()
    with pytest.raises(PolygonError):
        HalfOpenConvexPolygon([Cyclo.zero(), Cyclo.one(), (1 + z) / 4, z])


def test_partition_of_L_areas():
    regions = build_named_regions()
    total = QuadReal(0)
    for name in TILES:
        total = total + regions[name].area_over_sin72()
    assert total == regions["L"].area_over_sin72()


def test_partition_of_L_samples():
    regions = build_named_regions()
    report = partition_check([regions[n] for n in TILES], regions["L"], sample_L(1500, seed=3))
    assert report.checked == 1500
    assert report.ok, report.violations[:3]


@given(unit_coordinate(), unit_coordinate())
@settings(max_examples=80, deadline=None)
def test_partition_of_L_property(s, t):
    regions = build_named_regions()
    x = from_lozenge_coordinates(s, t)
    assert sum(regions[n].contains(x) for n in TILES) == 1


def test_return_time_three_cell_is_shrunken_p0():
    w2 = omega() ** 2
    assert named_region("Deltaprime").polygon.map(w2, Cyclo.zero()) == named_region("P0").polygon


def test_triangle1_is_shrunken_delta():
    tri = named_region("Triangle1").polygon
    delta = named_region("Delta").polygon
    assert tri.same_closure(delta.map(omega() ** -2, Cyclo.zero()))


def test_period_pentagon_flags_and_centres():
    p0, p1, p2 = (named_region(n).polygon for n in ("P0", "P1", "P2"))
    assert not any(p0.edge_closed)
    assert all(p1.edge_closed) and all(p2.edge_closed)
    c = period5_centre()
    assert p0.contains(c) and step_T(c) == c
    q = period10_centre()
    assert p1.contains(q) and step_T(step_T(q)) == q and step_T(q) != q


def test_d_and_d0_flags():
    d = named_region("D")
    d0 = named_region("D0")
    assert abs(float(d.area_over_sin72()) - float(named_region("T3D").area_over_sin72())) < 1e-15
    # D0 is T(Z) minus the open pentagon P0
    tz = named_region("TZ").area_over_sin72()
    assert d0.area_over_sin72() == tz - named_region("P0").area_over_sin72()


def test_osc_pentagon_vs_printed_vertices():
    k = osc_pentagon()
    assert len(k) == 5
    pts = printed_k_vertices()
    # the printed list is degenerate: 0 is the midpoint of its last two points
    assert pts[3] + pts[4] == 0
    with pytest.raises(PolygonError):
        HalfOpenConvexPolygon(pts)


def test_aliases():
    assert named_region("Δ") is named_region("Delta")
    assert named_region("L′") is named_region("Lprime")
    with pytest.raises(KeyError):
        named_region("nowhere")


def test_lozenge_membership_matches_coordinates():
    L = lozenge()
    assert L.contains(from_lozenge_coordinates(QuadReal(0), QuadReal(Fraction(1, 2))))
    assert not L.contains(from_lozenge_coordinates(QuadReal(1), QuadReal(0)))
