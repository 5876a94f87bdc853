"""Iterated function systems of the pentagonal map.

* ``Y``: six maps ``y -> zeta^m/omega^2 y + d_m`` (m = 0..5),
* ``Y'``: the four maps with m in {0, 2, 3, 5} (seed polygon K),
* the dual attractor: ``y -> zeta^(-2m)(y - u_m)/omega^2`` with
  ``u_m = phi(d_m)`` the Galois image under zeta -> zeta^2.

Covers and removal sets are exact polygons; chaos games and SVG output
are floating point and only used for pictures.
"""

from __future__ import annotations

import functools
import json
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .cyclo import Cyclo, QuadReal, digits, galois, imag_over_sin72, omega, real_part_quad, zeta
from .regions import HalfOpenConvexPolygon, cross_sign, named_region, osc_pentagon

__all__ = [
    "AffineMap",
    "IfsSystem",
    "ifs_Y",
    "ifs_Yprime",
    "ifs_dual",
    "dual_digits",
    "dual_seed",
    "convex_hull",
    "attractor_cover",
    "pentagon_removal",
    "removal_area_ratio",
    "osc_check",
    "OscReport",
    "chaos_game",
    "box_dimension",
    "CylinderSet",
    "cylinder",
    "cylinder_freq",
    "cylinder_pullback",
    "PULLBACK_RELATIONS",
    "in_dual_cover",
    "svg_polygons",
    "svg_points",
]


@dataclass(frozen=True)
class AffineMap:
    """``y -> a*y + b``."""

    a: Cyclo
    b: Cyclo
    label: str = ""

    def __call__(self, y: Cyclo) -> Cyclo:
        return self.a * y + self.b

    def compose(self, other: "AffineMap") -> "AffineMap":
        """``self o other``."""
        return AffineMap(self.a * other.a, self.a * other.b + self.b, self.label + other.label)

    def fixed_point(self) -> Cyclo:
        return self.b / (Cyclo.one() - self.a)

    def apply_polygon(self, poly: HalfOpenConvexPolygon, name=None) -> HalfOpenConvexPolygon:
        return poly.map(self.a, self.b, name=name)

    def complex_coeffs(self):
        return complex(self.a), complex(self.b)


@dataclass(frozen=True)
class IfsSystem:
    name: str
    maps: tuple  # of AffineMap
    seed: HalfOpenConvexPolygon

    @property
    def labels(self):
        return [m.label for m in self.maps]

    def word_map(self, word) -> AffineMap:
        out = AffineMap(Cyclo.one(), Cyclo.zero(), "")
        lookup = {m.label: m for m in self.maps}
        for c in word:
            out = out.compose(lookup[str(c)])
        return out


@lru_cache(maxsize=None)
def _contraction(m: int) -> AffineMap:
    return AffineMap(zeta(5, m) * omega() ** -2, digits()[m], str(m))


@lru_cache(maxsize=None)
def dual_digits() -> dict:
    """``{m: phi(d_m)}`` for m in {0, 2, 3, 5}."""
    return {m: galois(digits()[m], 2) for m in (0, 2, 3, 5)}


@lru_cache(maxsize=None)
def _dual_map(m: int) -> AffineMap:
    a = zeta(5, -2 * m) * omega() ** -2
    return AffineMap(a, -a * dual_digits()[m], str(m))


@lru_cache(maxsize=None)
def ifs_Yprime() -> IfsSystem:
    return IfsSystem("Yprime", tuple(_contraction(m) for m in (0, 2, 3, 5)), osc_pentagon())


@lru_cache(maxsize=None)
def ifs_Y() -> IfsSystem:
    maps = tuple(_contraction(m) for m in range(6))
    return IfsSystem("Y", maps, _invariant_hull(maps))


@lru_cache(maxsize=None)
def ifs_dual() -> IfsSystem:
    maps = tuple(_dual_map(m) for m in (0, 2, 3, 5))
    return IfsSystem("dual", maps, dual_seed())


# ---------------------------------------------------------------------------
# exact hulls and invariant seeds


def _cmp_xy(p: Cyclo, q: Cyclo) -> int:
    a = (real_part_quad(p), imag_over_sin72(p))
    b = (real_part_quad(q), imag_over_sin72(q))
    return (a > b) - (a < b)


def convex_hull(points) -> HalfOpenConvexPolygon:
    """Exact convex hull (closed polygon) of points of Q(zeta_5)."""
    pts = sorted({p.key(): p for p in points}.values(), key=functools.cmp_to_key(_cmp_xy))
    if len(pts) < 3:
        raise ValueError("need at least three points")

    def half(seq):
        out = []
        for p in seq:
            while len(out) >= 2 and cross_sign(out[-1] - out[-2], p - out[-1]) <= 0:
                out.pop()
            out.append(p)
        return out

    lower = half(pts)
    upper = half(reversed(pts))
    return HalfOpenConvexPolygon(lower[:-1] + upper[:-1])


def _decagon(radius: Fraction) -> HalfOpenConvexPolygon:
    r = Cyclo.from_rational(5, radius)
    return convex_hull([r * zeta(5, k) for k in range(5)] + [-r * zeta(5, k) for k in range(5)])


def _invariant_hull(maps, depth: int = 3) -> HalfOpenConvexPolygon:
    """Convex polygon ``H`` with ``f(H)`` inside ``H`` for every map.

    Start from a rational decagon large enough to be mapped into itself,
    then replace it by the hull of its depth-``depth`` images (which is
    again invariant).
    """
    w2 = ((1 + math.sqrt(5)) / 2) ** 2
    # a decagon of radius R works once R / omega^2 + |b| <= R cos 18deg
    umax = max(abs(complex(m.b)) for m in maps)
    r_float = umax / (math.cos(math.pi / 10) - 1 / w2) * 1.05 + 0.05
    radius = Fraction(math.ceil(r_float * 100), 100)
    seed = _decagon(radius)
    for m in maps:
        if not seed.closure_contains_polygon(m.apply_polygon(seed)):
            raise RuntimeError("decagon seed is not invariant")
    pts = [seed]
    for _ in range(depth):
        pts = [m.apply_polygon(p) for p in pts for m in maps]
    hull = convex_hull([v for p in pts for v in p.vertices])
    for m in maps:
        if not hull.closure_contains_polygon(m.apply_polygon(hull)):
            raise RuntimeError("refined hull is not invariant")
    return hull


@lru_cache(maxsize=None)
def dual_seed() -> HalfOpenConvexPolygon:
    """Invariant convex hull for the dual IFS, derived by iteration."""
    return _invariant_hull(tuple(_dual_map(m) for m in (0, 2, 3, 5)))


# ---------------------------------------------------------------------------
# covers, removal sets, OSC


def attractor_cover(system: IfsSystem, depth: int, seed: HalfOpenConvexPolygon | None = None):
    """All ``f_w(seed)`` for words ``w`` of length ``depth``; list of (word, polygon)."""
    seed = system.seed if seed is None else seed
    return [(f.label, f.apply_polygon(seed)) for f in _word_maps(system, depth)]


def _word_maps(system: IfsSystem, depth: int) -> list:
    out = [AffineMap(Cyclo.one(), Cyclo.zero(), "")]
    for _ in range(depth):
        out = [f.compose(m) for f in out for m in system.maps]
    return out


def pentagon_removal(i: int) -> list:
    """Pieces of ``D_i``: ``(word, [convex parts])`` for the 4^i words of length i."""
    if i < 0:
        raise ValueError("i must be non-negative")
    d0 = named_region("D0").polygons
    return [(f.label, [f.apply_polygon(p) for p in d0]) for f in _word_maps(ifs_Yprime(), i)]


def removal_area_ratio(i: int) -> QuadReal:
    """Exact ``area(D_i)/area(D_0)`` from the shoelace areas of all pieces."""
    base = named_region("D0").area_over_sin72()
    total = QuadReal(0)
    for _, parts in pentagon_removal(i):
        for p in parts:
            total = total + p.area_over_sin72()
    return total / base


@dataclass
class OscReport:
    depth: int
    pieces: int
    overlaps: list  # pairs of words with intersecting interiors
    outside: list  # words whose piece is not inside the seed

    @property
    def ok(self) -> bool:
        return not self.overlaps and not self.outside


def osc_check(system: IfsSystem, depth: int = 1, seed: HalfOpenConvexPolygon | None = None) -> OscReport:
    """Pairwise interior-disjointness of the depth-``depth`` pieces (exact)."""
    seed = system.seed if seed is None else seed
    cover = attractor_cover(system, depth, seed)
    overlaps = []
    for i in range(len(cover)):
        for j in range(i + 1, len(cover)):
            if not cover[i][1].interiors_disjoint(cover[j][1]):
                overlaps.append((cover[i][0], cover[j][0]))
    outside = [w for w, p in cover if not seed.closure_contains_polygon(p)]
    return OscReport(depth, len(cover), overlaps, outside)


def in_dual_cover(theta: Cyclo, depth: int):
    """Depth-stamped test of ``theta`` against covers of the dual attractor.

    Returns ``(inside, deepest)``: ``inside`` is False as soon as ``theta``
    is outside every piece at some depth (a sound exclusion); otherwise
    True, with ``deepest`` the depth reached.
    """
    system = ifs_dual()
    seed = system.seed
    frontier = [AffineMap(Cyclo.one(), Cyclo.zero(), "")]
    if not seed.contains_closure(theta):
        return False, 0
    for level in range(1, depth + 1):
        nxt = []
        for f in frontier:
            for m in system.maps:
                g = f.compose(m)
                if g.apply_polygon(seed).contains_closure(theta):
                    nxt.append(g)
        if not nxt:
            return False, level
        frontier = nxt
    return True, depth


# ---------------------------------------------------------------------------
# cylinders and statistics


@dataclass(frozen=True)
class CylinderSet:
    word: str
    polygon: HalfOpenConvexPolygon

    @property
    def measure(self) -> Fraction:
        return Fraction(1, 4 ** len(self.word))


def cylinder(word: str) -> CylinderSet:
    if set(word) - set("0235"):
        raise ValueError("cylinder words use the digits 0, 2, 3, 5")
    f = ifs_Yprime().word_map(word)
    return CylinderSet(word, f.apply_polygon(osc_pentagon(), name=f"[{word}]"))


def cylinder_freq(x, N: int, ell: int) -> dict:
    """Visit frequencies of ``T~^n x`` (n < N) to the level-``ell`` cylinders.

    The cylinder of a point is read off its first ``ell`` address digits
    along the S-orbit.
    """
    from .dynamics import _as_point, _hit, _in_delta, _in_L, _in_TZ, _mul_w2, _T, _to_kernel

    x = _as_point(x)
    p, M = _to_kernel(x)
    if not (_in_L(p, M) and _in_TZ(p)):
        raise ValueError("x must lie in T(Z)")
    counts: dict = {}
    for _ in range(N):
        q = p
        word = []
        for _ in range(ell):
            h = _hit(q, M, check=False)
            if h is None:
                break
            word.append(str(h[0]))
            q = _mul_w2(h[1])
        key = "".join(word)
        counts[key] = counts.get(key, 0) + 1
        p = _T(_T(p, M), M) if _in_delta(p) else _T(p, M)
    return {k: v / N for k, v in sorted(counts.items())}


def chaos_game(system: IfsSystem, n_points: int, seed: int = 0, burn: int = 20):
    """Point cloud (floats) of the attractor; deterministic for a given seed."""
    if n_points < 1:
        raise ValueError("n_points must be positive")
    rng = random.Random(seed)
    coeffs = [m.complex_coeffs() for m in system.maps]
    y = 0j
    out = []
    for k in range(n_points + burn):
        a, b = coeffs[rng.randrange(len(coeffs))]
        y = a * y + b
        if k >= burn:
            out.append(y)
    return out


def box_dimension(points, scales=(2 ** -4, 2 ** -5, 2 ** -6, 2 ** -7)) -> float:
    """Least-squares slope of log N(eps) against log(1/eps)."""
    import numpy as np

    xs, ys = [], []
    for eps in scales:
        boxes = {(math.floor(p.real / eps), math.floor(p.imag / eps)) for p in points}
        xs.append(math.log(1 / eps))
        ys.append(math.log(len(boxes)))
    slope, _ = np.polyfit(xs, ys, 1)
    return float(slope)


# ---------------------------------------------------------------------------
# SVG


def _fmt(v: float, sig: int) -> str:
    return f"{v:.{sig}g}"


def _viewbox(points, pad=0.05):
    xs = [p.real for p in points]
    ys = [-p.imag for p in points]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    w, h = x1 - x0, y1 - y0
    return x0 - pad * w, y0 - pad * h, w * (1 + 2 * pad), h * (1 + 2 * pad)


def svg_polygons(polys, sig: int = 12, title: str = "", fills=None) -> str:
    """SVG text with one path per polygon (y axis flipped)."""
    polys = list(polys)
    pts = [complex(v) for p in polys for v in p.vertices]
    vb = _viewbox(pts)
    size = max(vb[2], vb[3])
    lines = [
        '<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="{" ".join(_fmt(v, sig) for v in vb)}" width="800" height="{int(800 * vb[3] / vb[2])}">'
    ]
    if title:
        lines.append(f"  <title>{title}</title>")
    stroke = _fmt(size / 800, 4)
    for k, p in enumerate(polys):
        fill = fills[k] if fills else "#4a7ab5"
        lines.append(f'  <path d="{p.svg_path(sig)}" fill="{fill}" fill-opacity="0.6" '
                     f'stroke="black" stroke-width="{stroke}"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def svg_points(points, sig: int = 12, title: str = "", radius: float | None = None) -> str:
    points = list(points)
    vb = _viewbox(points)
    r = radius if radius is not None else max(vb[2], vb[3]) / 1500
    lines = [
        '<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="{" ".join(_fmt(v, sig) for v in vb)}" width="800" height="{int(800 * vb[3] / vb[2])}">'
    ]
    if title:
        lines.append(f"  <title>{title}</title>")
    for p in points:
        lines.append(f'  <circle cx="{_fmt(p.real, sig)}" cy="{_fmt(-p.imag, sig)}" r="{_fmt(r, 4)}"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def cover_json(system: IfsSystem, depth: int) -> str:
    cover = attractor_cover(system, depth)
    return json.dumps({"schema": 1, "set": system.name, "depth": depth,
                       "pieces": [{"word": w, "polygon": p.to_json()} for w, p in cover]})


# ---------------------------------------------------------------------------
# cylinder pullbacks under T~


PULLBACK_RELATIONS = (("3", "5"), ("2", "3"), ("0", "2"), ("53", "05"), ("52", "03"), ("50", "02"))


@lru_cache(maxsize=None)
def _ttilde_branches() -> dict:
    """Affine branches of T~ with their domains: T^2 on T(Z) n Delta, T elsewhere."""
    z = zeta()
    tz = named_region("TZ").polygons
    delta = named_region("Delta").polygons
    dom_a = [p for a in tz for d in delta for p in [a.intersect(d)] if p is not None]
    dom_b = [p for a in tz for d in delta for p in a.minus(d)]
    return {"A": (z ** -2, -(z ** -1), dom_a), "B": (z ** -1, -(z ** -1), dom_b)}


def cylinder_pullback(target: str, source: str):
    """Check ``T~^{-1}([target]) = [source]`` as an exact polygon identity.

    Returns the name of the affine branch of T~ that carries
    ``f_source(K)`` onto ``f_target(K)`` and whose domain is the only one
    meeting ``f_source(D_0)`` (which contains the cylinder of the
    attractor), or None if no branch does.
    """
    f = ifs_Yprime().word_map(source)
    inner = [f.apply_polygon(p) for p in named_region("D0").polygons]
    src = cylinder(source).polygon
    tgt = cylinder(target).polygon
    branches = _ttilde_branches()
    for name, (a, b, _) in branches.items():
        if not src.map(a, b).same_closure(tgt):
            continue
        others = [p for other, (_, _, dom) in branches.items() if other != name for p in dom]
        if all(q.interiors_disjoint(p) for q in inner for p in others):
            return name
    return None
