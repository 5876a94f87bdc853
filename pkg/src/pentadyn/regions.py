"""Half-open convex polygons with cyclotomic vertices.

Every polygon carries a closedness flag per edge; by default a vertex
belongs to the polygon iff both adjacent edges are closed.  Clipping and
merging track vertex membership explicitly, since a cut through a vertex
can leave it excluded although both of its new edges are closed.

The named regions of the pentagonal map (lozenge ``L``, triangle ``Delta``,
trapezoid ``Z`` and friends) are built in :func:`build_named_regions`.  The
period pentagons and the return-time cells are not typed in by hand: they
are cut out of ``L`` by following exact itineraries of the map.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .cyclo import (
    Cyclo,
    QuadReal,
    imag_over_sin72,
    lozenge_coordinates,
    omega,
    parse_cyclo,
    sign_imag,
    zeta,
)

__all__ = [
    "HalfOpenConvexPolygon",
    "PolygonError",
    "cross_sign",
    "contains",
    "transform",
    "build_named_regions",
    "named_region",
    "partition_check",
    "PartitionReport",
    "hitting_cells",
    "lozenge",
    "piece_maps",
    "osc_pentagon",
    "printed_k_vertices",
    "period5_centre",
    "period10_centre",
    "NamedRegion",
    "image_under_T",
    "merge_all",
]


class PolygonError(ValueError):
    pass


def cross(a: Cyclo, b: Cyclo) -> Cyclo:
    """``conj(a)*b``; its imaginary part is the planar cross product."""
    return a.conjugate() * b


def cross_sign(a: Cyclo, b: Cyclo) -> int:
    return sign_imag(cross(a, b))


def _real_ratio(u: Cyclo, v: Cyclo) -> Cyclo:
    """Im(u)/Im(v) as an exact (real) field element."""
    return (u - u.conjugate()) / (v - v.conjugate())


class HalfOpenConvexPolygon:
    """Strictly convex polygon, vertices counterclockwise.

    ``edge_closed[i]`` refers to the edge from ``vertices[i]`` to
    ``vertices[i+1]``.
    """

    __slots__ = ("vertices", "edge_closed", "vertex_included", "name", "_lozenge_edges")

    def __init__(self, vertices, edge_closed=None, vertex_included=None, name=""):
        vertices = tuple(vertices)
        if len(vertices) < 3:
            raise PolygonError("a polygon needs at least three vertices")
        k = len(vertices)
        if edge_closed is None:
            edge_closed = (True,) * k
        edge_closed = tuple(bool(e) for e in edge_closed)
        if len(edge_closed) != k:
            raise PolygonError("one flag per edge required")
        if vertex_included is None:
            vertex_included = tuple(edge_closed[i - 1] and edge_closed[i] for i in range(k))
        self.vertices = vertices
        self.edge_closed = edge_closed
        self.vertex_included = tuple(bool(v) for v in vertex_included)
        self.name = name
        self._lozenge_edges = None
        for i in range(k):
            a, b, c = vertices[i], vertices[(i + 1) % k], vertices[(i + 2) % k]
            if cross_sign(b - a, c - b) <= 0:
                raise PolygonError(f"polygon {name!r} is not strictly convex CCW at vertex {i + 1}")

    # basic data -----------------------------------------------------------

    @property
    def n(self) -> int:
        return self.vertices[0].n

    def __len__(self):
        return len(self.vertices)

    def edges(self):
        k = len(self.vertices)
        for i in range(k):
            yield self.vertices[i], self.vertices[(i + 1) % k], self.edge_closed[i]

    def has_default_vertices(self) -> bool:
        k = len(self.vertices)
        return all(
            self.vertex_included[i] == (self.edge_closed[i - 1] and self.edge_closed[i])
            for i in range(k)
        )

    def _canonical(self):
        k = len(self.vertices)
        keys = [v.key() for v in self.vertices]
        start = min(range(k), key=lambda i: keys[i])
        order = [(start + j) % k for j in range(k)]
        return tuple(
            (keys[i], self.edge_closed[i], self.vertex_included[i]) for i in order
        )

    def __eq__(self, other):
        if not isinstance(other, HalfOpenConvexPolygon):
            return NotImplemented
        return self._canonical() == other._canonical()

    def __hash__(self):
        return hash(self._canonical())

    def same_closure(self, other) -> bool:
        return {v.key() for v in self.vertices} == {v.key() for v in other.vertices}

    def __repr__(self):
        pts = ", ".join(f"{complex(v):.4f}" for v in self.vertices)
        flags = "".join("c" if e else "o" for e in self.edge_closed)
        return f"<Polygon {self.name or '?'} [{pts}] edges={flags}>"

    # membership -------------------------------------------------------------

    def _edge_functionals(self):
        # n = 5 fast path: cross(b-a, x-a)/sin72 = alpha*s - beta*t - gamma in lozenge coords
        if self._lozenge_edges is None:
            zi = zeta(5, -1)
            out = []
            for a, b, _ in self.edges():
                c = (b - a).conjugate()
                alpha = imag_over_sin72(c)
                beta = imag_over_sin72(c * zi)
                gamma = imag_over_sin72(c * a)
                out.append((alpha, beta, gamma))
            self._lozenge_edges = out
        return self._lozenge_edges

    def side_signs(self, x: Cyclo) -> list:
        """Sign of the cross product of each edge with ``x``; ``+1`` is inside."""
        if x.n == 5:
            s, t = lozenge_coordinates(x)
            return [(al * s - be * t - ga).sign() for al, be, ga in self._edge_functionals()]
        return [cross_sign(b - a, x - a) for a, b, _ in self.edges()]

    def contains(self, x: Cyclo) -> bool:
        signs = self.side_signs(x)
        if any(s < 0 for s in signs):
            return False
        zeros = [i for i, s in enumerate(signs) if s == 0]
        if not zeros:
            return True
        if len(zeros) == 1:
            return self.edge_closed[zeros[0]]
        # on two edge lines: a vertex
        k = len(self.vertices)
        i, j = zeros[0], zeros[1]
        vert = j if (i + 1) % k == j else i
        return self.vertex_included[vert]

    def __contains__(self, x):
        return self.contains(x)

    def contains_closure(self, x: Cyclo) -> bool:
        return all(s >= 0 for s in self.side_signs(x))

    def contains_interior(self, x: Cyclo) -> bool:
        return all(s > 0 for s in self.side_signs(x))

    # geometry ---------------------------------------------------------------

    def centroid_hint(self) -> Cyclo:
        """Average of the vertices; an interior point."""
        acc = self.vertices[0]
        for v in self.vertices[1:]:
            acc = acc + v
        return acc / len(self.vertices)

    def area_over_sin72(self) -> QuadReal:
        """Exact area divided by sin(72 deg) (n = 5)."""
        k = len(self.vertices)
        acc = QuadReal(0)
        for i in range(k):
            acc = acc + imag_over_sin72(cross(self.vertices[i], self.vertices[(i + 1) % k]))
        return acc * Fraction(1, 2)

    def area(self, bits: int = 128):
        """Certified area interval from the exact vertices."""
        from mpmath import iv

        from .cyclo import embed

        k = len(self.vertices)
        old = iv.prec
        try:
            iv.prec = bits
            pts = [embed(v, bits) for v in self.vertices]
            acc = iv.mpf(0)
            for i in range(k):
                (x1, y1), (x2, y2) = pts[i], pts[(i + 1) % k]
                acc += x1 * y2 - x2 * y1
            return acc / 2
        finally:
            iv.prec = old

    def to_complex(self) -> list:
        return [complex(v) for v in self.vertices]

    def map(self, a: Cyclo, b: Cyclo, name: str | None = None) -> "HalfOpenConvexPolygon":
        """Image under ``x -> a*x + b`` (a != 0); flags are carried along."""
        verts = [a * v + b for v in self.vertices]
        return HalfOpenConvexPolygon(
            verts, self.edge_closed, self.vertex_included, name=self.name if name is None else name
        )

    def with_flags(self, edge_closed, name=None) -> "HalfOpenConvexPolygon":
        return HalfOpenConvexPolygon(self.vertices, edge_closed, name=self.name if name is None else name)

    def closure(self) -> "HalfOpenConvexPolygon":
        return HalfOpenConvexPolygon(self.vertices, (True,) * len(self.vertices), name=self.name)

    def interior(self) -> "HalfOpenConvexPolygon":
        return HalfOpenConvexPolygon(self.vertices, (False,) * len(self.vertices), name=self.name)

    # clipping ---------------------------------------------------------------

    def clip_halfplane(self, a: Cyclo, b: Cyclo, closed: bool):
        """Intersection with the half-plane left of the directed line a -> b.

        Returns ``None`` when the intersection has empty interior.
        """
        d = b - a
        verts = self.vertices
        k = len(verts)
        sides = [cross_sign(d, v - a) for v in verts]
        if all(s >= 0 for s in sides):
            if all(s > 0 for s in sides) or closed:
                return self
            # an edge lies on an open boundary line: reopen it
            flags = list(self.edge_closed)
            for i in range(k):
                if sides[i] == 0 and sides[(i + 1) % k] == 0:
                    flags[i] = False
            incl = [v and s > 0 for v, s in zip(self.vertex_included, sides)]
            return HalfOpenConvexPolygon(verts, flags, incl, name=self.name)
        if all(s <= 0 for s in sides):
            return None
        # (point, flag of edge leaving it, point included); a kept vertex is
        # included iff it lies in self and in the half-plane
        out = []
        for i in range(k):
            j = (i + 1) % k
            si, sj = sides[i], sides[j]
            if si >= 0:
                incl = self.vertex_included[i] and (si > 0 or closed)
                if sj >= 0:
                    flag = self.edge_closed[i] and (closed or not (si == 0 and sj == 0))
                    out.append((verts[i], flag, incl))
                elif si > 0:
                    out.append((verts[i], self.edge_closed[i], incl))
                else:
                    out.append((verts[i], closed, incl))
            if si * sj < 0:
                u = verts[j] - verts[i]
                lam = _real_ratio(d.conjugate() * (a - verts[i]), d.conjugate() * u)
                point = verts[i] + u * lam
                out.append((point, closed if si > 0 else self.edge_closed[i], closed and self.edge_closed[i]))
        if len(out) < 3:
            return None
        try:
            return HalfOpenConvexPolygon([p for p, _, _ in out], [f for _, f, _ in out],
                                         [v for _, _, v in out], name=self.name)
        except PolygonError:
            return None

    def intersect(self, other: "HalfOpenConvexPolygon"):
        if not other.has_default_vertices():
            raise PolygonError("clipping requires default vertex flags")
        out = self
        for a, b, closed in other.edges():
            out = out.clip_halfplane(a, b, closed)
            if out is None:
                return None
        return out

    def split_halfplane(self, a: Cyclo, b: Cyclo, closed: bool):
        """(part left of a -> b, part right of it); either may be ``None``."""
        return self.clip_halfplane(a, b, closed), self.clip_halfplane(b, a, not closed)

    def minus(self, other: "HalfOpenConvexPolygon") -> list:
        """Convex pieces of ``self`` minus ``other`` (disjoint, exact)."""
        if not other.has_default_vertices():
            raise PolygonError("subtraction requires default vertex flags")
        pieces = []
        rest = self
        for a, b, closed in other.edges():
            inside, outside = rest.split_halfplane(a, b, closed)
            if outside is not None:
                pieces.append(outside)
            if inside is None:
                break
            rest = inside
        return pieces

    def try_merge(self, other: "HalfOpenConvexPolygon"):
        """Union with a polygon sharing a full edge, if it is convex.

        Returns ``None`` when the two do not share an edge, the union is
        not convex, or the flags cannot be expressed with default vertices.
        """
        k1, k2 = len(self), len(other)
        keys2 = {v.key(): j for j, v in enumerate(other.vertices)}
        for i in range(k1):
            a, b = self.vertices[i], self.vertices[(i + 1) % k1]
            ja, jb = keys2.get(a.key()), keys2.get(b.key())
            if ja is None or jb is None or (jb + 1) % k2 != ja:
                continue
            pts = [self.vertices[(i + 1 + t) % k1] for t in range(k1)]
            flags = [self.edge_closed[(i + 1 + t) % k1] for t in range(k1 - 1)]
            # walk the other polygon from a around to b
            for t in range(1, k2 - 1):
                pts.append(other.vertices[(ja + t) % k2])
            flags2 = [other.edge_closed[(ja + t) % k2] for t in range(k2 - 1)]
            verts = pts
            fl = flags + flags2
            # drop collinear vertices; the two merged edges must agree
            changed = True
            while changed:
                changed = False
                m = len(verts)
                for j in range(m):
                    p, c, nx = verts[j - 1], verts[j], verts[(j + 1) % m]
                    s = cross_sign(c - p, nx - c)
                    if s < 0:
                        return None
                    if s == 0:
                        if fl[j - 1] != fl[j]:
                            return None
                        del verts[j]
                        del fl[j]
                        changed = True
                        break
            incl = [self.contains(v) or other.contains(v) for v in verts]
            try:
                merged = HalfOpenConvexPolygon(verts, fl, incl, name=self.name)
            except PolygonError:
                return None
            # two open shared edges would leave a slit
            probes = [v for p in (self, other) for v in p.vertices]
            probes += [(u + w) / 2 for p in (self, other) for u, w, _ in p.edges()]
            for x in probes:
                if merged.contains(x) != (self.contains(x) or other.contains(x)):
                    return None
            return merged
        return None

    def interiors_disjoint(self, other: "HalfOpenConvexPolygon") -> bool:
        """Separating-axis test with exact orientation predicates."""
        for poly, rest in ((self, other), (other, self)):
            for a, b, _ in poly.edges():
                d = b - a
                if all(cross_sign(d, v - a) <= 0 for v in rest.vertices):
                    return True
        return False

    def closure_contains_polygon(self, other: "HalfOpenConvexPolygon") -> bool:
        return all(self.contains_closure(v) for v in other.vertices)

    # export -----------------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "n": self.n,
            "vertices": [v.to_string() for v in self.vertices],
            "edge_closed": list(self.edge_closed),
            "vertex_included": list(self.vertex_included),
        }

    @classmethod
    def from_json(cls, data) -> "HalfOpenConvexPolygon":
        if isinstance(data, str):
            data = json.loads(data)
        n = data.get("n", 5)
        return cls(
            [parse_cyclo(v, n) for v in data["vertices"]],
            data["edge_closed"],
            data.get("vertex_included"),
            name=data.get("name", ""),
        )

    def svg_path(self, digits_: int = 12, scale: float = 1.0) -> str:
        pts = [complex(v) for v in self.vertices]
        fmt = f"{{:.{digits_}g}}"
        parts = [
            ("M " if i == 0 else "L ") + fmt.format(p.real * scale) + " " + fmt.format(-p.imag * scale)
            for i, p in enumerate(pts)
        ]
        return " ".join(parts) + " Z"


def contains(region, x: Cyclo) -> bool:
    """Exact membership; ``region`` is a polygon or a region name."""
    if isinstance(region, str):
        region = named_region(region)
    return region.contains(x)


def transform(poly: HalfOpenConvexPolygon, rotation_power: int = 0, scale=1, translate=None):
    """Image under ``x -> scale * zeta^k * x + translate``.

    ``scale`` may be an integer, a Fraction, a :class:`QuadReal` (such as
    ``omega**-2``) or any real Cyclo element.
    """
    n = poly.n
    if isinstance(scale, QuadReal):
        scale = scale.to_cyclo()
    elif not isinstance(scale, Cyclo):
        scale = Cyclo.from_rational(n, scale)
    if translate is None:
        translate = Cyclo.zero(n)
    a = scale.mul_zeta(rotation_power)
    return poly.map(a, translate)


# ---------------------------------------------------------------------------
# the pentagonal map's regions


def lozenge() -> HalfOpenConvexPolygon:
    """``L = [0,1) + (-1/zeta)[0,1)``: bottom and left edges closed."""
    z = zeta()
    one = Cyclo.one()
    return HalfOpenConvexPolygon(
        [Cyclo.zero(), one, one - z.inverse(), -z.inverse()], [True, False, False, True], name="L"
    )


def piece_maps() -> tuple:
    """Affine maps ``x -> a*x + b`` of ``T`` on the triangle and the trapezoid."""
    zi = zeta(5, -1)
    return (zi, Cyclo.zero()), (zi, -zi)


def _delta_line():
    # Delta is the closed left side of the directed line 0 -> zeta
    return Cyclo.zero(), zeta()


@dataclass
class Cell:
    """A convex piece of the start region together with its orbit data."""

    polygon: HalfOpenConvexPolygon
    image: HalfOpenConvexPolygon
    itinerary: tuple
    hit: int | None  # number of steps to the target, None if never within the cap

    @property
    def steps(self) -> int:
        return len(self.itinerary)


def hitting_cells(start, target, min_steps: int, max_steps: int) -> list:
    """Exact partition of ``start`` by the first time its orbit enters ``target``.

    ``start`` and ``target`` are polygons inside ``L``.  The orbit of every
    point of a returned cell follows the same itinerary (0 = triangle,
    1 = trapezoid) and first meets ``target`` after ``cell.hit`` steps,
    where only times ``>= min_steps`` count.  Cells that do not meet the
    target within ``max_steps`` get ``hit=None``.
    """
    maps = piece_maps()
    o, z = _delta_line()
    out = []
    work = [(start, (), Cyclo.one(), Cyclo.zero())]
    while work:
        img, itin, a_tot, b_tot = work.pop()
        steps = len(itin)
        parts = [img]
        if steps >= min_steps:
            inside = img.intersect(target)
            if inside is not None:
                out.append((inside, itin, a_tot, b_tot, steps))
            parts = img.minus(target)
        for part in parts:
            if steps == max_steps:
                out.append((part, itin, a_tot, b_tot, None))
                continue
            left, right = part.split_halfplane(o, z, True)
            for idx, piece in ((0, left), (1, right)):
                if piece is None:
                    continue
                a, b = maps[idx]
                work.append((piece.map(a, b), itin + (idx,), a * a_tot, a * b_tot + b))
    # Clipping loses or duplicates isolated vertices where a cell touches an
    # open boundary line at a single point; settle every vertex by its own orbit.
    cells = []
    owner: dict = {}
    for img, itin, a_tot, b_tot, hit in out:
        inv = a_tot.inverse()
        poly = img.map(inv, -b_tot * inv)
        incl = []
        for v in poly.vertices:
            mine = (start.contains(v) and v.key() not in owner
                    and _point_itinerary(v, target, min_steps, max_steps) == (itin, hit))
            if mine:
                owner[v.key()] = len(cells)
            incl.append(mine)
        poly = HalfOpenConvexPolygon(poly.vertices, poly.edge_closed, incl, name=poly.name)
        cells.append(Cell(poly, poly.map(a_tot, b_tot), itin, hit))
    return cells


def _point_itinerary(x: Cyclo, target, min_steps: int, max_steps: int) -> tuple:
    """``(itinerary, hit)`` of a single point, matching :func:`hitting_cells`."""
    maps = piece_maps()
    o, z = _delta_line()
    itin = []
    for steps in range(max_steps + 1):
        if steps >= min_steps and target.contains(x):
            return tuple(itin), steps
        if steps == max_steps:
            break
        idx = 0 if cross_sign(z - o, x - o) >= 0 else 1
        a, b = maps[idx]
        x = a * x + b
        itin.append(idx)
    return tuple(itin), None


def image_under_T(polys, steps: int = 1) -> list:
    """Exact image of a union of polygons in ``L`` under ``T^steps``."""
    maps = piece_maps()
    o, z = _delta_line()
    cur = list(polys)
    for _ in range(steps):
        nxt = []
        for p in cur:
            for idx, piece in enumerate(p.split_halfplane(o, z, True)):
                if piece is not None:
                    nxt.append(piece.map(*maps[idx]))
        cur = nxt
    return merge_all(cur)


def merge_all(polys) -> list:
    """Greedily merge convex pieces that share an edge and stay convex."""
    polys = list(polys)
    changed = True
    while changed:
        changed = False
        for i in range(len(polys)):
            for j in range(i + 1, len(polys)):
                m = polys[i].try_merge(polys[j])
                if m is not None:
                    polys[i] = m
                    del polys[j]
                    changed = True
                    break
            if changed:
                break
    return polys


def period5_centre() -> Cyclo:
    """Centre ``1/(1 - zeta)`` of the trapezoid rotation, centroid of P0."""
    return (Cyclo.one() - zeta()).inverse()


def period10_centre() -> Cyclo:
    """Centre of ``T^2`` restricted to P1: the fixed point of ``x -> (x/zeta - 1)/zeta``.

    Its value is ``-zeta^-1/(1 - zeta^-2) = i/(2 sin 72deg)``.
    """
    zi = zeta(5, -1)
    return -zi / (Cyclo.one() - zi * zi)


@dataclass(frozen=True)
class NamedRegion:
    """A region given as a disjoint union of half-open convex polygons."""

    name: str
    polygons: tuple
    description: str = ""

    def contains(self, x) -> bool:
        return any(p.contains(x) for p in self.polygons)

    def __contains__(self, x):
        return self.contains(x)

    @property
    def polygon(self) -> HalfOpenConvexPolygon:
        if len(self.polygons) != 1:
            raise PolygonError(f"region {self.name} is not a single convex polygon")
        return self.polygons[0]

    def area_over_sin72(self) -> QuadReal:
        acc = QuadReal(0)
        for p in self.polygons:
            acc = acc + p.area_over_sin72()
        return acc

    def to_json(self) -> dict:
        return {"name": self.name, "description": self.description,
                "polygons": [p.to_json() for p in self.polygons]}


def _renamed(p: HalfOpenConvexPolygon, name: str) -> HalfOpenConvexPolygon:
    return HalfOpenConvexPolygon(p.vertices, p.edge_closed, p.vertex_included, name=name)


@lru_cache(maxsize=None)
def hitting_partition() -> dict:
    """Cells of ``L`` keyed by the first hitting time of ``L'`` (0..5 or None)."""
    w2 = omega() ** -2
    L = lozenge()
    lp = L.map(w2, Cyclo.zero(), name="Lprime")
    table: dict = {}
    for cell in hitting_cells(L, lp, 0, 5):
        table.setdefault(cell.hit, []).append(cell)
    return table


@lru_cache(maxsize=None)
def return_partition() -> dict:
    """Cells of ``L'`` keyed by the first return time to ``L'``."""
    w2 = omega() ** -2
    lp = lozenge().map(w2, Cyclo.zero(), name="Lprime")
    table: dict = {}
    for cell in hitting_cells(lp, lp, 1, 6):
        table.setdefault(cell.hit, []).append(cell)
    return table


def _pieces(polys, name):
    return [_renamed(p, name) for p in merge_all(polys)]


def _single(polys, name):
    merged = merge_all(polys)
    if len(merged) != 1:
        raise PolygonError(f"{name} did not merge into one convex polygon ({len(merged)} pieces)")
    return _renamed(merged[0], name)


@lru_cache(maxsize=None)
def build_named_regions() -> dict:
    """Construct every named region exactly.

    Keys: ``L, Delta, Z, TZ, Lprime, P0, P1, P2, K, D0`` plus the
    return-time cells of ``L'``: ``Triangle1`` (time 1, equal to
    ``omega^-2 Delta``), ``Deltaprime`` (time 3, an open pentagon) and
    ``D`` (time 6), and their images ``T1D`` .. ``T5D``,
    ``T1Deltaprime``, ``T2Deltaprime``.  Together with ``L'`` and the
    three period pentagons these images tile ``L``.
    """
    z = zeta()
    zi = z.inverse()
    w = omega()
    zero, one = Cyclo.zero(), Cyclo.one()
    L = lozenge()
    delta = HalfOpenConvexPolygon([zero, z, -zi], [True, False, True], name="Delta")
    trap = HalfOpenConvexPolygon([zero, one, one - zi, z], [True, False, False, False], name="Z")
    tz = trap.map(*piece_maps()[1], name="TZ")
    lp = L.map(w ** -2, zero, name="Lprime")

    table = {}

    def put(name, polys, desc=""):
        table[name] = NamedRegion(name, tuple(polys), desc)

    put("L", [L], "lozenge [0,1) + (-1/zeta)[0,1)")
    put("Delta", [delta], "triangle Im(x/zeta) >= 0 inside L")
    put("Z", [trap], "trapezoid L minus Delta")
    put("TZ", [tz], "image of the trapezoid")
    put("Lprime", [lp], "omega^-2 L")

    hits = hitting_partition()
    never = [c.polygon for c in hits.get(None, [])]
    centres = {"P0": period5_centre(), "P1": period10_centre(), "P2": period10_centre() / z}
    for name, c in centres.items():
        mine = [p for p in never if p.contains_closure(c)]
        put(name, [_single(mine, name)], "period pentagon")

    ret = return_partition()
    put("Triangle1", [_single([c.polygon for c in ret[1]], "Triangle1")], "return time 1")
    put("Deltaprime", [_single([c.polygon for c in ret[3]], "Deltaprime")], "return time 3")
    put("D", _pieces([c.polygon for c in ret[6]], "D"), "return time 6")
    for k in range(1, 6):
        put(f"T{k}D", _pieces(image_under_T(table["D"].polygons, k), f"T{k}D"), f"T^{k}(D)")
    for k in (1, 2):
        put(f"T{k}Deltaprime", _pieces(image_under_T(table["Deltaprime"].polygons, k), f"T{k}Deltaprime"),
            f"T^{k}(Deltaprime)")

    p0 = table["P0"].polygon
    put("D0", _pieces(tz.minus(p0), "D0"), "T(Z) minus P0")
    put("K", [osc_pentagon()], "pentagon for the open set condition")
    return table


def osc_pentagon() -> HalfOpenConvexPolygon:
    """The closed pentagon ``K`` carrying the open set condition of ``Y'``.

    Vertices: 0, -zeta^-2/omega, zeta, -1/zeta, -zeta/omega - 1/zeta.
    """
    z = zeta()
    zi = z.inverse()
    wi = omega().inverse()
    pts = [Cyclo.zero(), -zi * zi * wi, z, -zi, -z * wi - zi]
    return HalfOpenConvexPolygon(pts, name="K")


def printed_k_vertices() -> list:
    """The vertex list 0, -1/zeta, zeta, -zeta/omega - 1/zeta, -zeta^2/omega as
    often quoted.  Here 0 is the midpoint of the last two points, so these
    five points do not span a pentagon; :func:`osc_pentagon` uses
    -zeta^-2/omega in place of -zeta^2/omega.
    """
    z = zeta()
    zi = z.inverse()
    wi = omega().inverse()
    return [Cyclo.zero(), -zi, z, -z * wi - zi, -z * z * wi]


_ALIASES = {"Δ": "Delta", "𝒵": "Z", "T𝒵": "TZ", "T(Z)": "TZ", "L′": "Lprime", "L'": "Lprime",
            "D₀": "D0", "P₀": "P0", "P₁": "P1", "P₂": "P2", "Δ′": "Deltaprime"}


def named_region(name: str) -> NamedRegion:
    regions = build_named_regions()
    key = _ALIASES.get(name, name)
    if key not in regions:
        raise KeyError(f"unknown region {name!r}")
    return regions[key]


@dataclass
class PartitionReport:
    checked: int = 0
    violations: list = field(default_factory=list)  # (sample, list of part indices)

    @property
    def ok(self) -> bool:
        return not self.violations


def partition_check(parts, universe, samples) -> PartitionReport:
    """Check that every sample of ``universe`` lies in exactly one part."""
    def member(r, x):
        return r.contains(x)

    report = PartitionReport()
    for x in samples:
        if not member(universe, x):
            continue
        report.checked += 1
        hits = [i for i, r in enumerate(parts) if member(r, x)]
        if len(hits) != 1:
            report.violations.append((x, hits))
    return report
