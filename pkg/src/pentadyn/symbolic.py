"""Codings, substitutions, addresses and the open-edge automaton.

Words are plain strings: ``"0110"`` over {0,1}, ``"abaa"`` over {a,b},
``"0235"`` for addresses over the digits {d0, d2, d3, d5} and ``"0123"``
for sequences of substitution indices.  Eventually periodic infinite
words are lassos ``(u, v)`` meaning ``u v v v ...``; their text form is
``"u|v"``.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache

from .cyclo import Cyclo, digits, omega, real_part_quad, zeta
from .dynamics import (
    _as_point,
    _in_delta,
    _require_L,
    _T,
    classify,
    ttilde_itinerary,
)
from .regions import HalfOpenConvexPolygon, cross_sign, named_region, osc_pentagon

__all__ = [
    "Lasso",
    "SadicError",
    "coding_d",
    "coding_dtilde",
    "ab_to_01",
    "SIGMA",
    "apply_substitution",
    "sadic_compose",
    "sigma0_fixed_point",
    "sadic_decompose",
    "KAPPA",
    "XI",
    "address_of",
    "address_lasso",
    "eval_address",
    "ifs_map",
    "cylinder_polygon",
    "CUT_POINT_PAIRS",
    "AutomatonGraph",
    "build_edge_automaton",
    "accepts_lasso",
    "suffix_in_graph",
    "forbidden_graph",
    "classify_multiplicative",
    "digits_to_sigma",
    "sigma_to_digits",
]

ESSENTIAL_DIGITS = (0, 2, 3, 5)


@dataclass(frozen=True)
class Lasso:
    """The infinite word ``u v v v ...``."""

    u: str
    v: str

    def __post_init__(self):
        if not self.v:
            raise ValueError("the periodic part of a lasso must be nonempty")

    @classmethod
    def parse(cls, text: str) -> "Lasso":
        if "|" not in text:
            raise ValueError(f"lasso {text!r} needs the form 'u|v'")
        u, v = text.split("|", 1)
        return cls(u.strip(), v.strip())

    def prefix(self, n: int) -> str:
        out = self.u
        while len(out) < n:
            out += self.v
        return out[:n]

    def __str__(self):
        return f"{self.u}|{self.v}"


class SadicError(ValueError):
    def __init__(self, message, position):
        super().__init__(f"{message} (position {position})")
        self.position = position


# ---------------------------------------------------------------------------
# codings


def coding_d(x, n: int) -> str:
    """``psi(T^k x)`` for ``k < n``: 0 on Delta, 1 on the trapezoid."""
    if n < 1:
        raise ValueError("length must be positive")
    x = _as_point(x)
    p, M = _require_L(x)
    out = []
    for _ in range(n):
        out.append("0" if _in_delta(p) else "1")
        p = _T(p, M)
    return "".join(out)


def coding_dtilde(x, n: int) -> str:
    """Coding of the T~-orbit of ``x`` in T(Z) by ``a`` (Delta) and ``b``."""
    if n < 1:
        raise ValueError("length must be positive")
    return ttilde_itinerary(x, n)


def ab_to_01(word: str) -> str:
    return word.translate(_AB01)


_AB01 = str.maketrans({"a": "01", "b": "1"})


# ---------------------------------------------------------------------------
# substitutions

SIGMA = (
    {"a": "aaba", "b": "baba"},
    {"a": "aaab", "b": "abab"},
    {"a": "baaa", "b": "baba"},
    {"a": "abaa", "b": "abab"},
)
_SIGMA_TABLES = tuple(str.maketrans(s) for s in SIGMA)

#: prefixes y in {lambda, a, ba, aba} indexed by kappa(y)
KAPPA = ("", "a", "ba", "aba")
#: digit attached to each prefix, indexed by kappa(y)
XI = (0, 2, 3, 5)


def digits_to_sigma(word: str) -> str:
    """Address digits ``0235`` to substitution indices ``0123``."""
    return "".join(str(XI.index(int(c))) for c in word)


def sigma_to_digits(word: str) -> str:
    return "".join(str(XI[int(c)]) for c in word)


def apply_substitution(i: int, word: str) -> str:
    if i not in range(4):
        raise ValueError("substitution index must be 0..3")
    if set(word) - {"a", "b"}:
        raise ValueError("substitutions act on words over {a, b}")
    return word.translate(_SIGMA_TABLES[i])


def sadic_compose(indices, tail: str) -> str:
    """``sigma_{m1} o ... o sigma_{ml}(tail)`` on finite words."""
    word = tail
    for i in reversed(list(indices)):
        word = apply_substitution(int(i), word)
    return word


def sigma0_fixed_point(n: int) -> str:
    """Prefix of length ``n`` of ``lim sigma0^k(a)``."""
    word = "a"
    while len(word) < n:
        word = apply_substitution(0, word)
    return word[:n]


def _phase(word: str):
    """Phases k in 0..3 with word = y sigma0(z), |y| = k, checked on ``word``."""
    found = []
    for k in range(4):
        if word[:k] != "aba"[3 - k:]:
            continue
        if (set(word[k + 1::4]) <= {"a"} and set(word[k + 2::4]) <= {"b"}
                and set(word[k + 3::4]) <= {"a"}):
            found.append(k)
    return found


def sadic_decompose(word: str, min_length: int = 6):
    """Recover ``(m1, m2, ...)`` with ``word = sigma_{m1} o sigma_{m2} o ...(tail)``.

    Each level strips the prefix ``y in {lambda, a, ba, aba}`` and reads the
    free letters of the four-letter blocks ``?aba``.  Decoding stops when
    the remaining word is shorter than ``min_length`` or its phase is no
    longer determined.  Returns ``(indices, consumed)`` where ``consumed``
    is the number of letters of ``word`` explained by the recovered levels.
    Raises :class:`SadicError` when the first level has no valid phase.
    """
    if set(word) - {"a", "b"}:
        raise ValueError("words over {a, b} only")
    indices = []
    cur = word
    scale = 1
    consumed = 0
    offset = 0
    while len(cur) >= min_length:
        ks = _phase(cur)
        if not ks and indices:
            break
        if not ks:
            bad = _first_violation(cur)
            raise SadicError("not a prefix of an S-adic limit", offset + bad * scale)
        if len(ks) > 1:
            break
        k = ks[0]
        indices.append(k)
        consumed = len(word)
        offset += k * scale
        scale *= 4
        cur = cur[k::4]
    return indices, consumed if indices else 0


def _first_violation(word: str) -> int:
    best = 0
    for k in range(4):
        pos = len(word)
        for j in range(k, len(word) - 3, 4):
            if word[j + 1:j + 4] != "aba":
                pos = j + 1
                break
        best = max(best, pos)
    return best


# ---------------------------------------------------------------------------
# addresses


@lru_cache(maxsize=None)
def ifs_map(m: int) -> tuple:
    """``(a, b)`` of the contraction ``y -> zeta^m/omega^2 * y + d_m``."""
    return zeta(5, m) * omega() ** -2, digits()[m]


def address_of(x, n: int):
    """First ``n`` digit indices along the S-orbit of ``x``.

    Returns ``(word, truncated)``; ``truncated`` is True when the S-orbit
    ends (periodic point) before ``n`` digits.
    """
    cert = classify(x)
    ms = list(cert.digits)
    if cert.periodic:
        return "".join(map(str, ms[:n])), len(ms) < n
    k, ell = cert.preperiod, cert.cycle
    while len(ms) < n:
        ms.append(ms[k + (len(ms) - k) % ell])
    return "".join(map(str, ms[:n])), False


def address_lasso(x):
    """The exact address of an aperiodic point as a lasso, else ``None``."""
    cert = classify(x)
    if cert.periodic:
        return None
    ms = "".join(map(str, cert.digits))
    k = cert.preperiod
    return Lasso(ms[:k], ms[k:k + cert.cycle])


def _compose(word):
    a, b = Cyclo.one(), Cyclo.zero()
    for c in word:
        am, bm = ifs_map(int(c))
        a, b = a * am, a * bm + b
    return a, b


def eval_address(u, v: str | None = None):
    """Point with address ``u v v v ...`` (exact); with ``v`` omitted, the cylinder of ``u``.

    ``u`` may also be a :class:`Lasso` or its ``"u|v"`` text.
    """
    if isinstance(u, Lasso):
        u, v = u.u, u.v
    elif v is None and isinstance(u, str) and "|" in u:
        lasso = Lasso.parse(u)
        u, v = lasso.u, lasso.v
    if v is None:
        return cylinder_polygon(u)
    if not v:
        raise ValueError("empty periodic part")
    av, bv = _compose(v)
    fixed = bv / (Cyclo.one() - av)
    au, bu = _compose(u)
    return au * fixed + bu


def cylinder_polygon(u: str, base: HalfOpenConvexPolygon | None = None) -> HalfOpenConvexPolygon:
    """``f_u(K)``: a polygon containing the cylinder ``[u]`` of diameter ~ omega^(-2|u|)."""
    base = osc_pentagon() if base is None else base
    a, b = _compose(u)
    return base.map(a, b, name=f"[{u}]")


#: pairs of addresses of the same cut point
CUT_POINT_PAIRS = (
    (Lasso("02", "0"), Lasso("33", "5")),
    (Lasso("3", "0"), Lasso("2", "5")),
    (Lasso("22", "0"), Lasso("53", "5")),
)


# ---------------------------------------------------------------------------
# the open-edge automaton


@dataclass
class AutomatonGraph:
    """Nondeterministic Buchi automaton over the digits {0, 2, 3, 5}."""

    states: list
    initial: str
    edges: list  # (source, label, target)
    final: set
    entries: set = field(default_factory=set)

    def successors(self, state, label=None):
        return [t for s, l, t in self.edges if s == state and (label is None or l == label)]

    def adjacency(self, states=None):
        states = self.states if states is None else states
        idx = {s: i for i, s in enumerate(states)}
        mat = [[0] * len(states) for _ in states]
        for s, _, t in self.edges:
            if s in idx and t in idx:
                mat[idx[s]][idx[t]] += 1
        return mat

    def spectral_radius(self, include_initial: bool = False) -> float:
        """Spectral radius of the adjacency matrix (growth rate of path counts).

        The initial state's self-loops read arbitrary prefixes, so it is left
        out by default: what is measured is the open-edge graph itself.
        """
        import numpy as np

        states = self.states if include_initial else [s for s in self.states if s != self.initial]
        mat = np.array(self.adjacency(states), dtype=float)
        return float(max(abs(np.linalg.eigvals(mat))))

    def to_json(self) -> dict:
        return {
            "schema": 1,
            "states": list(self.states),
            "initial": self.initial,
            "final": sorted(self.final),
            "entries": sorted(self.entries),
            "edges": [list(e) for e in sorted(self.edges)],
        }

    def to_dot(self) -> str:
        lines = ["digraph automaton {", "  rankdir=LR;", '  start [shape=point];',
                 f'  start -> "{self.initial}";']
        for s in self.states:
            shape = "doublecircle" if s in self.final else "circle"
            lines.append(f'  "{s}" [shape={shape}];')
        grouped: dict = {}
        for s, l, t in self.edges:
            grouped.setdefault((s, t), []).append(l)
        for (s, t), labels in sorted(grouped.items()):
            lines.append(f'  "{s}" -> "{t}" [label="{",".join(sorted(labels))}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _on_segment(p: Cyclo, a: Cyclo, b: Cyclo) -> bool:
    if cross_sign(b - a, p - a) != 0:
        return False
    t = real_part_quad((p - a) * (b - a).conjugate())
    full = real_part_quad((b - a) * (b - a).conjugate())
    return t.sign() >= 0 and (full - t).sign() >= 0


def _open_edges_of_D0():
    """The two open boundary segments of D0 as exact endpoint pairs.

    Shared edges between the convex pieces of D0 are interior and skipped;
    the remaining open edges are merged when collinear and adjacent.
    """
    pieces = named_region("D0").polygons
    segs = []
    for poly in pieces:
        for a, b, closed in poly.edges():
            shared = any(
                other is not poly and _on_segment(a, c, d) and _on_segment(b, c, d)
                for other in pieces for c, d, _ in other.edges()
            )
            if not closed and not shared:
                segs.append((a, b))
    merged = True
    while merged:
        merged = False
        for i in range(len(segs)):
            for j in range(len(segs)):
                if i != j and segs[i][1] == segs[j][0] and cross_sign(
                        segs[i][1] - segs[i][0], segs[j][1] - segs[j][0]) == 0:
                    segs[i] = (segs[i][0], segs[j][1])
                    del segs[j]
                    merged = True
                    break
            if merged:
                break
    return segs


def _edge_names(poly: HalfOpenConvexPolygon):
    """Indices of the K edges carrying the open edges of D0, named L/R by position."""
    opens = _open_edges_of_D0()
    if len(opens) != 2:
        raise RuntimeError(f"expected two open edges of D0, found {len(opens)}")
    edges = list(poly.edges())
    found = []
    for a, b in opens:
        hits = [i for i, (c, d, _) in enumerate(edges) if _on_segment(a, c, d) and _on_segment(b, c, d)]
        if len(hits) != 1:
            raise RuntimeError("open edge of D0 is not on a single edge of K")
        found.append(hits[0])
    # the right edge has the larger midpoint abscissa
    mid = [complex(edges[i][0] + edges[i][1]).real for i in found]
    right, left = (found[0], found[1]) if mid[0] > mid[1] else (found[1], found[0])
    return {"R": right, "L": left}


def _edge_composition(poly, names):
    """For each named edge X: the (digit, name) pairs with f_digit(edge name) inside edge X."""
    edges = list(poly.edges())
    comp = {}
    for x, i in names.items():
        a, b, _ = edges[i]
        parts = []
        for m in ESSENTIAL_DIGITS:
            am, bm = ifs_map(m)
            for y, j in names.items():
                c, d, _ = edges[j]
                fc, fd = am * c + bm, am * d + bm
                if _on_segment(fc, a, b) and _on_segment(fd, a, b):
                    parts.append((m, y))
        comp[x] = parts
    return comp


def _inside_some_edge(poly, m, name, names):
    edges = list(poly.edges())
    c, d, _ = edges[names[name]]
    am, bm = ifs_map(m)
    fc, fd = am * c + bm, am * d + bm
    return any(_on_segment(fc, a, b) and _on_segment(fd, a, b) for a, b, _ in edges)


@lru_cache(maxsize=None)
def _derived_automaton():
    K = osc_pentagon()
    names = _edge_names(K)
    comp = _edge_composition(K, names)
    states = [f"{m}{x}" for x in ("L", "R") for m in ESSENTIAL_DIGITS]
    edges = []
    for st in states:
        x = st[1]
        for m, y in comp[x]:
            edges.append((st, str(m), f"{m}{y}"))
    final = {t for _, _, t in edges}
    # an open edge of a subpiece enters the automaton when it is not part of
    # the parent's boundary: such an edge borders a removed pentagon
    entries = {f"{m}{x}" for m in ESSENTIAL_DIGITS for x in ("L", "R")
               if not _inside_some_edge(K, m, x, names)}
    init = "I"
    for d in ESSENTIAL_DIGITS:
        edges.append((init, str(d), init))
    for st in sorted(entries):
        edges.append((init, st[0], st))
    return [init] + states, init, edges, final, entries


def build_edge_automaton() -> AutomatonGraph:
    """Open-edge automaton derived from the exact subdivision of K.

    State ``mX`` means: the point lies on the ``X`` (left/right) open edge
    of the current piece, reached through digit ``m``.  The ``X`` edge of
    a piece is the union of the subpiece edges listed by the exact
    segment-containment oracle, which gives the transitions; the entry
    states are subpiece edges lying inside the parent (they border a
    removed pentagon).
    """
    states, init, edges, final, entries = _derived_automaton()
    aut = AutomatonGraph(list(states), init, list(edges), set(final), set(entries))
    if not {"3L", "0R"} <= {t for s, _, t in aut.edges if s == "5R"}:
        raise RuntimeError("derived automaton lacks the rule 5R -> 3L, 0R")
    return aut


def _lasso_args(u, v):
    if isinstance(u, Lasso):
        return u.u, u.v
    if v is None:
        lasso = Lasso.parse(u)
        return lasso.u, lasso.v
    return u, v


def accepts_lasso(automaton: AutomatonGraph, u, v: str | None = None) -> bool:
    """Buchi acceptance of ``u v^omega``: some run visits a final state infinitely often."""
    u, v = _lasso_args(u, v)
    if not v:
        return False
    cur = {automaton.initial}
    for c in u:
        cur = {t for s in cur for t in automaton.successors(s, c)}
    n = len(v)

    def nxt(node):
        s, i = node
        return [(t, (i + 1) % n) for t in automaton.successors(s, v[i])]

    start = {(s, 0) for s in cur}
    seen = set(start)
    queue = deque(start)
    while queue:
        node = queue.popleft()
        for t in nxt(node):
            if t not in seen:
                seen.add(t)
                queue.append(t)
    for node in seen:
        if node[0] not in automaton.final:
            continue
        # is there a nonempty cycle through this final node?
        stack = list(nxt(node))
        visited = set()
        while stack:
            w = stack.pop()
            if w == node:
                return True
            if w in visited:
                continue
            visited.add(w)
            stack.extend(nxt(w))
    return False


def _final_rule(automaton: AutomatonGraph):
    """Allowed consecutive letter pairs inside the final part of the automaton."""
    allowed = set()
    for s, lab, t in automaton.edges:
        if s in automaton.final and t in automaton.final:
            allowed.add((s[0], lab))
    return allowed


def suffix_in_graph(u, v: str | None = None, automaton: AutomatonGraph | None = None) -> bool:
    """True iff some suffix of ``u v^omega`` is read along the final part of the graph.

    A walk may start at any vertex; this is the "ends up in the graph"
    reading of the open-edge figure.
    """
    u, v = _lasso_args(u, v)
    if not v:
        return False
    aut = build_edge_automaton() if automaton is None else automaton
    allowed = _final_rule(aut)
    n = len(v)
    return all((v[i], v[(i + 1) % n]) in allowed for i in range(n))


def forbidden_graph() -> AutomatonGraph:
    """The open-edge graph relabelled by substitution indices (0->0, 2->1, 3->2, 5->3)."""
    aut = build_edge_automaton()
    ren = {str(d): str(i) for i, d in enumerate(XI)}

    def st(s):
        return s if s == aut.initial else ren[s[0]] + s[1]

    return AutomatonGraph(
        [st(s) for s in aut.states], aut.initial,
        [(st(s), ren[l], st(t)) for s, l, t in aut.edges],
        {st(s) for s in aut.final}, {st(s) for s in aut.entries},
    )


def classify_multiplicative(u, v: str | None = None) -> str:
    """``"periodic-suffix"`` if a suffix of the sigma-index lasso lies in the forbidden graph."""
    u, v = _lasso_args(u, v)
    if set(u + v) - set("0123"):
        raise ValueError("multiplicative codings use the indices 0..3")
    return "periodic-suffix" if suffix_in_graph(sigma_to_digits(u), sigma_to_digits(v)) else "aperiodic"


def golden_automaton_path():
    from importlib import resources

    return resources.files("pentadyn") / "data" / "edge_automaton.json"


def load_golden_automaton() -> dict:
    return json.loads(golden_automaton_path().read_text())
