"""The pentagonal piecewise isometry and its renormalisation.

``T`` acts on the lozenge ``L = [0,1) + (-1/zeta)[0,1)`` by

    T(x) = x/zeta        if Im(x/zeta) >= 0   (triangle Delta)
    T(x) = (x - 1)/zeta  otherwise            (trapezoid Z)

Writing ``x = s - t/zeta`` with ``s, t`` in Q(omega), ``T`` becomes
``(s, t) -> (t, t/omega - s + eps)`` with ``eps = 0`` on Delta and 1 on Z.
That is exactly the recurrence ``a_{n+2} = -a_n - floor(omega a_{n+1})``
acting on ``(<omega a_n>, <omega a_{n+1}>)``.  All the heavy iteration runs
on integer tuples ``(sa, sb, ta, tb)`` over a fixed denominator ``M``
(``s = (sa + sb*omega)/M``); the maps involved never change ``M``.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .cyclo import (
    Cyclo,
    QuadReal,
    digits,
    embed,
    from_lozenge_coordinates,
    galois,
    lozenge_coordinates,
    omega,
    parse_cyclo,
    zeta,
)
from .regions import named_region

__all__ = [
    "NotInDomainError",
    "ConsistencyError",
    "Undefined",
    "HitResult",
    "OrbitCertificate",
    "RecurrenceReport",
    "step_T",
    "step_T_inv",
    "first_return_Lprime",
    "first_hit_U",
    "step_S",
    "step_Ttilde",
    "step_That",
    "ttilde_itinerary",
    "step_Ttilde_induced",
    "self_inducing_check",
    "sample_L",
    "orbit_T",
    "classify",
    "period",
    "APERIODIC",
    "enumerate_B",
    "b_bound",
    "recurrence_check",
    "conjugate_bound_check",
]


class NotInDomainError(ValueError):
    """The point is outside the domain of the map."""


class ConsistencyError(AssertionError):
    """An internal cross-check failed; this indicates a bug."""


class _UndefinedType:
    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "Undefined"

    def __bool__(self):
        return False


Undefined = _UndefinedType()


class _Aperiodic:
    def __repr__(self):
        return "APERIODIC"


APERIODIC = _Aperiodic()


# ---------------------------------------------------------------------------
# integer kernel


def _sgn(a: int, b: int) -> int:
    """Sign of a + b*omega for integers a, b."""
    p, q = 2 * a + b, b  # 2(a + b omega) = p + q sqrt5
    if p >= 0 and q >= 0:
        return 0 if p == 0 and q == 0 else 1
    if p <= 0 and q <= 0:
        return -1
    d = p * p - 5 * q * q
    if d == 0:
        return 0
    return (1 if d > 0 else -1) * (1 if p > 0 else -1)


def _to_kernel(x: Cyclo):
    if x.n != 5:
        raise NotInDomainError("the pentagonal map lives in Q(zeta_5)")
    s, t = lozenge_coordinates(x)
    M = 1
    for v in (s.a, s.b, t.a, t.b):
        M = M * v.denominator // math.gcd(M, v.denominator)
    return (int(s.a * M), int(s.b * M), int(t.a * M), int(t.b * M)), M


def _from_kernel(p, M: int) -> Cyclo:
    sa, sb, ta, tb = p
    return from_lozenge_coordinates(QuadReal(Fraction(sa, M), Fraction(sb, M)),
                                    QuadReal(Fraction(ta, M), Fraction(tb, M)))


def _in_L(p, M) -> bool:
    sa, sb, ta, tb = p
    return (_sgn(sa, sb) >= 0 and _sgn(M - sa, -sb) > 0
            and _sgn(ta, tb) >= 0 and _sgn(M - ta, -tb) > 0)


def _in_Lprime(p, M) -> bool:
    # 0 <= s, t < omega^-2 = 2 - omega
    sa, sb, ta, tb = p
    return (_sgn(sa, sb) >= 0 and _sgn(2 * M - sa, -M - sb) > 0
            and _sgn(ta, tb) >= 0 and _sgn(2 * M - ta, -M - tb) > 0)


def _in_delta(p) -> bool:
    # Im(x/zeta) >= 0  <=>  t - omega*s >= 0
    sa, sb, ta, tb = p
    return _sgn(ta - sb, tb - sa - sb) >= 0


def _in_TZ(p) -> bool:
    # T(Z) = {omega*t > s}
    sa, sb, ta, tb = p
    return _sgn(tb - sa, ta + tb - sb) > 0


def _rot(p):
    """Linear part of x -> x/zeta."""
    sa, sb, ta, tb = p
    return (ta, tb, tb - ta - sa, ta - sb)


def _rot_inv(p):
    """Linear part of x -> zeta*x."""
    sa, sb, ta, tb = p
    return (sb - sa - ta, sa - tb, sa, sb)


def _T(p, M):
    q = _rot(p)
    if _in_delta(p):
        return q
    return (q[0], q[1], q[2] + M, q[3])


def _T_inv(p, M):
    q = _rot_inv(p)
    if _in_TZ(p):
        return (q[0] + M, q[1], q[2], q[3])
    return q


def _mul_w2(p):
    return tuple(v for a, b in ((p[0], p[1]), (p[2], p[3])) for v in (a + b, a + 2 * b))


def _mul_w2_inv(p):
    return tuple(v for a, b in ((p[0], p[1]), (p[2], p[3])) for v in (2 * a - b, b - a))


@lru_cache(maxsize=None)
def _digit_offsets() -> tuple:
    """Integer lozenge coordinates of ``-d_m / zeta^m`` for m = 0..5."""
    out = []
    zi = zeta(5, -1)
    for m, d in enumerate(digits()):
        c, M = _to_kernel(-d * zi ** m)
        if M != 1:
            raise ConsistencyError("digit offsets must be integral")
        out.append(c)
    return tuple(out)


def _closed_form(p, M, m):
    q = p
    for _ in range(m):
        q = _rot(q)
    off = _digit_offsets()[m]
    return tuple(a + M * b for a, b in zip(q, off))


def _hit(p, M, check=True):
    """(m, U(p)) or None, iterating T at most five times."""
    q = p
    for m in range(6):
        if _in_Lprime(q, M):
            if check and _closed_form(p, M, m) != q:
                raise ConsistencyError(f"hitting value disagrees with the digit formula (m={m})")
            return m, q
        q = _T(q, M)
    return None


def _S(p, M, check=True):
    h = _hit(p, M, check)
    if h is None:
        return None
    return _mul_w2(h[1])


def _period_direct(p, M, cap):
    q = _T(p, M)
    n = 1
    while q != p:
        if n >= cap:
            return None
        q = _T(q, M)
        n += 1
    return n


def _return_time(p, M):
    q = _T(p, M)
    n = 1
    while not _in_Lprime(q, M):
        q = _T(q, M)
        n += 1
        if n > 6:
            raise ConsistencyError("return time to L' exceeded 6")
    return n


# ---------------------------------------------------------------------------
# public maps


def _require_L(x: Cyclo):
    p, M = _to_kernel(x)
    if not _in_L(p, M):
        raise NotInDomainError(f"{x!r} is not in L")
    return p, M


def _as_point(x) -> Cyclo:
    if isinstance(x, Cyclo):
        return x
    if isinstance(x, str):
        return parse_cyclo(x, 5)
    return Cyclo.from_rational(5, x)


def step_T(x) -> Cyclo:
    x = _as_point(x)
    p, M = _require_L(x)
    return _from_kernel(_T(p, M), M)


def step_T_inv(y) -> Cyclo:
    y = _as_point(y)
    p, M = _require_L(y)
    return _from_kernel(_T_inv(p, M), M)


def orbit_T(x, steps: int) -> list:
    """``[x, T(x), ..., T^steps(x)]``."""
    x = _as_point(x)
    p, M = _require_L(x)
    out = [p]
    for _ in range(steps):
        p = _T(p, M)
        out.append(p)
    return [_from_kernel(q, M) for q in out]


def first_return_Lprime(x) -> tuple:
    """``(T^m(x), m)`` for the first return of ``x`` in ``L'`` to ``L'``."""
    x = _as_point(x)
    p, M = _to_kernel(x)
    if not _in_Lprime(p, M):
        raise NotInDomainError(f"{x!r} is not in L'")
    q = _T(p, M)
    m = 1
    while not _in_Lprime(q, M):
        q = _T(q, M)
        m += 1
        if m > 6:
            raise ConsistencyError("return time to L' exceeded 6")
    return _from_kernel(q, M), m


def step_That(x) -> Cyclo:
    return first_return_Lprime(x)[0]


@dataclass(frozen=True)
class HitResult:
    steps: int
    value: Cyclo

    @property
    def digit_index(self) -> int:
        return self.steps

    @property
    def digit(self) -> Cyclo:
        return digits()[self.steps]


def first_hit_U(x):
    """First hitting of ``L'``: a :class:`HitResult` or ``Undefined``.

    The value is cross-checked against ``(x - d_m)/zeta^m``; when no hit
    occurs within five steps the point must lie in a period pentagon.
    """
    x = _as_point(x)
    p, M = _require_L(x)
    h = _hit(p, M)
    if h is None:
        if not any(named_region(n).contains(x) for n in ("P0", "P1", "P2")):
            raise ConsistencyError(f"U undefined outside the period pentagons at {x!r}")
        return Undefined
    m, q = h
    value = _from_kernel(q, M)
    if value != (x - digits()[m]) / zeta(5, m):
        raise ConsistencyError("closed form of U disagrees")
    return HitResult(m, value)


def step_S(x):
    h = first_hit_U(x)
    if h is Undefined:
        return Undefined
    return omega() ** 2 * h.value


def step_Ttilde(x) -> Cyclo:
    """First return map of ``T`` to ``T(Z)``: ``T^2`` on Delta, ``T`` elsewhere."""
    x = _as_point(x)
    p, M = _to_kernel(x)
    if not (_in_L(p, M) and _in_TZ(p)):
        raise NotInDomainError(f"{x!r} is not in T(Z)")
    steps = 2 if _in_delta(p) else 1
    q = p
    for k in range(steps):
        q = _T(q, M)
        if k < steps - 1 and _in_TZ(q):
            raise ConsistencyError("early return to T(Z)")
    if not _in_TZ(q):
        raise ConsistencyError("T~ left T(Z)")
    return _from_kernel(q, M)


def _ttilde(p, M):
    return _T(_T(p, M), M) if _in_delta(p) else _T(p, M)


def step_Ttilde_induced(y, max_steps: int = 64) -> Cyclo:
    """First return of ``T~`` to ``omega^-2 T(Z)``."""
    y = _as_point(y)
    p, M = _to_kernel(y)

    def inside(q):
        r = _mul_w2(q)
        return _in_L(r, M) and _in_TZ(r)

    if not inside(p):
        raise NotInDomainError(f"{y!r} is not in omega^-2 T(Z)")
    q = _ttilde(p, M)
    for _ in range(max_steps):
        if inside(q):
            return _from_kernel(q, M)
        q = _ttilde(q, M)
    raise ConsistencyError("no return to omega^-2 T(Z)")


def self_inducing_check(x) -> tuple:
    """``(omega^2 T^(omega^-2 x) == T(x), omega^2 T~ind(omega^-2 x) == T~(x))``.

    The second entry is None when ``x`` is outside T(Z).
    """
    x = _as_point(x)
    w2 = omega() ** 2
    first = w2 * step_That(x / w2) == step_T(x)
    p, M = _to_kernel(x)
    if not (_in_L(p, M) and _in_TZ(p)):
        return first, None
    return first, w2 * step_Ttilde_induced(x / w2) == step_Ttilde(x)


def sample_L(n: int, seed: int = 0, boundary_share: float = 0.25, denominators=(2, 3, 5, 7, 10, 12, 60, 97)) -> list:
    """Deterministic sample of points of L with coordinates in (1/M)Z[omega].

    About ``boundary_share`` of them lie on region boundaries: the closed
    edges of L, the line through 0 and zeta bounding Delta, the line
    bounding T(Z), and the shrunken copies of these lines in L'.
    """
    import random

    rng = random.Random(seed)
    w = QuadReal.omega()
    out = []

    def rand_q(M):
        return QuadReal(Fraction(rng.randrange(-4 * M, 4 * M), M), Fraction(rng.randrange(-4 * M, 4 * M), M)).frac()

    while len(out) < n:
        M = rng.choice(denominators)
        s, t = rand_q(M), rand_q(M)
        if rng.random() < boundary_share:
            kind = rng.randrange(5)
            if kind == 0:
                s = QuadReal(0)
            elif kind == 1:
                t = QuadReal(0)
            elif kind == 2:  # t = omega s (edge of Delta)
                t = w * s
            elif kind == 3:  # s = omega t (edge of T(Z))
                s = w * t
            else:  # the same lines scaled into L'
                s = s / (w * w)
                t = w * s
        if not (QuadReal(0) <= s < 1 and QuadReal(0) <= t < 1):
            continue
        out.append(from_lozenge_coordinates(s, t))
    return out


def ttilde_itinerary(x, steps: int) -> str:
    """Letters ``a`` (two T-steps, through Delta) / ``b`` (one step) of T~."""
    x = _as_point(x)
    p, M = _to_kernel(x)
    if not (_in_L(p, M) and _in_TZ(p)):
        raise NotInDomainError(f"{x!r} is not in T(Z)")
    out = []
    for _ in range(steps):
        if _in_delta(p):
            out.append("a")
            p = _T(_T(p, M), M)
        else:
            out.append("b")
            p = _T(p, M)
    return "".join(out)


# ---------------------------------------------------------------------------
# periodicity decision


@dataclass
class OrbitCertificate:
    """Outcome of :func:`classify` with exact witnesses."""

    point: Cyclo
    kind: str  # "Periodic" or "Aperiodic"
    period: int | None = None
    s_steps: int | None = None
    preperiod: int | None = None
    cycle: int | None = None
    witness_point: Cyclo | None = None
    s_orbit: list = field(default_factory=list)
    digits: list = field(default_factory=list)

    @property
    def periodic(self) -> bool:
        return self.kind == "Periodic"

    def to_json(self) -> dict:
        out = {"schema": 1, "point": self.point.to_string(), "kind": self.kind}
        if self.periodic:
            out["period"] = self.period
            out["s_steps"] = self.s_steps
        else:
            out["preperiod"] = self.preperiod
            out["cycle"] = self.cycle
        out["witness_point"] = self.witness_point.to_string() if self.witness_point is not None else None
        out["s_orbit"] = [y.to_string() for y in self.s_orbit]
        out["digits"] = list(self.digits)
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)

    def verify(self) -> bool:
        """Re-check the witness from scratch."""
        p, M = _to_kernel(self.point)
        if self.periodic and self.s_steps is None:
            return _T(p, M) == p and self.period == 1
        if self.periodic:
            q = p
            for _ in range(self.s_steps):
                q = _S(q, M)
                if q is None:
                    return False
            if _hit(q, M) is not None:
                return False
            r = p
            for _ in range(self.period):
                r = _T(r, M)
            return r == p
        orbit = [p]
        for _ in range(self.preperiod + self.cycle):
            nxt = _S(orbit[-1], M)
            if nxt is None:
                return False
            orbit.append(nxt)
        return orbit[self.preperiod] == orbit[self.preperiod + self.cycle]


def _s_orbit(p, M):
    """S-orbit of ``p`` until undefined or until it repeats."""
    seen = {p: 0}
    orbit = [p]
    ms = []
    while True:
        h = _hit(orbit[-1], M)
        if h is None:
            return orbit, ms, None
        ms.append(h[0])
        nxt = _mul_w2(h[1])
        if nxt in seen:
            return orbit, ms, seen[nxt]
        seen[nxt] = len(orbit)
        orbit.append(nxt)


def classify(x, period_cap: int = 10**6) -> OrbitCertificate:
    """Decide periodicity of the T-orbit of ``x`` in ``L`` exactly."""
    x = _as_point(x)
    p, M = _require_L(x)
    orbit, ms, back = _s_orbit(p, M)
    pts = [_from_kernel(q, M) for q in orbit]
    if back is not None and p == (0, 0, 0, 0):
        # the fixed point 0 is the one periodic point with an endless S-orbit
        # (S(0) = 0 and S(x) = 0 only for x = 0)
        return OrbitCertificate(x, "Periodic", period=1, s_steps=None,
                                witness_point=x, s_orbit=pts, digits=ms)
    if back is None:
        per = _period(p, M, period_cap)
        return OrbitCertificate(x, "Periodic", period=per, s_steps=len(orbit) - 1,
                                witness_point=pts[-1], s_orbit=pts, digits=ms)
    return OrbitCertificate(x, "Aperiodic", preperiod=back, cycle=len(orbit) - back,
                            witness_point=pts[back], s_orbit=pts, digits=ms)


def _period(p, M, cap):
    per = _period_direct(p, M, cap)
    if per is not None:
        return per
    # one renormalisation level: the T-orbit of x passes through U(x),
    # and pi(U(x)) is the sum of return times along the T-orbit of S(x)
    h = _hit(p, M)
    if h is None:
        raise ConsistencyError("points without a hit are in a period pentagon")
    y0 = _mul_w2(h[1])
    total = 0
    y = y0
    count = 0
    while True:
        total += _return_time(_mul_w2_inv(y), M)
        y = _T(y, M)
        count += 1
        if y == y0:
            return total
        if count > cap:
            raise OverflowError("period exceeds the iteration cap even after renormalising")


def period(x, cap: int = 10**6):
    """Least T-period of ``x``, or :data:`APERIODIC`."""
    cert = classify(x, period_cap=cap)
    return cert.period if cert.periodic else APERIODIC


# ---------------------------------------------------------------------------
# the finite test set B


@lru_cache(maxsize=None)
def b_bound() -> Fraction:
    """``A/(omega^2 - 1)`` with ``A = max |phi(d_i)|``, computed exactly.

    ``|phi(d_i)|^2`` lies in Q(omega); the maximum equals ``omega + 1`` so
    ``A = omega`` and the bound is 1.
    """
    w = QuadReal.omega()
    best = None
    for d in digits():
        u = galois(d, 2)
        sq = u * u.conjugate()
        c = sq.coeffs
        val = QuadReal(c[0], -c[2])
        if best is None or val > best:
            best = val
    if best != w + 1:
        raise ConsistencyError("max |phi(d)|^2 should be omega + 1")
    # A = omega, A/(omega^2 - 1) = omega/omega = 1
    return Fraction(1)


def _conj_norm_sq(s: QuadReal, t: QuadReal) -> QuadReal:
    """``|phi(s - t/zeta)|^2`` as an exact real number."""
    sc, tc = s.conjugate(), t.conjugate()
    return sc * sc + tc * tc + QuadReal.omega() * sc * tc


def enumerate_B(M: int) -> list:
    """All ``x`` in ``(1/M)Z[zeta] ∩ L`` with ``|phi(x)| <= 1``.

    Coordinates ``s = (a + b omega)/M`` satisfy ``0 <= s < 1`` and
    ``|s'| <= 1/sqrt(1 - omega^2/4) < 1.71`` for the conjugate ``s'``, so
    ``|b| <= M(1 + 1.71)/sqrt5`` and ``a`` lies in a window of width ``M``.
    """
    if M < 1:
        raise ValueError("M must be a positive integer")
    bound = b_bound()
    w = (1 + 5 ** 0.5) / 2
    cbound = 1.0 / math.sqrt(1 - w * w / 4) + 1e-9
    bmax = int(M * (1 + cbound) / math.sqrt(5)) + 1
    coords = []
    for b in range(-bmax, bmax + 1):
        lo = math.floor(-b * w) - 1
        hi = math.ceil(M - b * w) + 1
        for a in range(lo, hi + 1):
            if _sgn(a, b) >= 0 and _sgn(M - a, -b) > 0:
                q = QuadReal(Fraction(a, M), Fraction(b, M))
                if abs(float(q.conjugate())) <= cbound:
                    coords.append(q)
    out = []
    for s in coords:
        for t in coords:
            if _conj_norm_sq(s, t) <= bound * bound:
                out.append(from_lozenge_coordinates(s, t))
    return out


def conjugate_bound_check(x, bits: int = 96) -> bool:
    """Check ``|phi(S^k x)| <= |phi(x)| + 1`` along the S-orbit of ``x`` with intervals."""
    from mpmath import iv

    cert = classify(x)
    old = iv.prec
    try:
        iv.prec = bits
        re0, im0 = embed(galois(cert.point, 2), bits)
        r0 = iv.sqrt(re0 ** 2 + im0 ** 2)
        for y in cert.s_orbit:
            re, im = embed(galois(y, 2), bits)
            r = iv.sqrt(re ** 2 + im ** 2)
            if r.a > (r0 + b_bound()).b:  # certainly violated
                return False
        return True
    finally:
        iv.prec = old


# ---------------------------------------------------------------------------
# the integer recurrence


@dataclass
class RecurrenceReport:
    a0: int
    a1: int
    period: int | None
    point: Cyclo
    certificate_kind: str
    t_period: int | None

    @property
    def agree(self) -> bool:
        return self.certificate_kind == "Periodic" and self.period == self.t_period


def _floor_omega(v: int) -> int:
    """``floor(omega v)`` for an integer ``v``, with integer square roots only.

    ``v sqrt5`` is irrational for ``v != 0``, so ``floor((v + v sqrt5)/2)``
    is ``(v + floor(v sqrt5)) // 2``.
    """
    if v == 0:
        return 0
    r = math.isqrt(5 * v * v)
    return (v + (r if v > 0 else -r - 1)) // 2


def _frac_omega(a: int) -> QuadReal:
    return (QuadReal.omega() * a).frac()


def recurrence_check(a0: int, a1: int, max_steps: int = 10**6) -> RecurrenceReport:
    """Period of ``a_{n+2} = -a_n - floor(omega a_{n+1})`` and the matching T-orbit."""
    start = (a0, a1)
    u, v = a0, a1
    per = None
    for n in range(1, max_steps + 1):
        u, v = v, -u - _floor_omega(v)
        if (u, v) == start:
            per = n
            break
    point = from_lozenge_coordinates(_frac_omega(a0), _frac_omega(a1))
    cert = classify(point)
    return RecurrenceReport(a0, a1, per, point, cert.kind, cert.period)
