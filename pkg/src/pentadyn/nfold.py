"""Lozenge piecewise rotations for other orders, and the cubic Pisot units.

``NFoldSystem(n, k, sign)`` acts on ``L = [0,1) + c [0,1)`` with rotation
``rho = sign * zeta_n^(-k)`` and ``c = -rho``::

    T(x) = rho x          if Im(rho x) >= 0
           rho (x - 1)    otherwise.

For ``n = 5, k = 1, sign = 1`` this is the pentagonal map.  The map is a
bijection of ``L`` exactly when ``rho`` turns clockwise by less than a
right angle, which the constructor checks.

Points are integer vectors over the power basis with a common
denominator; sign tests run in floating point and fall back to exact
interval refinement near zero.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .cyclo import Cyclo, euler_phi, is_pisot, is_unit, sign_imag

__all__ = [
    "NFoldSystem",
    "DEFAULT_SYSTEMS",
    "system",
    "step",
    "step_inv",
    "in_lozenge",
    "orbit_period",
    "ScanReport",
    "scan_periodic_fraction",
    "ConstantsReport",
    "verify_constants",
    "minimal_polynomial_of",
    "nine_fold_candidate",
]


@dataclass(frozen=True)
class NFoldSystem:
    n: int
    k: int = 2
    sign: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        # clockwise angle of rho in (0, pi/2)
        ang = (2 * math.pi * self.k / self.n + (math.pi if self.sign < 0 else 0)) % (2 * math.pi)
        if not 1e-9 < ang < math.pi / 2 - 1e-9:
            raise ValueError(f"rho must turn clockwise by less than a right angle (got {math.degrees(ang):.2f} deg)")

    @property
    def rho(self) -> Cyclo:
        return Cyclo.zeta(self.n, -self.k) * self.sign

    @property
    def side(self) -> Cyclo:
        return -self.rho

    @property
    def angle_degrees(self) -> float:
        return math.degrees((2 * math.pi * self.k / self.n + (math.pi if self.sign < 0 else 0)) % (2 * math.pi))

    def point(self, s, t) -> Cyclo:
        """``s + c t`` for rationals ``s, t``."""
        return Cyclo.from_rational(self.n, s) + self.side * Fraction(t)


#: 5-fold (the pentagonal map), 7-fold (rho = -zeta_7^2, a 3pi/7 turn) and
#: 9-fold (rho = zeta_9^-2, a 4pi/9 turn)
DEFAULT_SYSTEMS = {5: NFoldSystem(5, 1, 1), 7: NFoldSystem(7, -2, -1), 9: NFoldSystem(9, 2, 1)}


def system(n: int) -> NFoldSystem:
    return DEFAULT_SYSTEMS[n]


# ---------------------------------------------------------------------------
# exact predicates


def in_lozenge(sys_: NFoldSystem, x: Cyclo) -> bool:
    """``x = s + c t`` with ``0 <= s, t < 1``."""
    c = sys_.side
    cbar = c.conjugate()
    # t Im(c) = Im(x),  s Im(c) = -Im(conj(c) x)
    return (sign_imag(x) >= 0 and sign_imag(c - x) > 0
            and sign_imag(cbar * x) <= 0 and sign_imag(cbar * (x - 1)) > 0)


def step(sys_: NFoldSystem, x: Cyclo) -> Cyclo:
    y = sys_.rho * x
    if sign_imag(y) >= 0:
        return y
    return y - sys_.rho


def step_inv(sys_: NFoldSystem, y: Cyclo) -> Cyclo:
    rho = sys_.rho
    x2 = y / rho + 1
    if sign_imag(y + rho) < 0 and in_lozenge(sys_, x2):
        return x2
    x1 = y / rho
    if sign_imag(y) < 0 or not in_lozenge(sys_, x1):
        raise ValueError("point has no preimage in the lozenge")
    return x1


# ---------------------------------------------------------------------------
# integer kernel for scans


class _Kernel:
    def __init__(self, sys_: NFoldSystem):
        self.sys = sys_
        n = sys_.n
        self.deg = euler_phi(n)
        rho = sys_.rho
        cols = []
        for j in range(self.deg):
            e = Cyclo.zeta(n, j) * rho
            assert e.den == 1
            cols.append(e.num)
        self.rows = [tuple(cols[j][i] for j in range(self.deg)) for i in range(self.deg)]
        self.rho_num = rho.num
        self.sin = [math.sin(2 * math.pi * j / n) for j in range(self.deg)]

    def mul(self, v):
        return tuple(sum(r[j] * v[j] for j in range(self.deg) if v[j]) for r in self.rows)

    def imag_sign(self, v, den):
        f = sum(a * s for a, s in zip(v, self.sin))
        scale = sum(abs(a) for a in v) + 1
        if abs(f) > 1e-9 * scale:
            return 1 if f > 0 else -1
        return sign_imag(Cyclo._make(self.sys.n, list(v), den))

    def step(self, v, den):
        y = self.mul(v)
        if self.imag_sign(y, den) >= 0:
            return y
        return tuple(a - den * r for a, r in zip(y, self.rho_num))


def orbit_period(sys_: NFoldSystem, x: Cyclo, max_iter: int):
    """Smallest ``p <= max_iter`` with ``T^p x = x``, else None."""
    ker = _Kernel(sys_)
    v0, den = x.num, x.den
    v = v0
    for p in range(1, max_iter + 1):
        v = ker.step(v, den)
        if v == v0:
            return p
    return None


@dataclass
class ScanReport:
    n: int
    k: int
    sign: int
    resolution: int
    max_iter: int
    checkpoints: list
    fractions: list  # fraction with period <= checkpoint
    rows: list = field(repr=False, default_factory=list)  # (i, j, period or None)

    @property
    def fraction(self) -> float:
        return self.fractions[-1]

    @property
    def monotone(self) -> bool:
        return all(a <= b for a, b in zip(self.fractions, self.fractions[1:]))

    def to_json(self) -> str:
        return json.dumps({"schema": 1, "n": self.n, "k": self.k, "sign": self.sign,
                           "resolution": self.resolution, "max_iter": self.max_iter,
                           "checkpoints": self.checkpoints, "fractions": self.fractions,
                           "monotone": self.monotone}, indent=2)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["i", "j", "s", "t", "period"])
        for i, j, p in self.rows:
            s, t = _grid(i, self.resolution), _grid(j, self.resolution)
            w.writerow([i, j, str(s), str(t), "timeout" if p is None else p])
        return buf.getvalue()


def _grid(i: int, r: int) -> Fraction:
    return Fraction(2 * i + 1, 2 * r)


def scan_periodic_fraction(sys_: NFoldSystem, resolution: int, max_iter: int, checkpoints=None) -> ScanReport:
    """Fraction of cell centres ``s + c t`` of an r x r grid with period at most ``max_iter``."""
    if resolution < 1 or max_iter < 1:
        raise ValueError("resolution and max_iter must be positive")
    if checkpoints is None:
        checkpoints = sorted({max(1, max_iter // 100), max(1, max_iter // 10), max_iter})
    checkpoints = sorted(c for c in checkpoints if c <= max_iter)
    rows = []
    for i in range(resolution):
        for j in range(resolution):
            x = sys_.point(_grid(i, resolution), _grid(j, resolution))
            rows.append((i, j, orbit_period(sys_, x, max_iter)))
    total = len(rows)
    fracs = [sum(1 for *_, p in rows if p is not None and p <= c) / total for c in checkpoints]
    return ScanReport(sys_.n, sys_.k, sys_.sign, resolution, max_iter, checkpoints, fracs, rows)


# ---------------------------------------------------------------------------
# cubic Pisot units


def _sym():
    import sympy

    return sympy, sympy.Symbol("x")


def minimal_polynomial_of(expr_in_b, b_poly) -> list:
    """Minimal polynomial (integer coefficients, leading positive) of ``r(b)``.

    ``expr_in_b`` is a sympy expression in ``x`` standing for ``b``, a root
    of the irreducible ``b_poly``; computed by a resultant.
    """
    sympy, x = _sym()
    y = sympy.Symbol("y")
    num, den = sympy.fraction(sympy.together(expr_in_b))
    fb = sympy.Poly(b_poly, x)
    res = sympy.resultant(fb.as_expr(), y * den - num, x)
    p = sympy.Poly(res, y)
    _, factors = p.factor_list()
    # pick the factor vanishing at r(b) for the real root b of largest size
    b_val = max(sympy.Poly(b_poly, x).real_roots(), key=lambda r: float(r))
    val = sympy.N(expr_in_b.subs(x, b_val), 50)
    best = min(factors, key=lambda f: abs(sympy.N(f[0].as_expr().subs(y, val), 50)))[0]
    coeffs = [int(c) for c in best.all_coeffs()]
    if coeffs[0] < 0:
        coeffs = [-c for c in coeffs]
    return coeffs


def _vanishes_in_field(poly_coeffs, num, den, b_poly) -> bool:
    """Whether ``P(num(b)/den(b)) = 0`` in ``Q[x]/(b_poly)``."""
    sympy, x = _sym()
    deg = len(poly_coeffs) - 1
    total = sum(c * num ** (deg - i) * den ** i for i, c in enumerate(poly_coeffs))
    return sympy.rem(sympy.expand(total), b_poly, x) == 0


@dataclass
class ConstantsReport:
    checks: dict  # name -> bool

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def to_json(self) -> str:
        return json.dumps({"schema": 1, "ok": self.ok, "checks": self.checks}, indent=2)


POLYS = {
    "alpha": [1, -6, 5, -1],
    "beta": [1, -17, 10, -1],
    "b7": [1, -2, -1, 1],
    "gamma": [1, -9, 6, -1],
    "b9": [1, -3, 0, 1],
}

APPROX = {"alpha": 5.04892, "beta": 16.3937, "b7": 2.24698, "gamma": 8.29086, "b9": 2.87939}


def _largest_root(coeffs) -> float:
    import numpy as np

    return max(r.real for r in np.roots(coeffs) if abs(r.imag) < 1e-12)


def verify_constants() -> ConstantsReport:
    """Exact checks of the cubic Pisot units of the 7- and 9-fold maps."""
    sympy, x = _sym()
    checks = {}
    for name, c in POLYS.items():
        poly = sympy.Poly(c, x)
        checks[f"{name}: irreducible"] = poly.is_irreducible
        checks[f"{name}: Pisot"] = is_pisot(c)
        checks[f"{name}: unit"] = is_unit(c)
        checks[f"{name}: value"] = abs(_largest_root(c) - APPROX[name]) < 5e-5

    # b = 1/(2 cos(3pi/7)) and b = 1/(2 cos(4pi/9)) as elements of the cyclotomic fields
    b7 = (-(Cyclo.zeta(7, 2) + Cyclo.zeta(7, 5))).inverse()
    checks["b7 = 1/(2cos(3pi/7)) is a root"] = (b7 ** 3 - 2 * b7 ** 2 - b7 + 1).is_zero()
    b9 = (Cyclo.zeta(9, 2) + Cyclo.zeta(9, 7)).inverse()
    checks["b9 = 1/(2cos(4pi/9)) is a root"] = (b9 ** 3 - 3 * b9 ** 2 + 1).is_zero()

    f7 = sympy.Poly(POLYS["b7"], x).as_expr()
    f9 = sympy.Poly(POLYS["b9"], x).as_expr()
    one = sympy.Integer(1)
    b7_val, b9_val = _largest_root(POLYS["b7"]), _largest_root(POLYS["b9"])
    # identities as polynomial relations in Q(b), plus root identification
    # by the isolating value
    checks["alpha = b^2"] = (_vanishes_in_field(POLYS["alpha"], x ** 2, one, f7)
                             and abs(b7_val ** 2 - _largest_root(POLYS["alpha"])) < 1e-9)
    checks["beta = b^4/(b-1)^2"] = (_vanishes_in_field(POLYS["beta"], x ** 4, (x - 1) ** 2, f7)
                                    and abs(b7_val ** 4 / (b7_val - 1) ** 2 - _largest_root(POLYS["beta"])) < 1e-9)
    checks["gamma = b^2 (9-fold)"] = (_vanishes_in_field(POLYS["gamma"], x ** 2, one, f9)
                                      and abs(b9_val ** 2 - _largest_root(POLYS["gamma"])) < 1e-9)

    sqrt_beta = minimal_polynomial_of(x ** 2 / (x - 1), f7)
    checks["sqrt(beta) = b^2/(b-1) Pisot"] = is_pisot(sqrt_beta)
    b_minus_1 = minimal_polynomial_of(x - 1, f7)
    checks["b-1 not Pisot"] = not is_pisot(b_minus_1)
    # both b and b-1 are units, so alpha and beta lie in the unit group
    checks["b-1 unit"] = is_unit(b_minus_1)
    return ConstantsReport({k: bool(v) for k, v in checks.items()})


def nine_fold_candidate() -> dict:
    """Minimal polynomial and Pisot status of ``b^2/(b^2-2b-1)`` for the 9-fold ``b``."""
    sympy, x = _sym()
    f9 = sympy.Poly(POLYS["b9"], x).as_expr()
    poly = minimal_polynomial_of(x ** 2 / (x ** 2 - 2 * x - 1), f9)
    return {"polynomial": poly, "pisot": is_pisot(poly), "unit": is_unit(poly),
            "value": float(_largest_root(poly))}
