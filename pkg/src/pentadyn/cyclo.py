"""Exact arithmetic in the cyclotomic fields Q(zeta_n), n in {5, 7, 9}.

Elements are stored as integer numerators over a positive common
denominator, coordinates taken in the power basis ``1, zeta, ...,
zeta^(phi(n)-1)`` and reduced modulo the n-th cyclotomic polynomial, so two
equal field elements always have identical coordinates.

For n = 5 every sign question reduces to the real quadratic field Q(omega)
with omega the golden ratio, and is settled with integer arithmetic only
(:class:`QuadReal`).  For n = 7 and 9 signs are obtained by an exact zero
test followed by interval refinement of the complex embedding.
"""

from __future__ import annotations

import ast
import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

from mpmath import iv

SUPPORTED_ORDERS = (5, 7, 9)

__all__ = [
    "Cyclo",
    "QuadReal",
    "ReduciblePolynomialError",
    "zeta",
    "omega",
    "digits",
    "galois",
    "pentagon_basis",
    "from_pentagon_basis",
    "lozenge_coordinates",
    "from_lozenge_coordinates",
    "sign_real",
    "sign_imag",
    "embed",
    "is_pisot",
    "is_unit",
    "parse_cyclo",
]


# ---------------------------------------------------------------------------
# cyclotomic polynomials and reduction tables


def _poly_divexact(num, den):
    """Exact division of integer polynomials (lowest degree first)."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    lead = den[-1]
    for i in range(len(out) - 1, -1, -1):
        q, r = divmod(num[i + len(den) - 1], lead)
        if r:
            raise ArithmeticError("inexact polynomial division")
        out[i] = q
        for j, c in enumerate(den):
            num[i + j] -= q * c
    if any(num[: len(den) - 1]):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple:
    """Coefficients of Phi_n, lowest degree first."""
    p = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            p = _poly_divexact(p, cyclotomic_poly(d))
    return tuple(p)


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple:
    """Reduced coordinates of zeta^j for 0 <= j < n."""
    phi = cyclotomic_poly(n)
    deg = len(phi) - 1
    rows = []
    vec = [1] + [0] * (deg - 1)
    for _ in range(n):
        rows.append(tuple(vec))
        # multiply by zeta, then eliminate zeta^deg using the monic Phi_n
        top = vec[-1]
        vec = [0] + vec[:-1]
        if top:
            vec = [v - top * c for v, c in zip(vec, phi[:-1])]
    return tuple(rows)


def _reduce_full(n: int, full) -> list:
    """Fold a coefficient vector indexed by exponents mod n into the basis."""
    table = _power_table(n)
    deg = len(table[0])
    out = [0] * deg
    for e, c in enumerate(full):
        if c:
            row = table[e % n]
            for i in range(deg):
                if row[i]:
                    out[i] += c * row[i]
    return out


def euler_phi(n: int) -> int:
    return len(cyclotomic_poly(n)) - 1


# ---------------------------------------------------------------------------
# exact sign in Q(sqrt 5)


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def sign_quad(a, b) -> int:
    """Sign of ``a + b*omega`` for integers or rationals ``a``, ``b``.

    ``a + b*omega = (p + q*sqrt5)/2`` with ``p = 2a + b`` and ``q = b``;
    mixed signs are resolved by comparing ``p**2`` with ``5*q**2``.
    """
    p = 2 * a + b
    q = b
    if q == 0:
        return _sign(p)
    if p >= 0 and q > 0:
        return 1
    if p <= 0 and q < 0:
        return -1
    return _sign(p) if p * p > 5 * q * q else _sign(q)


class QuadReal:
    """Exact real number ``a + b*omega`` with rational ``a``, ``b``."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a = Fraction(a)
        self.b = Fraction(b)

    @classmethod
    def omega(cls) -> "QuadReal":
        return cls(0, 1)

    def _coerce(self, other):
        if isinstance(other, QuadReal):
            return other
        if isinstance(other, (int, Fraction, Rational)):
            return QuadReal(other, 0)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuadReal(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return QuadReal(-self.a, -self.b)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuadReal(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        # omega^2 = omega + 1
        bb = self.b * other.b
        return QuadReal(self.a * other.a + bb, self.a * other.b + self.b * other.a + bb)

    __rmul__ = __mul__

    def conjugate(self) -> "QuadReal":
        """Image under sqrt5 -> -sqrt5, i.e. omega -> 1 - omega."""
        return QuadReal(self.a + self.b, -self.b)

    def norm(self) -> Fraction:
        return self.a * self.a + self.a * self.b - self.b * self.b

    def inverse(self) -> "QuadReal":
        nrm = self.norm()
        if nrm == 0:
            raise ZeroDivisionError("QuadReal division by zero")
        c = self.conjugate()
        return QuadReal(c.a / nrm, c.b / nrm)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = QuadReal(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def sign(self) -> int:
        return sign_quad(self.a, self.b)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def floor(self) -> int:
        """Largest integer not exceeding the value, decided exactly."""
        guess = math.floor(float(self.a) + float(self.b) * 1.618033988749895)
        while self < guess:
            guess -= 1
        while self >= guess + 1:
            guess += 1
        return guess

    def frac(self) -> "QuadReal":
        return self - self.floor()

    def __float__(self):
        return float(self.a) + float(self.b) * (1 + 5 ** 0.5) / 2

    def __repr__(self):
        return f"QuadReal({self.a}, {self.b})"

    def __str__(self):
        return f"{self.a} + {self.b}*omega"

    def to_cyclo(self) -> "Cyclo":
        # omega = -zeta^2 - zeta^3
        return Cyclo(5, (self.a, 0, -self.b, -self.b))


# ---------------------------------------------------------------------------
# field elements


class Cyclo:
    """Element of Q(zeta_n) in reduced power-basis coordinates.

    >>> z = Cyclo.zeta(5)
    >>> z * z**4 == 1
    True
    """

    __slots__ = ("n", "num", "den")

    def __init__(self, n: int, coeffs=None, _raw=None):
        if n not in SUPPORTED_ORDERS:
            raise ValueError(f"unsupported cyclotomic order {n}")
        self.n = n
        if _raw is not None:
            num, den = _raw
        else:
            deg = euler_phi(n)
            if coeffs is None:
                coeffs = (0,) * deg
            coeffs = [Fraction(c) for c in coeffs]
            if len(coeffs) != deg:
                raise ValueError(f"expected {deg} coordinates for n={n}, got {len(coeffs)}")
            den = 1
            for c in coeffs:
                den = den * c.denominator // math.gcd(den, c.denominator)
            num = [int(c * den) for c in coeffs]
        g = den
        for v in num:
            g = math.gcd(g, v)
            if g == 1:
                break
        if g > 1:
            num = [v // g for v in num]
            den //= g
        self.num = tuple(num)
        self.den = den

    @classmethod
    def _make(cls, n, num, den):
        if den < 0:
            num = [-v for v in num]
            den = -den
        return cls(n, _raw=(num, den))

    # constructors -------------------------------------------------------

    @classmethod
    def from_rational(cls, n: int, q) -> "Cyclo":
        q = Fraction(q)
        return cls._make(n, [q.numerator] + [0] * (euler_phi(n) - 1), q.denominator)

    @classmethod
    def zeta(cls, n: int = 5, k: int = 1) -> "Cyclo":
        return cls._make(n, list(_power_table(n)[k % n]), 1)

    @classmethod
    def zero(cls, n: int = 5) -> "Cyclo":
        return cls._make(n, [0] * euler_phi(n), 1)

    @classmethod
    def one(cls, n: int = 5) -> "Cyclo":
        return cls.from_rational(n, 1)

    # accessors ---------------------------------------------------------

    @property
    def coeffs(self) -> tuple:
        return tuple(Fraction(v, self.den) for v in self.num)

    def is_zero(self) -> bool:
        return not any(self.num)

    def __bool__(self):
        return not self.is_zero()

    def key(self) -> tuple:
        """Canonical hashable coordinates."""
        return (self.n, self.num, self.den)

    def __hash__(self):
        return hash(self.key())

    def __eq__(self, other):
        if isinstance(other, Cyclo):
            return self.n == other.n and self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self == Cyclo.from_rational(self.n, other)
        return NotImplemented

    # arithmetic ----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Cyclo):
            if other.n != self.n:
                raise ValueError(f"mixing Q(zeta_{self.n}) and Q(zeta_{other.n})")
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclo.from_rational(self.n, other)
        if isinstance(other, QuadReal) and self.n == 5:
            return other.to_cyclo()
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d1, d2 = self.den, other.den
        if d1 == d2:
            return Cyclo._make(self.n, [a + b for a, b in zip(self.num, other.num)], d1)
        return Cyclo._make(
            self.n, [a * d2 + b * d1 for a, b in zip(self.num, other.num)], d1 * d2
        )

    __radd__ = __add__

    def __neg__(self):
        return Cyclo._make(self.n, [-a for a in self.num], self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.num, other.num
        full = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        full[i + j] += x * y
        return Cyclo._make(self.n, _reduce_full(self.n, full), self.den * other.den)

    __rmul__ = __mul__

    def mul_zeta(self, k: int) -> "Cyclo":
        """Multiply by zeta^k (a cyclic shift followed by reduction)."""
        n = self.n
        full = [0] * n
        for i, c in enumerate(self.num):
            full[(i + k) % n] += c
        return Cyclo._make(n, _reduce_full(n, full), self.den)

    def galois(self, k: int) -> "Cyclo":
        """Apply the automorphism zeta -> zeta^k."""
        n = self.n
        if math.gcd(k, n) != 1:
            raise ValueError(f"zeta -> zeta^{k} is not an automorphism of Q(zeta_{n})")
        full = [0] * n
        for i, c in enumerate(self.num):
            full[(i * k) % n] += c
        return Cyclo._make(n, _reduce_full(n, full), self.den)

    def conjugate(self) -> "Cyclo":
        """Complex conjugate, i.e. ``galois(self, n - 1)``."""
        return self.galois(self.n - 1)

    def norm(self) -> Fraction:
        """Field norm down to Q."""
        prod = self
        for k in range(2, self.n):
            if math.gcd(k, self.n) == 1:
                prod = prod * self.galois(k)
        return Fraction(prod.num[0], prod.den)

    def inverse(self) -> "Cyclo":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(zeta)")
        others = Cyclo.one(self.n)
        for k in range(2, self.n):
            if math.gcd(k, self.n) == 1:
                others = others * self.galois(k)
        nrm = self * others
        if any(nrm.num[1:]):
            raise ArithmeticError("norm is not rational")  # pragma: no cover
        return others * Fraction(nrm.den, nrm.num[0])

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if isinstance(other, Cyclo) and not any(other.num[1:]):
            if other.num[0] == 0:
                raise ZeroDivisionError("division by zero in Q(zeta)")
            return Cyclo._make(
                self.n, [v * other.den for v in self.num], self.den * other.num[0]
            )
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if not isinstance(k, int):
            raise TypeError("only integer powers")
        if k < 0:
            return self.inverse() ** (-k)
        out = Cyclo.one(self.n)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # embeddings ----------------------------------------------------------

    def __complex__(self):
        n = self.n
        z = complex(math.cos(2 * math.pi / n), math.sin(2 * math.pi / n))
        acc = 0j
        p = 1 + 0j
        for c in self.num:
            acc += c * p
            p *= z
        return acc / self.den

    def to_complex(self) -> complex:
        return complex(self)

    def is_real(self) -> bool:
        return self == self.conjugate()

    # formatting ------------------------------------------------------------

    def __repr__(self):
        return f"Cyclo({self.n}, [{self.to_string()}])"

    def to_string(self) -> str:
        """Comma separated rationals over the power basis."""
        return ",".join(str(c) for c in self.coeffs)


# ---------------------------------------------------------------------------
# named constants of Q(zeta_5)


def zeta(n: int = 5, k: int = 1) -> Cyclo:
    return Cyclo.zeta(n, k)


@lru_cache(maxsize=None)
def omega() -> Cyclo:
    """Golden ratio ``-zeta^2 - zeta^-2`` in Q(zeta_5)."""
    z = Cyclo.zeta(5)
    return -(z.mul_zeta(1)) - z.mul_zeta(2)


@lru_cache(maxsize=None)
def digits() -> tuple:
    """The six translation digits ``d_0 .. d_5``."""
    z = Cyclo.zeta(5)
    w = omega()
    return (
        Cyclo.zero(5),
        Cyclo.one(5),
        z,
        z / w,
        -(w * z.mul_zeta(1)).inverse(),
        -(w * z).inverse(),
    )


def galois(x: Cyclo, k: int) -> Cyclo:
    return x.galois(k)


# ---------------------------------------------------------------------------
# coordinate systems of Z[zeta_5]


def pentagon_basis(x: Cyclo) -> tuple:
    """Coordinates ``(x1, x2, y1, y2)`` with ``x = x1 + x2*w + (y1 + y2*w)*zeta``."""
    if x.n != 5:
        raise ValueError("pentagon basis only exists for n = 5")
    a0, a1, a2, a3 = x.coeffs
    return (a0 - a2 + a3, -a3, a1 - a2 + a3, a2 - a3)


def from_pentagon_basis(x1, x2, y1, y2) -> Cyclo:
    x1, x2, y1, y2 = (Fraction(v) for v in (x1, x2, y1, y2))
    return Cyclo(5, (x1 + y2, y1 + y2, y2 - x2, -x2))


def lozenge_coordinates(x: Cyclo) -> tuple:
    """Real coordinates ``(s, t)`` in Q(omega) with ``x = s - t/zeta``.

    The lozenge L is exactly ``0 <= s < 1, 0 <= t < 1``.
    """
    x1, x2, y1, y2 = pentagon_basis(x.conjugate())
    return QuadReal(x1, x2), QuadReal(-y1, -y2)


def from_lozenge_coordinates(s, t) -> Cyclo:
    s = s if isinstance(s, QuadReal) else QuadReal(s)
    t = t if isinstance(t, QuadReal) else QuadReal(t)
    return from_pentagon_basis(s.a, s.b, -t.a, -t.b).conjugate()


def real_part_quad(x: Cyclo) -> QuadReal:
    """Re(x) as an element of Q(omega) (n = 5 only)."""
    r = (x + x.conjugate()) / 2
    # a real element of Q(zeta_5) is r0 + r2*(zeta^2 + zeta^3) = r0 - r2*omega
    c = r.coeffs
    return QuadReal(c[0], -c[2])


@lru_cache(maxsize=None)
def _imag_scale() -> Cyclo:
    z = Cyclo.zeta(5)
    return (z - z.conjugate()).inverse()


def imag_over_sin72(x: Cyclo) -> QuadReal:
    """Im(x)/sin(72 deg) as an element of Q(omega) (n = 5 only)."""
    r = (x - x.conjugate()) * _imag_scale()
    c = r.coeffs
    return QuadReal(c[0], -c[2])


# ---------------------------------------------------------------------------
# signs and embeddings


def embed(x: Cyclo, bits: int = 53) -> tuple:
    """Certified enclosure ``(re, im)`` of the embedding zeta -> exp(2 pi i/n).

    Both components are :mod:`mpmath` intervals computed at ``bits`` bits.
    """
    if bits < 16:
        raise ValueError("precision must be at least 16 bits")
    n = x.n
    old = iv.prec
    try:
        iv.prec = bits
        re = iv.mpf(0)
        im = iv.mpf(0)
        for k, c in enumerate(x.num):
            if c:
                ang = 2 * iv.pi * k / n
                re += c * iv.cos(ang)
                im += c * iv.sin(ang)
        re /= x.den
        im /= x.den
    finally:
        iv.prec = old
    return re, im


def _interval_sign(value: Cyclo, component: int) -> int:
    bits = 64
    while True:
        box = embed(value, bits)[component]
        if box.a > 0:
            return 1
        if box.b < 0:
            return -1
        bits *= 2
        if bits > 1 << 16:  # pragma: no cover
            raise ArithmeticError("sign refinement did not terminate")


def sign_real(x: Cyclo) -> int:
    """Sign of Re(x), decided exactly."""
    if x.n == 5:
        return real_part_quad(x).sign()
    if (x + x.conjugate()).is_zero():
        return 0
    return _interval_sign(x, 0)


def sign_imag(x: Cyclo) -> int:
    """Sign of Im(x), decided exactly."""
    if x.n == 5:
        return imag_over_sin72(x).sign()
    if (x - x.conjugate()).is_zero():
        return 0
    return _interval_sign(x, 1)


# ---------------------------------------------------------------------------
# Pisot and unit tests for integer polynomials


class ReduciblePolynomialError(ValueError):
    """Raised when a polynomial expected to be irreducible factors over Q."""

    def __init__(self, poly, factor):
        self.poly = poly
        self.factor = factor
        super().__init__(f"polynomial {poly} is reducible; factor {factor}")


def _as_poly(coeffs):
    import sympy

    x = sympy.Symbol("x")
    if isinstance(coeffs, sympy.Poly):
        return coeffs
    return sympy.Poly([int(c) for c in coeffs], x, domain="ZZ")


def _check_irreducible(p):
    _, factors = p.factor_list()
    if len(factors) != 1 or factors[0][1] != 1 or p.degree() < 1:
        raise ReduciblePolynomialError(p.as_expr(), factors[0][0].as_expr())


def root_moduli_classes(coeffs) -> list:
    """Classify each root as ``-1`` (inside unit disk) or ``+1`` (outside).

    Roots are isolated in rational boxes and refined until every box lies
    strictly inside or strictly outside the unit circle.  Polynomials with
    a root of modulus one are detected beforehand (they are reciprocal) and
    reported with ``0`` entries.
    """
    p = _as_poly(coeffs)
    _check_irreducible(p)
    c = p.all_coeffs()
    deg = p.degree()
    if deg >= 2 and (c == c[::-1] or c == [-v for v in c[::-1]]):
        # reciprocal: the roots pair as (r, 1/r); only real pairs avoid the circle
        if deg > 2 or c[1] ** 2 - 4 * c[0] * c[2] <= 0:
            return [0] * deg
    eps = Fraction(1, 8)
    while True:
        real, cplx = p.intervals(all=True, eps=eps)
        out = []
        undecided = False
        for (lo, hi), _ in real:
            lo, hi = Fraction(int(lo.p), int(lo.q)), Fraction(int(hi.p), int(hi.q))
            if -1 < lo and hi < 1:
                out.append(-1)
            elif lo > 1 or hi < -1:
                out.append(1)
            else:
                undecided = True
        for ((x1, y1), (x2, y2)), _ in cplx:
            xs = [Fraction(int(v.p), int(v.q)) for v in (x1, x2)]
            ys = [Fraction(int(v.p), int(v.q)) for v in (y1, y2)]
            far = max(x * x for x in xs) + max(y * y for y in ys)
            nx = 0 if xs[0] <= 0 <= xs[1] else min(x * x for x in xs)
            ny = 0 if ys[0] <= 0 <= ys[1] else min(y * y for y in ys)
            if far < 1:
                out.append(-1)
            elif nx + ny > 1:
                out.append(1)
            else:
                undecided = True
        if not undecided:
            return out
        eps /= 16


def is_pisot(coeffs) -> bool:
    """Whether the (irreducible, integer) polynomial defines a Pisot number.

    ``coeffs`` lists integer coefficients from the leading term down.  The
    polynomial must be monic up to sign, have exactly one root outside the
    closed unit disk, that root being real and greater than one, and all
    other roots strictly inside the unit disk.
    """
    p = _as_poly(coeffs)
    classes = root_moduli_classes(p)
    if abs(p.LC()) != 1:
        return False
    if 0 in classes or classes.count(1) != 1:
        return False
    return any(r > 1 for r in p.real_roots())


def is_unit(coeffs) -> bool:
    """Whether a root of the irreducible monic polynomial is an algebraic unit."""
    p = _as_poly(coeffs)
    _check_irreducible(p)
    c = p.all_coeffs()
    return abs(c[0]) == 1 and abs(c[-1]) == 1


# ---------------------------------------------------------------------------
# textual input


_NAMES = {"zeta", "omega", "z", "w"}


def parse_cyclo(text: str, n: int = 5) -> Cyclo:
    """Parse a point.

    Accepts either comma separated power-basis rationals (``"1/3,0,0,0"``)
    or an expression in the integers, ``zeta`` and (for n = 5) ``omega``
    combined with ``+ - * /`` and integer powers (``**`` or ``^``).
    """
    text = text.strip()
    if "," in text:
        parts = [Fraction(p.strip()) for p in text.split(",")]
        return Cyclo(n, parts)
    tree = ast.parse(text.replace("^", "**"), mode="eval")

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return Cyclo.from_rational(n, node.value)
        if isinstance(node, ast.Name) and node.id in _NAMES:
            if node.id in ("zeta", "z"):
                return Cyclo.zeta(n)
            if n != 5:
                raise ValueError("omega is only defined for n = 5")
            return omega()
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = ev(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp):
            if isinstance(node.op, ast.Pow):
                exp = node.right
                sign = 1
                if isinstance(exp, ast.UnaryOp) and isinstance(exp.op, ast.USub):
                    sign, exp = -1, exp.operand
                if not (isinstance(exp, ast.Constant) and isinstance(exp.value, int)):
                    raise ValueError("only integer powers are allowed")
                return ev(node.left) ** (sign * exp.value)
            left, right = ev(node.left), ev(node.right)
            if isinstance(node.op, ast.Add):
                return left + right
            if isinstance(node.op, ast.Sub):
                return left - right
            if isinstance(node.op, ast.Mult):
                return left * right
            if isinstance(node.op, ast.Div):
                return left / right
        raise ValueError(f"cannot parse point expression {text!r}")

    return ev(tree)
