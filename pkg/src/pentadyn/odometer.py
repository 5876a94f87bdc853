"""The 2-adic odometer model of the aperiodic dynamics.

A multiplicative coding ``y_1 y_2 ...`` over the substitution indices
0..3 becomes the 2-adic integer ``iota(y) = -sum kappa(y_i) 4^(i-1)``.
Its address in Y' is ``xi(y_1) xi(y_2) ...`` with ``xi = (0, 2, 3, 5)``,
so ``phi(x)`` reads the base-4 digits of ``-x``.  Under this convention

* ``x -> x + 1`` is conjugate to the first return map ``T~``,
* the shift of the coding is ``rho(x) = (x + ((-x) mod 4)) / 4``,
  which is conjugate to ``S``.

``drop_digit(x) = (x - (x mod 4)) / 4`` removes the lowest digit of ``x``
itself; it is the shift for the unsigned convention and does not commute
with ``phi`` here.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .cyclo import Cyclo, galois, omega
from .dynamics import (
    ConsistencyError,
    NotInDomainError,
    Undefined,
    _as_point,
    classify,
    first_hit_U,
    step_S,
    step_Ttilde,
)
from .fractal import AffineMap, _dual_map, in_dual_cover
from .symbolic import CUT_POINT_PAIRS, XI, Lasso, eval_address, suffix_in_graph

__all__ = [
    "Dyadic",
    "add_one",
    "rho",
    "drop_digit",
    "iota",
    "iota_inv",
    "phi_map",
    "address_of_dyadic",
    "is_cutpoint_address",
    "is_open_edge_address",
    "phi_prime",
    "NaturalExtensionPoint",
    "natural_extension_step",
    "rho_hat",
    "PurityReport",
    "PeriodicPointError",
    "pure_periodicity_test",
    "random_dyadic",
    "drop_digit_mismatches",
    "additive_diagram_suite",
    "multiplicative_diagram_suite",
    "natural_extension_suite",
]


class PeriodicPointError(ValueError):
    """Raised when a point is T-periodic, so it has no infinite expansion."""


def _lasso_from_orbit(value: Fraction, step):
    """Digits of an eventually periodic expansion ``(digit, next_value) = step(value)``."""
    seen = {}
    digits = []
    while value not in seen:
        seen[value] = len(digits)
        d, value = step(value)
        digits.append(d)
    k = seen[value]
    return tuple(digits[:k]), tuple(digits[k:])


def _z2_digit(x: Fraction) -> int:
    # x mod 4 for a rational with odd denominator
    return x.numerator * pow(x.denominator, -1, 4) % 4


@dataclass(frozen=True)
class Dyadic:
    """Eventually periodic 2-adic integer, i.e. a rational with odd denominator."""

    value: Fraction

    def __post_init__(self):
        v = Fraction(self.value)
        if v.denominator % 2 == 0:
            raise ValueError("2-adic integers need an odd denominator")
        object.__setattr__(self, "value", v)

    @classmethod
    def from_digits(cls, prefix, cycle) -> "Dyadic":
        """From base-4 digits, least significant first: ``prefix`` then ``cycle`` forever."""
        prefix, cycle = list(prefix), list(cycle)
        if not cycle:
            raise ValueError("the periodic part must be nonempty")
        if any(d not in (0, 1, 2, 3) for d in prefix + cycle):
            raise ValueError("base-4 digits are 0..3")
        head = sum(d * 4 ** i for i, d in enumerate(prefix))
        c = sum(d * 4 ** i for i, d in enumerate(cycle))
        tail = Fraction(c, 1 - 4 ** len(cycle))
        return cls(head + 4 ** len(prefix) * tail)

    @classmethod
    def parse(cls, text: str) -> "Dyadic":
        """``"u|v"`` with base-4 digits, least significant first."""
        lasso = Lasso.parse(text)
        return cls.from_digits([int(c) for c in lasso.u], [int(c) for c in lasso.v])

    @property
    def digits(self):
        """Canonical ``(prefix, cycle)`` of base-4 digits (minimal lasso)."""
        return _lasso_from_orbit(self.value, lambda x: (_z2_digit(x), (x - _z2_digit(x)) / 4))

    def lasso(self) -> Lasso:
        u, v = self.digits
        return Lasso("".join(map(str, u)), "".join(map(str, v)))

    def __add__(self, other):
        other = other if isinstance(other, Dyadic) else Dyadic(other)
        return Dyadic(self.value + other.value)

    def __neg__(self):
        return Dyadic(-self.value)

    def __str__(self):
        return str(self.lasso())


def add_one(x: Dyadic) -> Dyadic:
    return Dyadic(x.value + 1)


def drop_digit(x: Dyadic) -> Dyadic:
    """``(x - (x mod 4)) / 4``: remove the least significant base-4 digit of ``x``."""
    return Dyadic((x.value - _z2_digit(x.value)) / 4)


def rho(x: Dyadic) -> Dyadic:
    """Shift of the multiplicative coding read through ``iota``: ``(x + ((-x) mod 4)) / 4``."""
    return Dyadic((x.value + _z2_digit(-x.value)) / 4)


def _as_index_lasso(coding) -> Lasso:
    if isinstance(coding, str):
        coding = Lasso.parse(coding)
    if set(coding.u + coding.v) - set("0123"):
        raise ValueError("multiplicative codings use the indices 0..3")
    return coding


def iota(coding) -> Dyadic:
    """``-sum kappa(y_i) 4^(i-1)`` for a lasso of substitution indices."""
    lasso = _as_index_lasso(coding)
    return -Dyadic.from_digits([int(c) for c in lasso.u], [int(c) for c in lasso.v])


def iota_inv(x: Dyadic) -> Lasso:
    return (-x).lasso()


def address_of_dyadic(x: Dyadic) -> Lasso:
    """Address lasso (digits 0, 2, 3, 5) of ``phi(x)``."""
    lasso = iota_inv(x)
    to_digit = str.maketrans({str(k): str(XI[k]) for k in range(4)})
    return Lasso(lasso.u.translate(to_digit), lasso.v.translate(to_digit))


def phi_map(x: Dyadic) -> Cyclo:
    return eval_address(address_of_dyadic(x))


def _suffixes(lasso: Lasso):
    """All suffixes of the infinite word as canonical (prefix, cycle) pairs."""
    u, v = lasso.u, lasso.v
    out = set()
    for k in range(len(u) + len(v)):
        if k <= len(u):
            su, sv = u[k:], v
        else:
            r = k - len(u)
            su, sv = "", v[r:] + v[:r]
        out.add(_canonical(su, sv))
    return out


def _canonical(u: str, v: str):
    # primitive cycle
    for p in range(1, len(v) + 1):
        if len(v) % p == 0 and v[:p] * (len(v) // p) == v:
            v = v[:p]
            break
    # roll the prefix into the cycle
    while u and u[-1] == v[-1]:
        u, v = u[:-1], v[-1] + v[:-1]
    return u, v


def is_cutpoint_address(address: Lasso) -> bool:
    """True when the address ends with one of the cut-point identity words."""
    sufs = _suffixes(address)
    for pair in CUT_POINT_PAIRS:
        for member in pair:
            # address = w + member.u + member.v^inf: look at suffixes equal to member
            if _canonical(member.u, member.v) in sufs:
                return True
    return False


def is_open_edge_address(address: Lasso) -> bool:
    """True when the tail of the address runs in the open-edge automaton.

    These are the points of Y' lying on open edges of the removal sets
    (the edges of K included); they have a second address or fall outside
    the half-open domain of the maps.  The printed cut-point pairs are
    among them.
    """
    return suffix_in_graph(address.u, address.v)


# ---------------------------------------------------------------------------
# natural extension


def _dual_word_map(indices: str) -> AffineMap:
    out = AffineMap(Cyclo.one(), Cyclo.zero(), "")
    for c in indices:
        out = out.compose(_dual_map(XI[int(c)]))
    return out


def phi_prime(y: Fraction) -> Cyclo:
    """Point of the dual attractor coded by the base-4 digits of ``y`` in [0, 1).

    ``y = sum y_i 4^-i`` gives ``g_{y_1}(g_{y_2}(...))`` with ``g_k`` the dual
    map of digit ``xi(k)``; rational ``y`` has a lasso expansion, so the
    value is exact.
    """
    y = Fraction(y)
    if not 0 <= y < 1:
        raise ValueError("y must lie in [0, 1)")

    def step(v):
        d = int(4 * v)
        return d, 4 * v - d

    u, v = _lasso_from_orbit(y, step)
    head = _dual_word_map("".join(map(str, u)))
    cyc = _dual_word_map("".join(map(str, v)))
    return head(cyc.fixed_point())


@dataclass(frozen=True)
class NaturalExtensionPoint:
    forward: Cyclo
    backward: Cyclo


def natural_extension_step(p: NaturalExtensionPoint, m: int | None = None) -> NaturalExtensionPoint:
    """``(eta, theta) -> (S eta, zeta^(-2m)(theta - u_m)/omega^2)`` with m the digit of ``eta``."""
    h = first_hit_U(p.forward)
    if h is Undefined:
        raise PeriodicPointError("the forward point is T-periodic")
    if m is not None and m != h.digit_index:
        raise ValueError(f"digit {m} does not match the forward point (digit {h.digit_index})")
    m = h.digit_index
    if m not in XI:
        raise NotInDomainError(f"digit {m} is not an address digit of Y'")
    return NaturalExtensionPoint(omega() ** 2 * h.value, _dual_map(m)(p.backward))


def rho_hat(x: Dyadic, y: Fraction):
    """``(x, y) -> (rho(x), (y + c)/4)`` with ``c = (-x) mod 4`` the coding digit moved across."""
    c = _z2_digit(-x.value)
    return rho(x), (Fraction(y) + c) / 4


# ---------------------------------------------------------------------------
# pure periodicity


@dataclass
class PurityReport:
    point: Cyclo
    purely_periodic: bool
    preperiod: int
    cycle: int
    conjugate: Cyclo
    dual_inside: bool
    dual_depth: int

    def to_json(self) -> dict:
        return {
            "point": self.point.to_string(),
            "purely_periodic": self.purely_periodic,
            "preperiod": self.preperiod,
            "cycle": self.cycle,
            "conjugate": self.conjugate.to_string(),
            "dual_evidence": {"inside_all_covers": self.dual_inside, "depth": self.dual_depth},
        }


def pure_periodicity_test(y, depth: int = 8) -> PurityReport:
    """Decide pure periodicity of the S-expansion of ``y`` and test ``phi(y)`` against 𝒴.

    The decision comes from the exact S-orbit; the dual evidence is
    ``(inside, depth)`` from the outer covers of the dual attractor.
    """
    y = _as_point(y)
    cert = classify(y)
    if cert.periodic:
        raise PeriodicPointError(f"{y.to_string()} is T-periodic; its S-orbit terminates")
    theta = galois(y, 2)
    inside, reached = in_dual_cover(theta, depth)
    return PurityReport(y, cert.preperiod == 0, cert.preperiod, cert.cycle, theta, inside, reached)


# ---------------------------------------------------------------------------
# diagram suites


def drop_digit_mismatches(samples: int = 100, seed: int = 0) -> int:
    """How often ``phi(drop_digit(x)) != S(phi(x))`` on generic samples."""
    return sum(phi_map(drop_digit(x)) != step_S(phi_map(x))
               for x in _sample(samples, seed, 6, True))


def random_dyadic(rng: random.Random, max_prefix: int = 6, max_cycle: int = 4) -> Dyadic:
    prefix = [rng.randrange(4) for _ in range(rng.randrange(max_prefix + 1))]
    cycle = [rng.randrange(4) for _ in range(rng.randint(1, max_cycle))]
    return Dyadic.from_digits(prefix, cycle)


def _sample(samples, seed, depth, avoid_cutpoints):
    rng = random.Random(seed)
    out = []
    while len(out) < samples:
        x = random_dyadic(rng, depth, 4)
        if avoid_cutpoints and is_open_edge_address(address_of_dyadic(x)):
            continue
        out.append(x)
    return out


def _suite(name, check, samples, seed, depth, avoid_cutpoints):
    report = {"diagram": name, "samples": samples, "seed": seed, "depth": depth,
              "avoid_cutpoints": avoid_cutpoints,
              "exact_passes": 0, "cutpoint_exceptions": [], "failures": []}
    for x in _sample(samples, seed, depth, avoid_cutpoints):
        try:
            ok = check(x)
        except (NotInDomainError, ConsistencyError, PeriodicPointError) as exc:
            ok, why = False, str(exc)
        else:
            why = "values differ"
        if ok:
            report["exact_passes"] += 1
            continue
        address = address_of_dyadic(x)
        entry = {"x": str(x), "address": str(address), "reason": why,
                 "printed_pair": is_cutpoint_address(address)}
        if is_open_edge_address(address):
            report["cutpoint_exceptions"].append(entry)
        else:
            report["failures"].append(entry)
    return report


def additive_diagram_suite(samples: int = 100, seed: int = 0, depth: int = 6,
                           avoid_cutpoints: bool = False) -> dict:
    """``phi(x + 1) = T~(phi(x))`` on random lasso 2-adics."""
    return _suite("additive", lambda x: phi_map(add_one(x)) == step_Ttilde(phi_map(x)),
                  samples, seed, depth, avoid_cutpoints)


def multiplicative_diagram_suite(samples: int = 100, seed: int = 0, depth: int = 6,
                                 avoid_cutpoints: bool = False) -> dict:
    """``phi(rho(x)) = S(phi(x))`` on random lasso 2-adics."""
    return _suite("multiplicative", lambda x: phi_map(rho(x)) == step_S(phi_map(x)),
                  samples, seed, depth, avoid_cutpoints)


def natural_extension_suite(samples: int = 100, seed: int = 0, depth: int = 6,
                            avoid_cutpoints: bool = False) -> dict:
    """``(phi x phi') o rho_hat = S_hat o (phi x phi')`` on random pairs, exactly.

    The second coordinate is a random base-4 rational in [0, 1) with
    ``depth`` digits.
    """
    rng = random.Random(seed + 1)

    def check(x):
        y = Fraction(rng.randrange(4 ** depth), 4 ** depth)
        x2, y2 = rho_hat(x, y)
        lhs = NaturalExtensionPoint(phi_map(x2), phi_prime(y2))
        rhs = natural_extension_step(NaturalExtensionPoint(phi_map(x), phi_prime(y)))
        return lhs == rhs

    return _suite("natural-extension", check, samples, seed, depth, avoid_cutpoints)
