"""Command line interface: ``pentadyn <command> [options]``.

Exit codes: ``decide`` returns 0 for a periodic point and 10 for an
aperiodic one; ``verify`` returns 1 when a suite fails; every command
returns 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .cyclo import parse_cyclo

log = logging.getLogger("pentadyn")

EXIT_OK = 0
EXIT_APERIODIC = 10
EXIT_INPUT = 2
EXIT_FAIL = 1

SUITES = ("self-inducing", "osc", "cylinders", "diagrams", "constants", "conjecture", "automaton")
RENDER_SETS = ("Y", "Yprime", "dual", "D", "orbit")


class InputError(ValueError):
    pass


def _point(text):
    if text is None:
        raise InputError("--point is required")
    try:
        return parse_cyclo(text, 5)
    except (ValueError, SyntaxError, ZeroDivisionError) as exc:
        raise InputError(f"cannot parse point {text!r}: {exc}") from exc


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


# ---------------------------------------------------------------------------
# commands


def cmd_decide(args) -> int:
    from .dynamics import NotInDomainError, classify

    x = _point(args.point)
    try:
        cert = classify(x)
    except NotInDomainError as exc:
        raise InputError(str(exc)) from exc
    _emit(cert.dumps(), args.out)
    return EXIT_OK if cert.periodic else EXIT_APERIODIC


def _orbit_points(x, which: str, steps: int):
    from .dynamics import Undefined, orbit_T, step_S, step_Ttilde

    if which == "T":
        return orbit_T(x, steps)
    out = [x]
    for _ in range(steps):
        y = step_Ttilde(out[-1]) if which == "Ttilde" else step_S(out[-1])
        if y is Undefined:
            break
        out.append(y)
    return out


def cmd_orbit(args) -> int:
    from .dynamics import NotInDomainError

    x = _point(args.point)
    try:
        pts = _orbit_points(x, args.map, args.steps)
    except NotInDomainError as exc:
        raise InputError(str(exc)) from exc
    if args.format == "csv":
        lines = ["n,point,re,im"]
        lines += [f"{k},\"{p.to_string()}\",{complex(p).real:.12g},{complex(p).imag:.12g}" for k, p in enumerate(pts)]
        _emit("\n".join(lines) + "\n", args.out)
    else:
        _emit(_dump({"schema": 1, "point": x.to_string(), "map": args.map,
                     "orbit": [p.to_string() for p in pts]}), args.out)
    return EXIT_OK


def cmd_code(args) -> int:
    from .dynamics import NotInDomainError
    from .symbolic import address_of, coding_d, coding_dtilde

    x = _point(args.point)
    try:
        if args.map == "T":
            word, truncated = coding_d(x, args.len), False
        elif args.map == "Ttilde":
            word, truncated = coding_dtilde(x, args.len), False
        else:
            word, truncated = address_of(x, args.len)
    except NotInDomainError as exc:
        raise InputError(str(exc)) from exc
    _emit(_dump({"schema": 1, "point": x.to_string(), "map": args.map, "length": args.len,
                 "word": word, "truncated": truncated}), args.out)
    return EXIT_OK


def cmd_render(args) -> int:
    from . import fractal

    if args.set not in RENDER_SETS:
        raise InputError(f"unknown set {args.set!r}")
    if not 0 <= args.depth <= 10:
        raise InputError("depth must be between 0 and 10")
    if args.set == "orbit":
        from .dynamics import orbit_T

        x = _point(args.point or "1/3")
        pts = [complex(p) for p in orbit_T(x, args.N - 1)]
        text = fractal.svg_points(pts, title=f"orbit of {x.to_string()}")
        count = len(pts)
        name = f"orbit_{args.N}.svg"
        summary = {"points": count}
    else:
        if args.set == "D":
            pieces = fractal.pentagon_removal(args.depth)
            polys = [p for _, parts in pieces for p in parts]
            count = len(pieces)
        else:
            system = {"Y": fractal.ifs_Y, "Yprime": fractal.ifs_Yprime, "dual": fractal.ifs_dual}[args.set]()
            polys = [p for _, p in fractal.attractor_cover(system, args.depth)]
            count = len(polys)
        text = fractal.svg_polygons(polys, title=f"{args.set} depth {args.depth}")
        name = f"{args.set}_{args.depth}.svg"
        summary = {"depth": args.depth, "pieces": count, "convex_parts": len(polys)}
    out = Path(args.out) if args.out else Path(name)
    if out.is_dir():
        out = out / name
    out.write_text(text)
    log.info("wrote %s (%d pieces)", out, count)
    _emit(_dump({"schema": 1, "set": args.set, **summary, "file": str(out)}), None)
    return EXIT_OK


def cmd_scan(args) -> int:
    from .nfold import DEFAULT_SYSTEMS, scan_periodic_fraction

    if args.n not in DEFAULT_SYSTEMS:
        raise InputError(f"n must be one of {sorted(DEFAULT_SYSTEMS)}")
    if args.resolution < 1 or args.max_iter < 1:
        raise InputError("resolution and max-iter must be positive")
    report = scan_periodic_fraction(DEFAULT_SYSTEMS[args.n], args.resolution, args.max_iter)
    _emit(report.to_csv() if args.format == "csv" else report.to_json(), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.suite not in SUITES:
        raise InputError(f"unknown suite {args.suite!r}")
    report = run_suite(args.suite, samples=args.N, seed=args.seed)
    _emit(_dump(report), args.out)
    return EXIT_OK if report["ok"] else EXIT_FAIL


# ---------------------------------------------------------------------------
# verification suites


def run_suite(name: str, samples: int | None = None, seed: int = 0) -> dict:
    fn = {
        "self-inducing": _suite_self_inducing,
        "osc": _suite_osc,
        "cylinders": _suite_cylinders,
        "diagrams": _suite_diagrams,
        "constants": _suite_constants,
        "conjecture": _suite_conjecture,
        "automaton": _suite_automaton,
    }[name]
    out = fn(samples, seed)
    return {"schema": 1, "suite": name, **out}


def _suite_self_inducing(samples, seed):
    from .dynamics import sample_L, self_inducing_check
    from .regions import named_region

    p0 = named_region("P0")
    pts = sample_L(samples or 2000, seed)
    counts = {"self": [0, 0], "self2": [0, 0]}
    outside_p0 = []
    for x in pts:
        a, b = self_inducing_check(x)
        counts["self"][0 if a else 1] += 1
        if b is not None:
            counts["self2"][0 if b else 1] += 1
        if (not a or b is False) and not p0.contains(x):
            outside_p0.append(x.to_string())
    return {"samples": len(pts),
            "self": {"passes": counts["self"][0], "failures": counts["self"][1]},
            "self2": {"passes": counts["self2"][0], "failures": counts["self2"][1]},
            "failures_outside_P0": outside_p0,
            "ok": counts["self"][1] == 0 and counts["self2"][1] == 0}


def _suite_osc(samples, seed):
    from .fractal import ifs_Yprime, osc_check

    reps = {d: osc_check(ifs_Yprime(), d) for d in (1, 2)}
    return {str(d): {"pieces": r.pieces, "overlaps": r.overlaps, "outside": r.outside} for d, r in reps.items()} | {
        "ok": all(r.ok for r in reps.values())}


def _suite_cylinders(samples, seed):
    from .fractal import PULLBACK_RELATIONS, cylinder_pullback

    rows = [{"target": t, "source": s, "branch": cylinder_pullback(t, s)} for t, s in PULLBACK_RELATIONS]
    return {"relations": rows, "ok": all(r["branch"] is not None for r in rows)}


def _suite_diagrams(samples, seed):
    from .odometer import additive_diagram_suite, multiplicative_diagram_suite, natural_extension_suite

    n = samples or 100
    reps = [f(samples=n, seed=seed, avoid_cutpoints=True)
            for f in (additive_diagram_suite, multiplicative_diagram_suite, natural_extension_suite)]
    raw = [f(samples=n, seed=seed)
           for f in (additive_diagram_suite, multiplicative_diagram_suite, natural_extension_suite)]
    ok = all(r["exact_passes"] == r["samples"] for r in reps) and all(not r["failures"] for r in raw)
    return {"generic": reps, "unrestricted": raw, "ok": ok}


def _suite_constants(samples, seed):
    from .nfold import verify_constants

    rep = verify_constants()
    return {"checks": rep.checks, "ok": rep.ok}


def _suite_conjecture(samples, seed):
    from .dynamics import recurrence_check

    bound = samples or 50
    disagree = []
    total = 0
    for a0 in range(-bound, bound + 1):
        for a1 in range(-bound, bound + 1):
            r = recurrence_check(a0, a1)
            total += 1
            if not r.agree:
                disagree.append([a0, a1])
    return {"bound": bound, "pairs": total, "disagreements": disagree, "ok": not disagree}


def _suite_automaton(samples, seed):
    from .symbolic import accepts_lasso, build_edge_automaton

    aut = build_edge_automaton()
    rule = sorted(aut.successors("5R"))
    radius = aut.spectral_radius()
    one_third = accepts_lasso(aut, "", "5005")
    periodic = accepts_lasso(aut, "3", "0")
    return {"rule_5R": rule, "spectral_radius": radius,
            "accepts_T(1/3)": one_third, "accepts_3|0": periodic,
            "ok": rule == ["0R", "3L"] and not one_third and periodic and radius <= 2.01}


# ---------------------------------------------------------------------------
# entry point


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="pentadyn", description="Exact dynamics of the pentagonal lozenge map.")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decide", help="decide periodicity of a point (exit 0 periodic, 10 aperiodic)")
    p.add_argument("--point", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("orbit", help="orbit under T, T~ or S")
    p.add_argument("--point", required=True)
    p.add_argument("--map", choices=("T", "Ttilde", "S"), default="T")
    p.add_argument("--steps", type=int, default=10)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("code", help="coding of the T or T~ orbit, or the address along S")
    p.add_argument("--point", required=True)
    p.add_argument("--map", choices=("T", "Ttilde", "S"), default="T")
    p.add_argument("--len", type=int, default=26)
    p.add_argument("--out")
    p.set_defaults(func=cmd_code)

    p = sub.add_parser("render", help="write an SVG of an attractor cover, D_i, or an orbit")
    p.add_argument("--set", required=True, choices=RENDER_SETS)
    p.add_argument("--depth", type=int, default=3)
    p.add_argument("--point")
    p.add_argument("--N", type=int, default=10000)
    p.add_argument("--format", choices=("svg",), default="svg")
    p.add_argument("--out")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("verify", help="run a verification suite (exit 1 on failure)")
    p.add_argument("--suite", required=True, choices=SUITES)
    p.add_argument("--N", type=int, default=None, help="sample count (bound for the conjecture suite)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scan", help="periodic fraction of a grid for the n-fold maps")
    p.add_argument("--n", type=int, default=7)
    p.add_argument("--resolution", type=int, default=20)
    p.add_argument("--max-iter", type=int, default=2000)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_scan)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args)
    except InputError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
