"""Regenerate the pictures: Y, Y', the dual attractor, the removal sets D_i
and the orbit of 1/3.  SVG files go to demos/figures/ (or the directory
given as the first argument).

    python3 demos/figures.py [outdir]
"""

import sys
from fractions import Fraction
from pathlib import Path

from pentadyn.dynamics import orbit_T
from pentadyn.fractal import (
    attractor_cover,
    chaos_game,
    ifs_dual,
    ifs_Y,
    ifs_Yprime,
    pentagon_removal,
    svg_points,
    svg_polygons,
)


def main(outdir):
    out = Path(outdir)
    out.mkdir(parents=True, exist_ok=True)

    for system, depth in ((ifs_Y(), 3), (ifs_Yprime(), 4), (ifs_dual(), 4)):
        polys = [p for _, p in attractor_cover(system, depth)]
        path = out / f"{system.name}_cover_{depth}.svg"
        path.write_text(svg_polygons(polys, title=f"{system.name} depth {depth}"))
        print(f"{path}: {len(polys)} polygons")
        pts = chaos_game(system, 20_000, seed=0)
        path = out / f"{system.name}_points.svg"
        path.write_text(svg_points(pts, title=f"{system.name} chaos game"))
        print(f"{path}: {len(pts)} points")

    for i in range(4):
        polys = [p for _, parts in pentagon_removal(i) for p in parts]
        path = out / f"D_{i}.svg"
        path.write_text(svg_polygons(polys, title=f"D_{i}"))
        print(f"{path}: {4 ** i} pieces")

    pts = [complex(p) for p in orbit_T(Fraction(1, 3), 10_000)]
    path = out / "orbit_one_third.svg"
    path.write_text(svg_points(pts, title="orbit of 1/3"))
    print(f"{path}: {len(pts)} points")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else Path(__file__).parent / "figures")
