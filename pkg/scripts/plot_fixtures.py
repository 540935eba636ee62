"""Render persistence diagrams of the hand-built fixture graphs as SVG files."""
import argparse
from pathlib import Path

from cliqueph import generators as gen
from cliqueph.persistence import KINDS
from cliqueph.pipelines import diagrams
from cliqueph.plot import render_svg

FIXTURES = {
    "single_clique": gen.single_clique(5),
    "two_cliques": gen.two_cliques(5),
    "bridged_cliques": gen.bridged_cliques(5),
    "dense_cycle": gen.dense_cycle(20, 3),
    "dense_cycle_with_chord": gen.dense_cycle_with_chord(20, 3),
    "k24": gen.fig4_a(),
    "k24_plus_edge": gen.fig4_b(),
    "two_triangles": gen.fig6_a(),
    "joined_triangles": gen.fig6_b(),
}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path, default=Path("results/figures"))
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    for name, g in FIXTURES.items():
        for kind in KINDS:
            path = args.out / f"{name}_{kind}.svg"
            path.write_text(render_svg(diagrams(g, kind, 1), title=f"{name} ({kind})"), encoding="utf-8")
            print(path)


if __name__ == "__main__":
    main()
