"""Scan dense cycles for the chord effect on cliqueness H1.

For each (n, span) the script reports the nonzero H1 points of the cycle with
and without the antipodal chord, and the ratio between the two largest
persistences when the chord splits the loop in two.
"""
import argparse

from cliqueph import generators as gen
from cliqueph.diagram_io import format_value
from cliqueph.persistence import CLIQUENESS
from cliqueph.pipelines import diagrams


def nonzero_h1(g):
    return [p for p in diagrams(g, CLIQUENESS, 1)[1].points if p[0] != p[1]]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, nargs="+", default=[12, 16, 20, 24, 30])
    ap.add_argument("--span", type=int, nargs="+", default=[2, 3])
    args = ap.parse_args()
    print("n\tspan\tplain\tchord\tratio")
    for n in args.n:
        for span in args.span:
            if not span < n / 2:
                continue
            plain = nonzero_h1(gen.dense_cycle(n, span))
            chord = nonzero_h1(gen.dense_cycle_with_chord(n, span))
            pers = sorted((b - d for b, d in chord), reverse=True)
            ratio = format_value(pers[0] / pers[1], as_float=True) if len(pers) >= 2 and pers[1] else "-"
            show = lambda pts: " ".join(f"({format_value(b)},{format_value(d)})" for b, d in pts) or "-"
            print(f"{n}\t{span}\t{show(plain)}\t{show(chord)}\t{ratio}")


if __name__ == "__main__":
    main()
