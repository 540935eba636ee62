"""Experiment suites behind ``cliqueph experiment``.

Each suite returns a summary dict and, given an output directory, writes the
diagrams it computed plus a ``summary.txt`` table.
"""
from __future__ import annotations

import logging
import math
import statistics
from fractions import Fraction
from pathlib import Path

import numpy as np

from . import generators as gen
from .bottleneck import bottleneck_distance
from .datasets import DatasetMissing, load_dataset
from .diagram_io import format_value, write_csv
from .graph import UnweightedGraph
from .persistence import CLIQUE, CLIQUENESS, INF, KINDS, POWER
from .pipelines import AnalysisRequest, diagrams, essential_count, run
from .stability import stability_chain

logger = logging.getLogger(__name__)


def _save(outdir, name, diags):
    if outdir is None:
        return
    path = Path(outdir) / f"{name}.csv"
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as fh:
        write_csv(diags, fh)


def _write_summary(outdir, lines):
    if outdir is None:
        return
    Path(outdir).mkdir(parents=True, exist_ok=True)
    (Path(outdir) / "summary.txt").write_text("\n".join(lines) + "\n", encoding="utf-8")


def _fmt(x):
    return "inf" if x == INF else f"{float(x):.4g}"


def significant(diag, threshold) -> list:
    """Points with persistence at least ``threshold``; essential points always qualify."""
    return [p for p in diag.points if p[1] == INF or abs(p[0] - p[1]) >= threshold]


def _persistence(p):
    return math.inf if p[1] == INF else abs(p[0] - p[1])


def random_trial_pair(rng: np.random.Generator, n_max: int = 30):
    """Random G(n, p) graph and a copy with one vertex pair toggled."""
    n = int(rng.integers(4, n_max + 1))
    p = float(rng.uniform(0.05, 0.5))
    g = gen.sample_gnp(n, p, int(rng.integers(2**63)))
    u, v = (int(x) for x in rng.choice(n, size=2, replace=False))
    return g, g.with_edge_toggled(u, v)


def stability_trials(seed: int = 7, trials: int = 200, n_max: int = 30, max_dim: int = 1, outdir=None):
    rng = np.random.Generator(np.random.PCG64(seed))
    worst = {k: [Fraction(0)] * (max_dim + 1) for k in KINDS}
    inf_count = {k: 0 for k in KINDS}
    violations = []
    for t in range(trials):
        g1, g2 = random_trial_pair(rng, n_max)
        for kind in KINDS:
            a = diagrams(g1, kind, max_dim)
            b = diagrams(g2, kind, max_dim)
            dists = [bottleneck_distance(x, y) for x, y in zip(a, b)]
            inf_count[kind] += any(d == INF for d in dists)
            worst[kind] = [max(w, d) for w, d in zip(worst[kind], dists)]
        chain = stability_chain(g1, g2, max_dim)
        violations += [f"trial {t}: {v}" for v in chain.violations()]
    lines = ["kind        " + "  ".join(f"max B(H{p})" for p in range(max_dim + 1)) + "  trials with inf"]
    for kind in KINDS:
        lines.append(f"{kind:<12}" + "  ".join(f"{_fmt(w):>10}" for w in worst[kind]) + f"  {inf_count[kind]:>15}")
    lines.append(f"distance-chain violations: {len(violations)}")
    lines += violations
    _write_summary(outdir, lines)
    return {"worst": worst, "inf_trials": inf_count, "violations": violations, "lines": lines}


def _fixture_suite(name, graphs, max_dim, outdir):
    lines, table = [], {}
    for gname, g in graphs.items():
        for kind in KINDS:
            diags = diagrams(g, kind, max_dim)
            _save(outdir, f"{gname}_{kind}", diags)
            table[(gname, kind)] = diags
            for d in diags:
                fin = d.finite()
                shown = d.sorted_points() if len(d) <= 8 else sorted(d.points, key=_persistence, reverse=True)[:5]
                lines.append(f"{gname:<24}{kind:<12}H{d.dimension}: finite={len(fin)} "
                             f"infinite={essential_count(d)} " + ("points=" if len(d) <= 8 else "top: ")
                             + " ".join(f"({format_value(b)},{format_value(x)})" for b, x in shown))
    _write_summary(outdir, [name] + lines)
    return {"diagrams": table, "lines": lines}


def figure1_suite(seed: int = 0, k: int = 5, outdir=None):
    graphs = {"single_clique": gen.single_clique(k), "two_cliques": gen.two_cliques(k),
              "bridged_cliques": gen.bridged_cliques(k)}
    return _fixture_suite("single / two / bridged cliques", graphs, 1, outdir)


def figure3_suite(seed: int = 0, n: int = 20, span: int = 3, outdir=None):
    graphs = {"dense_cycle": gen.dense_cycle(n, span),
              "dense_cycle_with_chord": gen.dense_cycle_with_chord(n, span)}
    return _fixture_suite("dense cycle with and without chord", graphs, 1, outdir)


def sbm_significant_count(g: UnweightedGraph, factor: float = 5.0) -> int:
    """Finite cliqueness H0 points with persistence above ``factor`` x the median."""
    (d0,) = diagrams(g, CLIQUENESS, 0)
    pers = [abs(b - d) for b, d in d0.finite()]
    if not pers:
        return 0
    med = statistics.median(pers)
    return sum(1 for p in pers if p > factor * med)


def sbm_suite(seed: int = 0, spec: gen.SbmSpec | None = None, outdir=None):
    spec = spec or gen.SbmSpec(seed=seed)
    n = sum(spec.block_sizes)
    multi = gen.sample_sbm(spec)
    # one community with the same expected edge count
    density = multi.num_edges / (n * (n - 1) / 2)
    single = gen.sample_sbm(gen.SbmSpec((n,), density, 0.0, seed))
    lines = [f"SBM blocks={list(spec.block_sizes)} p_in={spec.p_in} p_out={spec.p_out} seed={seed}"]
    out = {}
    for gname, g in (("one_block", single), ("four_blocks", multi)):
        for kind in KINDS:
            # only H0 is reported; above dimension 0 the one-block graph (diameter ~2)
            # has a near-complete cliqueness support and millions of triangles
            diags = diagrams(g, kind, 0)
            _save(outdir, f"{gname}_{kind}", diags)
            h0 = diags[0]
            if kind == CLIQUENESS:
                sig = sbm_significant_count(g)
            else:
                sig = essential_count(h0)
            out[(gname, kind)] = sig
            lines.append(f"{gname:<12}{kind:<12}edges={g.num_edges} H0 significant={sig} "
                         f"essential={essential_count(h0)}")
    _write_summary(outdir, lines)
    return {"significant": out, "lines": lines}


def rgg_suite(seed: int = 3, n: int = 200, radius: float = 0.25, outdir=None, kinds=KINDS):
    g, xy = gen.sample_circle_rgg(gen.CircleRggSpec(n, radius, seed))
    g2 = gen.add_random_edge(g, seed + 1)
    degs = [g.degree(v) for v in g.vertices]
    lines = [f"circle RGG n={n} r={radius} seed={seed}: mean degree {statistics.mean(degs):.2f} "
             f"(sd {statistics.pstdev(degs):.2f})"]
    out = {}
    for gname, gg in (("rgg", g), ("rgg_chord", g2)):
        for kind in kinds:
            diags = diagrams(gg, kind, 1)
            _save(outdir, f"{gname}_{kind}", diags)
            h1 = diags[1]
            out[(gname, kind)] = h1
            top = sorted(h1.points, key=_persistence, reverse=True)[:5]
            lines.append(f"{gname:<10}{kind:<12}H1: finite={len(h1.finite())} infinite={essential_count(h1)} "
                         "top: " + " ".join(f"({_fmt(b)},{_fmt(d)})" for b, d in top))
    if outdir is not None:
        Path(outdir).mkdir(parents=True, exist_ok=True)
        np.savetxt(Path(outdir) / "rgg_coords.csv", xy, delimiter=",", header="x,y", comments="")
    _write_summary(outdir, lines)
    return {"h1": out, "lines": lines, "graph": g, "graph_chord": g2}


def real_suite(seed: int = 0, names=("karate", "dolphins", "protein"), threshold: float = 0.3, outdir=None):
    lines, out = [], {}
    for name in names:
        try:
            g = load_dataset(name)
        except DatasetMissing as exc:
            lines.append(f"{name:<10}skipped: {exc}")
            continue
        diags, report = run(AnalysisRequest(g, CLIQUENESS, 1, drop_zero=True))
        _save(outdir, f"{name}_{CLIQUENESS}", diags)
        sig = [len(significant(d, threshold)) for d in diags]
        out[name] = {"diagrams": diags, "report": report, "significant": sig}
        lines.append(f"{name:<10}n={g.n} m={g.num_edges} significant(>= {threshold}): "
                     + " ".join(f"H{p}={s}" for p, s in enumerate(sig))
                     + f" time={sum(report.timings.values()):.2f}s")
    _write_summary(outdir, lines)
    return {"results": out, "lines": lines}


SUITES = {
    "stability_trials": stability_trials,
    "figure1_suite": figure1_suite,
    "figure3_suite": figure3_suite,
    "sbm_suite": sbm_suite,
    "rgg_suite": rgg_suite,
    "real_suite": real_suite,
}
