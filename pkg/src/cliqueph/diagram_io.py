"""CSV / JSON serialization of persistence diagrams.

Values are written exactly (``p/q`` or integers) unless ``as_float`` is set;
the never-dies sentinel is the token ``inf``.
"""
from __future__ import annotations

import csv
import json
from fractions import Fraction
from typing import Iterable, TextIO

from .complex import ASCENDING, DESCENDING
from .persistence import CLIQUENESS, INF, PersistenceDiagram


class DiagramFormatError(ValueError):
    pass


def format_value(x, as_float: bool = False) -> str:
    if x == INF:
        return "inf"
    if as_float:
        return repr(float(x))
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_value(tok: str):
    tok = tok.strip()
    if tok.lower() in ("inf", "+inf", "-inf", "infinity"):
        return INF
    try:
        x = Fraction(tok)
    except (ValueError, ZeroDivisionError):
        raise DiagramFormatError(f"bad diagram value {tok!r}") from None
    return int(x) if x.denominator == 1 and "/" not in tok and "." not in tok else x


def write_csv(diagrams: Iterable[PersistenceDiagram], fh: TextIO, as_float: bool = False) -> None:
    diagrams = list(diagrams)
    if diagrams:
        # listing the dimensions keeps empty diagrams through a round trip
        dims = ",".join(str(d.dimension) for d in diagrams)
        fh.write(f"# kind={diagrams[0].kind} direction={diagrams[0].direction} dims={dims}\n")
    fh.write("dim,birth,death\n")
    for d in diagrams:
        for b, dth in d.points:
            fh.write(f"{d.dimension},{format_value(b, as_float)},{format_value(dth, as_float)}\n")


def diagrams_to_json(diagrams: Iterable[PersistenceDiagram], as_float: bool = False) -> dict:
    diagrams = list(diagrams)
    first = diagrams[0] if diagrams else None
    return {
        "kind": first.kind if first is not None else None,
        "direction": first.direction if first is not None else None,
        "diagrams": [{
            "dim": d.dimension,
            "points": [[format_value(b, as_float), format_value(dth, as_float)] for b, dth in d.points],
        } for d in diagrams],
    }


def write_json(diagrams, fh: TextIO, as_float: bool = False) -> None:
    json.dump(diagrams_to_json(diagrams, as_float), fh, indent=1)
    fh.write("\n")


def _infer_direction(points) -> str:
    for b, d in points:
        if d != INF and b != d:
            return DESCENDING if b > d else ASCENDING
    return DESCENDING


def read_csv(fh: TextIO, kind: str | None = None, direction: str | None = None) -> list[PersistenceDiagram]:
    """Diagrams from ``dim,birth,death`` rows, one per dimension present.

    Without an explicit ``direction`` the convention is inferred from the
    first finite point with positive persistence.
    """
    by_dim: dict[int, list] = {}
    lines = list(fh)
    meta = {}
    for line in lines:
        if line.startswith("#"):
            meta.update(tok.split("=", 1) for tok in line[1:].split() if "=" in tok)
    kind = kind or meta.get("kind")
    direction = direction or meta.get("direction")
    try:
        for tok in filter(None, meta.get("dims", "").split(",")):
            by_dim[int(tok)] = []
    except ValueError:
        raise DiagramFormatError(f"bad dims annotation {meta['dims']!r}") from None
    reader = csv.reader(row for row in lines if row.strip() and not row.startswith("#"))
    for lineno, row in enumerate(reader, 1):
        if [c.strip() for c in row] == ["dim", "birth", "death"]:
            continue
        if len(row) != 3:
            raise DiagramFormatError(f"row {lineno}: expected dim,birth,death")
        try:
            dim = int(row[0])
        except ValueError:
            raise DiagramFormatError(f"row {lineno}: bad dimension {row[0]!r}") from None
        by_dim.setdefault(dim, []).append((parse_value(row[1]), parse_value(row[2])))
    allpts = [p for pts in by_dim.values() for p in pts]
    direction = direction or _infer_direction(allpts)
    kind = kind or (CLIQUENESS if direction == DESCENDING else "clique")
    return [PersistenceDiagram(d, pts, kind, direction) for d, pts in sorted(by_dim.items())]


def read_json(fh: TextIO) -> list[PersistenceDiagram]:
    try:
        doc = json.load(fh)
        out = []
        for entry in doc["diagrams"]:
            pts = [(parse_value(str(b)), parse_value(str(d))) for b, d in entry["points"]]
            out.append(PersistenceDiagram(int(entry["dim"]), pts, doc.get("kind") or CLIQUENESS,
                                          doc.get("direction") or _infer_direction(pts)))
        return out
    except (KeyError, TypeError, ValueError) as exc:
        raise DiagramFormatError(f"malformed diagram JSON: {exc}") from None


def read_diagrams(path) -> list[PersistenceDiagram]:
    with open(path, encoding="utf-8") as fh:
        if str(path).endswith(".json"):
            return read_json(fh)
        return read_csv(fh)
