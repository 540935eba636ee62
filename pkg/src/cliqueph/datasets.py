"""Real-world graphs.

Only the karate club network ships with the package. The dolphin and yeast
protein networks are looked up as edge-list files in ``$CLIQUEPH_DATA`` (or
``./data``) under the names in :data:`FILENAMES`.
"""
from __future__ import annotations

import os
from importlib import resources
from pathlib import Path

from .graph import UnweightedGraph, largest_component, load_edge_list, read_edge_list

FILENAMES = {
    "karate": "karate.txt",
    "dolphins": "dolphins.txt",
    "protein": "yeast_protein.txt",
}

# (vertices, edges) after loading; protein counts are for the largest component
EXPECTED_SIZES = {
    "karate": (34, 78),
    "dolphins": (62, 159),
    "protein": (1458, 1993),
}


class DatasetMissing(FileNotFoundError):
    pass


def data_dirs() -> list[Path]:
    dirs = []
    if os.environ.get("CLIQUEPH_DATA"):
        dirs.append(Path(os.environ["CLIQUEPH_DATA"]))
    dirs.append(Path.cwd() / "data")
    return dirs


def find_dataset(name: str) -> Path | None:
    fname = FILENAMES[name]
    for d in data_dirs():
        if (d / fname).is_file():
            return d / fname
    return None


def load_dataset(name: str) -> UnweightedGraph:
    if name not in FILENAMES:
        raise KeyError(f"unknown dataset {name!r}; choose from {sorted(FILENAMES)}")
    path = find_dataset(name)
    if path is not None:
        g = read_edge_list(path)
    elif name == "karate":
        text = resources.files("cliqueph").joinpath("data", FILENAMES[name]).read_text("utf-8")
        g = load_edge_list(text)
    else:
        raise DatasetMissing(
            f"{FILENAMES[name]} not found in {', '.join(map(str, data_dirs()))}; "
            "set CLIQUEPH_DATA to a directory holding the edge list")
    if name == "protein":
        g = largest_component(g)
    return g
