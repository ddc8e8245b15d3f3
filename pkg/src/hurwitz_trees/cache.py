"""Plain-text enumeration cache: a header line ``n=<n>`` then one item per line."""

from __future__ import annotations

from pathlib import Path
from typing import Iterable

from .factorization import Word, check_cap, enumerate_fn
from .geomtree import GeometricTree, enumerate_noncrossing_trees


def cache_path(cache_dir: str | Path, kind: str, n: int) -> Path:
    return Path(cache_dir) / f"{kind}_n{n}.txt"


def write_items(path: Path, n: int, items: Iterable) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    with open(tmp, "w", encoding="utf-8", newline="\n") as fp:
        fp.write(f"n={n}\n")
        for item in items:
            fp.write(f"{item}\n")
    tmp.replace(path)


def read_items(path: Path, kind: str, n: int | None = None) -> list:
    with open(path, encoding="utf-8") as fp:
        header = fp.readline().rstrip("\n")
        if not header.startswith("n="):
            raise ValueError(f"{path}: missing 'n=<n>' header")
        found = int(header[2:])
        if n is not None and found != n:
            raise ValueError(f"{path}: header says n={found}, expected n={n}")
        n = found
        lines = fp.read().split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if kind == "words":
        return [Word.parse(line, n) for line in lines]
    return [GeometricTree.parse(line, n) for line in lines]


def load_or_enumerate(kind: str, n: int, cap: int, cache_dir: str | Path | None = None) -> list:
    """Enumerate words or trees, going through the cache when a directory is given."""
    if kind not in ("words", "trees"):
        raise ValueError(f"unknown kind {kind!r}")
    check_cap(n, cap)
    gen = enumerate_fn if kind == "words" else enumerate_noncrossing_trees
    if cache_dir is None:
        return list(gen(n, cap=cap))
    path = cache_path(cache_dir, kind, n)
    if path.exists():
        try:
            return read_items(path, kind, n)
        except ValueError:
            pass  # unreadable cache is rebuilt
    items = list(gen(n, cap=cap))
    write_items(path, n, items)
    return items
