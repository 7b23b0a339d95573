"""Text formats: edge-list files, set-family files, DOT export.

Edge lists start with a header ``n m`` followed by ``m`` lines ``u v``;
``#`` starts a comment and blank lines are ignored.  Family files start
with ``n <value>`` followed by one line per non-empty set, ``S<i>: v ...``.
"""

from __future__ import annotations

import os

from .graphs import Graph
from .split import NotSplitError, split_partition
from .unswitchable import EggletonFamily


class EdgeListParseError(ValueError):
    """Malformed edge-list text; the message carries the line number."""


class FamilyParseError(ValueError):
    """Malformed family text; the message carries the line number."""


def _data_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def write_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def read_edge_list(text: str) -> Graph:
    """Parse an edge list; either endpoint order is tolerated.

    Raises :class:`EdgeListParseError` with a line number on any defect:
    bad header, non-integer tokens, out-of-range endpoints, self-loops,
    duplicate pairs, or an edge count that disagrees with the header.
    """
    lines = list(_data_lines(text))
    if not lines:
        raise EdgeListParseError("line 1: missing 'n m' header")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or not all(p.lstrip("-").isdigit() for p in parts):
        raise EdgeListParseError(f"line {lineno}: header must be 'n m', got {header!r}")
    n, m = int(parts[0]), int(parts[1])
    if n < 0 or m < 0:
        raise EdgeListParseError(f"line {lineno}: counts must be non-negative")
    if len(lines) - 1 != m:
        raise EdgeListParseError(
            f"line {lineno}: header promises {m} edges, found {len(lines) - 1}"
        )
    edges = []
    seen = set()
    for lineno, line in lines[1:]:
        parts = line.split()
        if len(parts) != 2 or not all(p.lstrip("-").isdigit() for p in parts):
            raise EdgeListParseError(f"line {lineno}: expected 'u v', got {line!r}")
        u, v = int(parts[0]), int(parts[1])
        if u == v:
            raise EdgeListParseError(f"line {lineno}: self-loop at {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListParseError(
                f"line {lineno}: endpoint outside 0..{n - 1} in ({u}, {v})"
            )
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise EdgeListParseError(f"line {lineno}: duplicate edge ({e[0]}, {e[1]})")
        seen.add(e)
        edges.append(e)
    return Graph(n, edges)


def load_graph(path: str | os.PathLike) -> Graph:
    with open(path) as fh:
        try:
            return read_edge_list(fh.read())
        except EdgeListParseError as exc:
            raise EdgeListParseError(f"{path}: {exc}") from None


def save_graph(path: str | os.PathLike, g: Graph) -> None:
    with open(path, "w") as fh:
        fh.write(write_edge_list(g))


def write_family(family: EggletonFamily) -> str:
    lines = [f"n {family.n}"]
    for idx, s in enumerate(family.sets, start=1):
        if s:
            lines.append(f"S{idx}: " + " ".join(str(v) for v in sorted(s)))
    return "\n".join(lines) + "\n"


def read_family(text: str) -> EggletonFamily:
    """Parse a set family; omitted indices denote empty sets."""
    lines = list(_data_lines(text))
    if not lines:
        raise FamilyParseError("line 1: missing 'n <value>' header")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or parts[0] != "n" or not parts[1].isdigit():
        raise FamilyParseError(
            f"line {lineno}: header must be 'n <value>', got {header!r}"
        )
    n = int(parts[1])
    if n < 1:
        raise FamilyParseError(f"line {lineno}: n must be positive")
    sets: list[set[int]] = [set() for _ in range(2 * n)]
    filled: set[int] = set()
    for lineno, line in lines[1:]:
        name, sep, rest = line.partition(":")
        name = name.strip()
        if not sep or not name.startswith("S") or not name[1:].isdigit():
            raise FamilyParseError(f"line {lineno}: expected 'S<i>: v ...', got {line!r}")
        idx = int(name[1:])
        if not 1 <= idx <= 2 * n:
            raise FamilyParseError(f"line {lineno}: set index {idx} outside 1..{2 * n}")
        if idx in filled:
            raise FamilyParseError(f"line {lineno}: set S{idx} given twice")
        filled.add(idx)
        for tok in rest.split():
            if not tok.isdigit():
                raise FamilyParseError(f"line {lineno}: bad vertex label {tok!r}")
            sets[idx - 1].add(int(tok))
    try:
        return EggletonFamily(n, tuple(frozenset(s) for s in sets))
    except ValueError as exc:
        raise FamilyParseError(str(exc)) from None


def load_family(path: str | os.PathLike) -> EggletonFamily:
    with open(path) as fh:
        try:
            return read_family(fh.read())
        except FamilyParseError as exc:
            raise FamilyParseError(f"{path}: {exc}") from None


def save_family(path: str | os.PathLike, family: EggletonFamily) -> None:
    with open(path, "w") as fh:
        fh.write(write_family(family))


def to_dot(g: Graph) -> str:
    """DOT text; when a split partition exists the two sides share a rank."""
    lines = ["graph G {"]
    ranked: set[int] = set()
    try:
        part = split_partition(g)
    except NotSplitError:
        part = None
    if part is not None and part.clique and part.independent:
        for side in (part.clique, part.independent):
            members = "; ".join(str(v) for v in sorted(side))
            lines.append(f"  {{ rank=same; {members}; }}")
            ranked |= side
    for v in range(g.n):
        if g.degree(v) == 0 and v not in ranked:
            lines.append(f"  {v};")
    for u, v in g.edges:
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
