"""Uniform hypergraph model, file parsing, generators, and classification.

Vertices are 0-indexed everywhere inside the library. Files and reports use
1-indexed vertex ids, matching the usual notation [n] = {1, ..., n};
conversion happens only at the parse/serialize boundary.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from functools import cached_property
from io import StringIO
from itertools import combinations
from typing import Iterable, TextIO

from .errors import ParseError, PreconditionError
from .smith import solve_mod


@dataclass(frozen=True)
class Hypergraph:
    """An m-uniform hypergraph on vertices {0, ..., n-1}.

    Edges are stored as strictly increasing m-tuples, sorted and
    deduplicated. Duplicate edges passed to the constructor are dropped
    with a warning; everything else invalid raises ValueError.
    """

    n: int
    m: int
    edges: tuple[tuple[int, ...], ...]

    def __init__(self, n: int, m: int, edges: Iterable[Iterable[int]]):
        if n < 1:
            raise ValueError(f"vertex count must be positive, got {n}")
        if m < 2:
            raise ValueError(f"uniformity must be at least 2, got {m}")
        normalized = []
        for edge in edges:
            e = tuple(sorted(edge))
            if len(e) != m:
                raise ValueError(f"edge {e} has size {len(e)}, expected {m}")
            if len(set(e)) != m:
                raise ValueError(f"edge {e} has repeated vertices")
            if e[0] < 0 or e[-1] >= n:
                raise ValueError(f"edge {e} has a vertex outside [0, {n})")
            normalized.append(e)
        unique = sorted(set(normalized))
        if len(unique) != len(normalized):
            warnings.warn(
                f"dropped {len(normalized) - len(unique)} duplicate edge(s)",
                stacklevel=2,
            )
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "edges", tuple(unique))

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        """Degree of each vertex (number of edges containing it)."""
        d = [0] * self.n
        for e in self.edges:
            for v in e:
                d[v] += 1
        return tuple(d)

    @cached_property
    def _vertex_edges(self) -> tuple[tuple[int, ...], ...]:
        """For each vertex, the indices of edges containing it."""
        incident: list[list[int]] = [[] for _ in range(self.n)]
        for idx, e in enumerate(self.edges):
            for v in e:
                incident[v].append(idx)
        return tuple(tuple(ix) for ix in incident)

    def is_connected(self) -> bool:
        """Walk-based connectivity: breadth-first over shared edges."""
        if self.n == 1:
            return True
        seen = [False] * self.n
        seen[0] = True
        queue = [0]
        count = 1
        while queue:
            v = queue.pop()
            for eidx in self._vertex_edges[v]:
                for u in self.edges[eidx]:
                    if not seen[u]:
                        seen[u] = True
                        count += 1
                        queue.append(u)
        return count == self.n

    def incidence_rows(self) -> list[list[int]]:
        """0/1 vertex-membership indicator row per edge."""
        rows = []
        for e in self.edges:
            row = [0] * self.n
            for v in e:
                row[v] = 1
            rows.append(row)
        return rows


@dataclass(frozen=True)
class SimpleGraph:
    """An ordinary graph: base object for generalized power hypergraphs."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __init__(self, n: int, edges: Iterable[Iterable[int]]):
        if n < 1:
            raise ValueError(f"vertex count must be positive, got {n}")
        normalized = []
        for edge in edges:
            u, v = sorted(edge)
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if u < 0 or v >= n:
                raise ValueError(f"edge ({u}, {v}) outside [0, {n})")
            normalized.append((u, v))
        unique = sorted(set(normalized))
        if len(unique) != len(normalized):
            warnings.warn(
                f"dropped {len(normalized) - len(unique)} duplicate edge(s)",
                stacklevel=2,
            )
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(unique))

    def to_hypergraph(self) -> Hypergraph:
        """View the graph as a 2-uniform hypergraph."""
        return Hypergraph(self.n, 2, self.edges)


@dataclass(frozen=True)
class ClassificationReport:
    """Combinatorial classification of a hypergraph.

    odd_bipartite/odd_colorable are None ("not applicable") exactly when
    the uniformity is odd. Witnesses use 1-indexed vertex ids.
    """

    connected: bool
    cored: bool
    odd_bipartite: bool | None
    odd_colorable: bool | None
    witness_coloring: dict[int, int] | None = None
    witness_bipartition: tuple[int, ...] | None = None


def parse_hypergraph(text: str | TextIO) -> Hypergraph:
    """Parse the HGF text format.

    Lines starting with '#' are comments, blank lines are skipped. The
    first data line is "n m"; each following data line lists the m
    vertex ids (1-indexed) of one edge. Raises ParseError with the
    offending line number on malformed input.
    """
    stream = StringIO(text) if isinstance(text, str) else text
    header: tuple[int, int] | None = None
    edges: list[tuple[int, ...]] = []
    for lineno, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        try:
            values = [int(t) for t in tokens]
        except ValueError:
            raise ParseError(f"expected integers, got {line!r}", lineno) from None
        if header is None:
            if len(values) != 2:
                raise ParseError(f"expected header 'n m', got {line!r}", lineno)
            n, m = values
            if n < 1:
                raise ParseError(f"vertex count must be positive, got {n}", lineno)
            if m < 2:
                raise ParseError(f"uniformity must be at least 2, got {m}", lineno)
            header = (n, m)
            continue
        n, m = header
        if len(values) != m:
            raise ParseError(f"edge has {len(values)} vertices, expected {m}", lineno)
        for v in values:
            if not 1 <= v <= n:
                raise ParseError(f"vertex {v} out of range [1, {n}]", lineno)
        if len(set(values)) != m:
            raise ParseError("edge has repeated vertices", lineno)
        edges.append(tuple(sorted(v - 1 for v in values)))
    if header is None:
        raise ParseError("empty input: missing 'n m' header", 1)
    return Hypergraph(header[0], header[1], edges)


def parse_simple_graph(text: str | TextIO) -> SimpleGraph:
    """Parse a graph file: first data line "n", then one "u v" pair per line."""
    stream = StringIO(text) if isinstance(text, str) else text
    n: int | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        try:
            values = [int(t) for t in tokens]
        except ValueError:
            raise ParseError(f"expected integers, got {line!r}", lineno) from None
        if n is None:
            if len(values) != 1:
                raise ParseError(f"expected header 'n', got {line!r}", lineno)
            n = values[0]
            if n < 1:
                raise ParseError(f"vertex count must be positive, got {n}", lineno)
            continue
        if len(values) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", lineno)
        u, v = values
        for w in (u, v):
            if not 1 <= w <= n:
                raise ParseError(f"vertex {w} out of range [1, {n}]", lineno)
        if u == v:
            raise ParseError(f"loop at vertex {u}", lineno)
        edges.append((u - 1, v - 1))
    if n is None:
        raise ParseError("empty input: missing 'n' header", 1)
    return SimpleGraph(n, edges)


def format_hypergraph(h: Hypergraph, comment: str | None = None) -> str:
    """Serialize back to HGF (1-indexed)."""
    lines = []
    if comment:
        lines.append(f"# {comment}")
    lines.append(f"{h.n} {h.m}")
    for e in h.edges:
        lines.append(" ".join(str(v + 1) for v in e))
    return "\n".join(lines) + "\n"


def gen_complete(n: int, m: int) -> Hypergraph:
    """Complete m-uniform hypergraph on n vertices: all m-subsets."""
    if m < 2:
        raise PreconditionError(f"uniformity must be at least 2, got {m}")
    if n < m + 1:
        raise PreconditionError(f"need n >= m + 1, got n={n}, m={m}")
    return Hypergraph(n, m, combinations(range(n), m))


def gen_power(g: SimpleGraph, m: int) -> Hypergraph:
    """Generalized power hypergraph of a graph.

    Each vertex v becomes a block of m/2 fresh vertices; each graph edge
    {u, v} becomes the hyperedge B_u | B_v. Requires m even, m >= 4, and
    no isolated vertices in g.
    """
    if m % 2 != 0:
        raise PreconditionError(f"uniformity must be even, got {m}")
    if m < 4:
        raise PreconditionError(f"uniformity must be at least 4, got {m}")
    half = m // 2
    touched = set()
    for u, v in g.edges:
        touched.add(u)
        touched.add(v)
    isolated = [v + 1 for v in range(g.n) if v not in touched]
    if isolated:
        raise PreconditionError(f"isolated vertices (1-indexed): {isolated}")

    def block(v: int) -> range:
        return range(v * half, (v + 1) * half)

    edges = [tuple(block(u)) + tuple(block(v)) for u, v in g.edges]
    return Hypergraph(half * g.n, m, edges)


def classify(h: Hypergraph) -> ClassificationReport:
    """Connectivity, coredness, odd-bipartiteness, odd-colorability.

    Odd-colorability asks for f: V -> Z_m with sum_{v in e} f(v) = m/2
    (mod m) on every edge; odd-bipartiteness for a vertex set meeting
    every edge in an odd number of vertices. Both reduce to modular
    linear solvability against the edge indicator rows and are None
    when m is odd. Witnesses are re-verified before being returned.
    """
    connected = h.is_connected()
    degs = h.degrees
    cored = all(any(degs[v] == 1 for v in e) for e in h.edges)

    if h.m % 2 != 0:
        return ClassificationReport(connected, cored, None, None)

    rows = h.incidence_rows()
    half = h.m // 2

    coloring = None
    solution = solve_mod(rows, [half] * len(rows), h.m)
    odd_colorable = solution is not None
    if solution is not None:
        f, _ = solution
        for e in h.edges:
            if sum(f[v] for v in e) % h.m != half:
                raise RuntimeError(f"odd-coloring witness fails on edge {e}")
        coloring = {v + 1: f[v] for v in range(h.n)}

    bipartition = None
    solution2 = solve_mod(rows, [1] * len(rows), 2)
    odd_bipartite = solution2 is not None
    if solution2 is not None:
        x, _ = solution2
        part = tuple(v for v in range(h.n) if x[v] % 2 == 1)
        for e in h.edges:
            if len([v for v in e if v in set(part)]) % 2 != 1:
                raise RuntimeError(f"odd-bipartition witness fails on edge {e}")
        bipartition = tuple(v + 1 for v in part)

    return ClassificationReport(
        connected, cored, odd_bipartite, odd_colorable, coloring, bipartition
    )
