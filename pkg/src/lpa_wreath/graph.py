"""Finite directed multigraphs, paths, hereditary/saturated vertex sets,
restriction and quotient graphs, and balloon vertices."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import NamedTuple


class GraphError(ValueError):
    pass


class Edge(NamedTuple):
    id: str
    source: str
    range: str


class Path(NamedTuple):
    """A path given by its start vertex and edge sequence; length 0 is a vertex."""

    source: str
    edges: tuple = ()

    def __len__(self):
        return len(self.edges)

    def is_vertex(self) -> bool:
        return not self.edges

    def concat(self, suffix: tuple) -> Path:
        return Path(self.source, self.edges + tuple(suffix))

    def starts_with(self, prefix: Path) -> bool:
        n = len(prefix.edges)
        return self.source == prefix.source and self.edges[:n] == prefix.edges

    def __str__(self):
        return ".".join(self.edges) if self.edges else self.source


@dataclass(frozen=True)
class Graph:
    vertices: tuple
    edges: tuple  # of Edge
    _out: dict = field(init=False, repr=False, compare=False, hash=False)
    _in: dict = field(init=False, repr=False, compare=False, hash=False)
    _edge: dict = field(init=False, repr=False, compare=False, hash=False)
    _order: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        vs = tuple(self.vertices)
        es = tuple(Edge(*e) for e in self.edges)
        object.__setattr__(self, "vertices", vs)
        object.__setattr__(self, "edges", es)
        seen = set()
        for ident in itertools.chain(vs, (e.id for e in es)):
            if ident in seen:
                raise GraphError(f"duplicate identifier {ident!r}")
            seen.add(ident)
        out = {v: [] for v in vs}
        inc = {v: [] for v in vs}
        for e in es:
            for end in (e.source, e.range):
                if end not in out:
                    raise GraphError(f"edge {e.id!r} has unknown endpoint {end!r}")
            out[e.source].append(e)
            inc[e.range].append(e)
        object.__setattr__(self, "_out", {v: tuple(sorted(out[v], key=lambda e: e.id)) for v in vs})
        object.__setattr__(self, "_in", {v: tuple(inc[v]) for v in vs})
        object.__setattr__(self, "_edge", {e.id: e for e in es})
        object.__setattr__(self, "_order", {v: i for i, v in enumerate(vs)})

    def __hash__(self):
        return hash((self.vertices, self.edges))

    # basic structure

    def edge(self, eid: str) -> Edge:
        try:
            return self._edge[eid]
        except KeyError:
            raise GraphError(f"unknown edge {eid!r}") from None

    def has_vertex(self, v) -> bool:
        return v in self._out

    def has_edge(self, e) -> bool:
        return e in self._edge

    def out_edges(self, v) -> tuple:
        """s^{-1}(v), sorted by edge id."""
        return self._out[v]

    def in_edges(self, v) -> tuple:
        return self._in[v]

    def is_sink(self, v) -> bool:
        return not self._out[v]

    def out_neighbors(self, v) -> set:
        return {e.range for e in self._out[v]}

    def vertex_index(self, v) -> int:
        return self._order[v]

    def edges_between(self, xs, ys) -> list:
        """E(X, Y)."""
        xs, ys = set(xs), set(ys)
        return [e for e in self.edges if e.source in xs and e.range in ys]

    def vertex_key(self, w) -> tuple:
        return tuple(sorted(w, key=self.vertex_index))

    # paths

    def path(self, *edge_ids, source=None) -> Path:
        if not edge_ids:
            if source is None or not self.has_vertex(source):
                raise GraphError("a length-0 path needs a known source vertex")
            return Path(source)
        p = Path(self.edge(edge_ids[0]).source, tuple(edge_ids))
        self.check_path(p)
        if source is not None and source != p.source:
            raise GraphError(f"path {p} does not start at {source}")
        return p

    def check_path(self, p: Path):
        if not self.has_vertex(p.source):
            raise GraphError(f"unknown vertex {p.source!r}")
        cur = p.source
        for eid in p.edges:
            e = self.edge(eid)
            if e.source != cur:
                raise GraphError(f"edge {eid!r} does not continue the path at {cur!r}")
            cur = e.range

    def range_of(self, p: Path) -> str:
        return self._edge[p.edges[-1]].range if p.edges else p.source

    def path_vertices(self, p: Path) -> list:
        return [p.source] + [self._edge[e].range for e in p.edges]

    def path_sort_key(self, p: Path):
        return (len(p.edges), p.edges, self._order.get(p.source, -1))

    def paths_from(self, v, max_len: int) -> list:
        out = [Path(v)]
        frontier = [Path(v)]
        for _ in range(max_len):
            frontier = [p.concat((e.id,)) for p in frontier for e in self._out[self.range_of(p)]]
            out.extend(frontier)
        return out

    def __str__(self):
        lines = [f"vertex {v}" for v in self.vertices]
        lines += [f"edge {e.id} {e.source} {e.range}" for e in self.edges]
        return "\n".join(lines)


def parse_graph(text: str) -> Graph:
    vertices, edges = [], []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        kind = parts[0]
        if kind == "vertex" and len(parts) == 2:
            vertices.append(parts[1])
        elif kind == "edge" and len(parts) == 4:
            edges.append(Edge(*parts[1:]))
        else:
            raise GraphError(f"line {lineno}: cannot parse {line!r}")
        try:
            Graph(vertices, edges)
        except GraphError as exc:
            raise GraphError(f"line {lineno}: {exc}") from None
    return Graph(vertices, edges)


def _check_subset(g: Graph, w) -> frozenset:
    w = frozenset(w)
    unknown = [v for v in w if not g.has_vertex(v)]
    if unknown:
        raise GraphError(f"unknown vertex {sorted(unknown)[0]!r} in subset")
    return w


def hereditary_saturated_check(g: Graph, w) -> tuple[bool, bool]:
    w = _check_subset(g, w)
    hereditary = all(g.out_neighbors(v) <= w for v in w)
    saturated = all(
        v in w for v in g.vertices if not g.is_sink(v) and g.out_neighbors(v) <= w
    )
    return hereditary, saturated


def is_hereditary_saturated(g: Graph, w) -> bool:
    return all(hereditary_saturated_check(g, w))


def hsat_closure(g: Graph, w) -> frozenset:
    """Least hereditary saturated superset of ``w``."""
    w = set(_check_subset(g, w))
    while True:
        stack = list(w)
        while stack:
            v = stack.pop()
            for u in g.out_neighbors(v):
                if u not in w:
                    w.add(u)
                    stack.append(u)
        added = {v for v in g.vertices if v not in w and not g.is_sink(v) and g.out_neighbors(v) <= w}
        if not added:
            return frozenset(w)
        w |= added


def enumerate_hsat(g: Graph, bound: int = 16) -> list:
    if len(g.vertices) > bound:
        raise GraphError(f"{len(g.vertices)} vertices exceeds the enumeration bound {bound}")
    found = []
    for r in range(len(g.vertices) + 1):
        for combo in itertools.combinations(g.vertices, r):
            if is_hereditary_saturated(g, combo):
                found.append(frozenset(combo))
    return sorted(found, key=lambda s: (len(s), [g.vertex_index(v) for v in g.vertex_key(s)]))


def restrict(g: Graph, w) -> Graph:
    """Gamma(W) = (W, E(W, W))."""
    w = _check_subset(g, w)
    return Graph([v for v in g.vertices if v in w], [e for e in g.edges if e.source in w and e.range in w])


def quotient(g: Graph, w) -> Graph:
    """Gamma/W: vertices V minus W, edges not ending in W."""
    w = _check_subset(g, w)
    h, s = hereditary_saturated_check(g, w)
    if not (h and s):
        raise GraphError(f"quotient needs a hereditary saturated set (hereditary={h}, saturated={s})")
    return Graph([v for v in g.vertices if v not in w], [e for e in g.edges if e.range not in w])


def is_balloon(g: Graph, v, w) -> bool:
    w = _check_subset(g, w)
    if not g.has_vertex(v):
        raise GraphError(f"unknown vertex {v!r}")
    if not w or v in w:
        return False
    loops = [e for e in g.out_edges(v) if e.range == v]
    if len(loops) != 1:
        return False
    into_w = [e for e in g.out_edges(v) if e.range in w]
    if not into_w:
        return False
    if set(g.out_edges(v)) != set(loops) | set(into_w):
        return False
    return list(g.in_edges(v)) == loops


def enumerate_paths(g: Graph, max_len: int) -> list:
    if max_len < 0:
        raise GraphError("max_len must be >= 0")
    paths = [p for v in g.vertices for p in g.paths_from(v, max_len)]
    return sorted(paths, key=g.path_sort_key)
