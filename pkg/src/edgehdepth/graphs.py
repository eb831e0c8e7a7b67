"""Graph families with fixed vertex orderings, and JSON graph files.

Vertices are 0-based.  The orderings below are normative, every other
module (alpha closed forms, relative path/cycle pairs) relies on them:

* ``Path(n)`` / ``Cycle(n)``: x_i -> i-1, edges (i, i+1), plus (0, n-1)
  for the cycle.
* ``Star(n)``: leaves x_i -> i-1, centre y -> n.
* ``GeneralizedStar(ns)``: centre y -> 0, branch i takes the next n_i
  indices, first vertex adjacent to the centre, then a chain.
* ``DoubleBroom(n1, n, n2)``: x -> 0..n1-1, spine y -> n1..n1+n-1,
  z -> n1+n..; x_i ~ y_1, spine chain, y_n ~ z_j.  ``DoubleStar(n1, n2)``
  is the same with n = 2.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path as _FsPath
from typing import Iterable, Union


class ParameterError(ValueError):
    """A family parameter is outside its allowed range."""


class GraphFormatError(ValueError):
    """A graph file is malformed or describes a non-simple graph."""


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Iterable[int]]) -> "Graph":
        """Validate and canonicalize; raises GraphFormatError."""
        if not isinstance(n, int) or isinstance(n, bool) or n < 0:
            raise GraphFormatError(f"vertex count must be a nonnegative integer, got {n!r}")
        seen: set[tuple[int, int]] = set()
        for idx, edge in enumerate(edges):
            pair = list(edge)
            if len(pair) != 2 or not all(isinstance(v, int) and not isinstance(v, bool) for v in pair):
                raise GraphFormatError(f"edges[{idx}]: expected a pair of integers, got {edge!r}")
            u, v = pair
            if u == v:
                raise GraphFormatError(f"edges[{idx}]: loop at vertex {u}")
            for w in (u, v):
                if not 0 <= w < n:
                    raise GraphFormatError(f"edges[{idx}]: vertex {w} out of range [0, {n})")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise GraphFormatError(f"edges[{idx}]: duplicate edge {key}")
            seen.add(key)
        return cls(n, tuple(sorted(seen)))

    def edge_masks(self) -> list[int]:
        return [(1 << u) | (1 << v) for u, v in self.edges]

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}


# -- family specs ---------------------------------------------------------

@dataclass(frozen=True)
class Path:
    n: int


@dataclass(frozen=True)
class Cycle:
    n: int


@dataclass(frozen=True)
class Star:
    n: int


@dataclass(frozen=True)
class GeneralizedStar:
    branches: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.branches)


@dataclass(frozen=True)
class DoubleBroom:
    n1: int
    n: int
    n2: int


@dataclass(frozen=True)
class DoubleStar:
    """Spine of two vertices; unlike DoubleBroom, n1 = 1 or n2 = 1 is allowed."""

    n1: int
    n2: int


@dataclass(frozen=True)
class Custom:
    path: str


FamilySpec = Union[Path, Cycle, Star, GeneralizedStar, DoubleBroom, DoubleStar, Custom]


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise ParameterError(msg)


def build(spec: FamilySpec) -> Graph:
    if isinstance(spec, Path):
        _require(spec.n >= 2, f"Path needs n >= 2, got n={spec.n}")
        return Graph(spec.n, tuple((i, i + 1) for i in range(spec.n - 1)))
    if isinstance(spec, Cycle):
        _require(spec.n >= 3, f"Cycle needs n >= 3, got n={spec.n}")
        edges = [(i, i + 1) for i in range(spec.n - 1)] + [(0, spec.n - 1)]
        return Graph(spec.n, tuple(sorted(edges)))
    if isinstance(spec, Star):
        _require(spec.n >= 1, f"Star needs n >= 1, got n={spec.n}")
        return Graph(spec.n + 1, tuple((i, spec.n) for i in range(spec.n)))
    if isinstance(spec, GeneralizedStar):
        _require(spec.k >= 1, "GeneralizedStar needs k >= 1 branches")
        _require(all(b >= 1 for b in spec.branches),
                 f"GeneralizedStar needs every n_i >= 1, got {list(spec.branches)}")
        edges = []
        nxt = 1
        for length in spec.branches:
            edges.append((0, nxt))
            edges.extend((nxt + j, nxt + j + 1) for j in range(length - 1))
            nxt += length
        return Graph(nxt, tuple(sorted(edges)))
    if isinstance(spec, DoubleBroom):
        _require(spec.n1 >= 2, f"DoubleBroom needs n1 >= 2, got n1={spec.n1}")
        _require(spec.n >= 2, f"DoubleBroom needs n >= 2, got n={spec.n}")
        _require(spec.n2 >= 2, f"DoubleBroom needs n2 >= 2, got n2={spec.n2}")
        return _broom(spec.n1, spec.n, spec.n2)
    if isinstance(spec, DoubleStar):
        _require(spec.n1 >= 1, f"DoubleStar needs n1 >= 1, got n1={spec.n1}")
        _require(spec.n2 >= 1, f"DoubleStar needs n2 >= 1, got n2={spec.n2}")
        return _broom(spec.n1, 2, spec.n2)
    if isinstance(spec, Custom):
        return load_graph(spec.path)
    raise TypeError(f"unknown family spec {spec!r}")


def _broom(n1: int, n: int, n2: int) -> Graph:
    y1, yn = n1, n1 + n - 1
    edges = [(i, y1) for i in range(n1)]
    edges += [(y1 + j, y1 + j + 1) for j in range(n - 1)]
    edges += [(yn, n1 + n + j) for j in range(n2)]
    return Graph(n1 + n + n2, tuple(sorted(edges)))


def load_graph(path: Union[str, _FsPath]) -> Graph:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc
    if not isinstance(data, dict) or "n" not in data or "edges" not in data:
        raise GraphFormatError(f"{path}: expected an object with keys 'n' and 'edges'")
    if not isinstance(data["edges"], list):
        raise GraphFormatError(f"{path}: 'edges' must be a list")
    try:
        return Graph.from_edges(data["n"], data["edges"])
    except GraphFormatError as exc:
        raise GraphFormatError(f"{path}: {exc}") from None


def dump_graph(g: Graph, path: Union[str, _FsPath]) -> None:
    with open(path, "w") as fh:
        json.dump(g.to_json(), fh)
        fh.write("\n")


@dataclass(frozen=True)
class ForestInfo:
    acyclic: bool
    components: tuple[tuple[int, ...], ...]
    roots: tuple[int, ...]

    def __bool__(self) -> bool:
        return self.acyclic


def is_forest(g: Graph) -> ForestInfo:
    """Acyclicity test plus connected components (root = smallest vertex)."""
    adj = g.adjacency()
    seen = [False] * g.n
    comps = []
    edge_count = 0
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        stack, comp = [root], []
        while stack:
            v = stack.pop()
            comp.append(v)
            edge_count += len(adj[v])
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(tuple(sorted(comp)))
    # a graph is a forest iff |E| = |V| - #components
    acyclic = edge_count // 2 == g.n - len(comps)
    return ForestInfo(acyclic, tuple(comps), tuple(c[0] for c in comps))
