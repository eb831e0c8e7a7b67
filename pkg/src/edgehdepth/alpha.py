"""Alpha vectors: squarefree monomial counts by degree.

For an edge ideal I(G), a squarefree monomial x_W lies in I(G) iff W
contains an edge, so alpha_j(S/I) counts independent sets of size j.
Three engines compute the same vectors and are meant to check each other:

* ``alpha_bruteforce`` scans all 2^n supports (numpy, n <= 26);
* ``alpha_tree_dp`` runs the independence-polynomial DP on forests;
* ``alpha_*_closed`` evaluate the known binomial closed forms.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np

from .exactmath import binom
from .graphs import Graph, ParameterError, is_forest

BRUTE_FORCE_MAX_N = 26
_CHUNK_BITS = 20


class CapacityError(ValueError):
    """The requested computation exceeds an engine's size limit."""


class EngineMismatchError(ValueError):
    """The chosen engine cannot handle this input."""


@dataclass(frozen=True)
class Ideal:
    graph: Graph

    @property
    def n(self) -> int:
        return self.graph.n


@dataclass(frozen=True)
class Quotient:
    graph: Graph

    @property
    def n(self) -> int:
        return self.graph.n


@dataclass(frozen=True)
class Relative:
    """J/I for edge ideals with edges(I) a proper subset of edges(J)."""

    J: Graph
    I: Graph

    def __post_init__(self):
        if self.J.n != self.I.n:
            raise ParameterError(f"relative module needs equal vertex counts, got {self.J.n} and {self.I.n}")
        if not set(self.I.edges) < set(self.J.edges):
            raise ParameterError("relative module needs edges(I) to be a proper subset of edges(J)")

    @property
    def n(self) -> int:
        return self.J.n


ModuleSpec = Union[Ideal, Quotient, Relative]


@dataclass(frozen=True)
class AlphaVector:
    n: int
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != self.n + 1:
            raise ValueError(f"alpha vector for n={self.n} needs {self.n + 1} entries, got {len(self.values)}")
        if any(v < 0 for v in self.values):
            raise ValueError("alpha entries must be nonnegative")

    def __getitem__(self, j: int) -> int:
        return self.values[j]

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def is_zero(self) -> bool:
        return not any(self.values)

    def top_degree(self) -> int:
        """max{j : alpha_j != 0}; -1 for the zero vector."""
        for j in range(self.n, -1, -1):
            if self.values[j]:
                return j
        return -1

    def complement(self) -> "AlphaVector":
        """Ideal <-> quotient: alpha_j(I) + alpha_j(S/I) = C(n, j)."""
        return AlphaVector(self.n, tuple(binom(self.n, j) - a for j, a in enumerate(self.values)))

    def to_json(self) -> list[str]:
        return [str(v) for v in self.values]


def module_kind(m: ModuleSpec) -> str:
    return {Ideal: "ideal", Quotient: "quotient", Relative: "relative"}[type(m)]


# -- brute force ----------------------------------------------------------

def _popcount(x: np.ndarray) -> np.ndarray:
    return np.bitwise_count(x)


def _contains_edge(subsets: np.ndarray, masks: list[int]) -> np.ndarray:
    hit = np.zeros(subsets.shape, dtype=bool)
    for m in masks:
        m = np.uint32(m)
        hit |= (subsets & m) == m
    return hit


def alpha_bruteforce(m: ModuleSpec) -> AlphaVector:
    """Enumerate every vertex subset and bucket module members by size."""
    n = m.n
    if n > BRUTE_FORCE_MAX_N:
        raise CapacityError(f"brute force is limited to n <= {BRUTE_FORCE_MAX_N} vertices, got n={n}")
    counts = np.zeros(n + 1, dtype=np.int64)
    total = 1 << n
    step = 1 << _CHUNK_BITS
    for start in range(0, total, step):
        subsets = np.arange(start, min(start + step, total), dtype=np.uint32)
        if isinstance(m, Relative):
            keep = _contains_edge(subsets, m.J.edge_masks()) & ~_contains_edge(subsets, m.I.edge_masks())
        else:
            in_ideal = _contains_edge(subsets, m.graph.edge_masks())
            keep = in_ideal if isinstance(m, Ideal) else ~in_ideal
        counts += np.bincount(_popcount(subsets[keep]), minlength=n + 1)[: n + 1]
    return AlphaVector(n, tuple(int(c) for c in counts))


# -- tree DP --------------------------------------------------------------

def _poly_mul(p: list[int], q: list[int]) -> list[int]:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def _poly_add(p: list[int], q: list[int]) -> list[int]:
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, b in enumerate(q):
        out[i] += b
    return out


def independence_polynomial(g: Graph) -> list[int]:
    """Coefficients (by size) of independent-set counts of a forest."""
    info = is_forest(g)
    if not info.acyclic:
        raise EngineMismatchError("tree DP needs an acyclic graph; use the closed-form or brute-force engine")
    adj = g.adjacency()
    total = [1]
    for root in info.roots:
        parent = {root: -1}
        order = [root]
        for v in order:
            for w in adj[v]:
                if w != parent[v]:
                    parent[w] = v
                    order.append(w)
        # out_[v]: v not in the set; in_[v]: v in the set
        out_: dict[int, list[int]] = {}
        in_: dict[int, list[int]] = {}
        for v in reversed(order):
            excl, incl = [1], [0, 1]
            for w in adj[v]:
                if w == parent[v]:
                    continue
                ow, iw = out_.pop(w), in_.pop(w)
                excl = _poly_mul(excl, _poly_add(ow, iw))
                incl = _poly_mul(incl, ow)
            out_[v], in_[v] = excl, incl
        total = _poly_mul(total, _poly_add(out_[root], in_[root]))
    return total


def alpha_tree_dp(g: Graph, kind: str = "quotient") -> AlphaVector:
    poly = independence_polynomial(g)
    values = tuple(poly[j] if j < len(poly) else 0 for j in range(g.n + 1))
    quotient = AlphaVector(g.n, values)
    if kind == "quotient":
        return quotient
    if kind == "ideal":
        return quotient.complement()
    raise ValueError(f"tree DP handles 'ideal' or 'quotient', got {kind!r}")


# -- closed forms -----------------------------------------------------------

def _cnt(a: int, b: int) -> int:
    # counting binomial extended by zero to negative tops
    return binom(a, b) if a >= 0 else 0


def alpha_path_closed(n: int, kind: str = "quotient") -> AlphaVector:
    """alpha_k(S/I_n) = C(n-k+1, k)."""
    if n < 2:
        raise ParameterError(f"path closed form needs n >= 2, got n={n}")
    q = AlphaVector(n, tuple(_cnt(n - k + 1, k) for k in range(n + 1)))
    return q if kind == "quotient" else q.complement()


def alpha_cycle_closed(n: int, kind: str = "quotient") -> AlphaVector:
    """alpha_j(S/J_n) = C(n-j, j) + C(n-j-1, j-1)."""
    if n < 3:
        raise ParameterError(f"cycle closed form needs n >= 3, got n={n}")
    q = AlphaVector(n, tuple(_cnt(n - j, j) + _cnt(n - j - 1, j - 1) for j in range(n + 1)))
    return q if kind == "quotient" else q.complement()


def alpha_cycle_mod_path(n: int) -> AlphaVector:
    """alpha_j(J_n / I_n) = C(n-j-1, j-2): supports containing x_1 x_n only."""
    if n < 6:
        raise ParameterError(f"cycle-mod-path closed form needs n >= 6, got n={n}")
    return AlphaVector(n, tuple(_cnt(n - j - 1, j - 2) for j in range(n + 1)))


def alpha_double_star_ideal(n1: int, n2: int) -> AlphaVector:
    """Published three-case count C(n1, j-1) + C(n2, j-1) + C(n1+n2, j-2).

    The middle cases restrict the cofactor of a single spine vertex to its
    own leaves, so supports such as {y1, x1, z1} are missed and the count
    is too small for 3 <= j < N.  Kept because the closed double-star beta
    formulas are its transform; see ``alpha_double_star_ideal_exact``.
    """
    if n1 < 1 or n2 < 1:
        raise ParameterError(f"double star needs n1, n2 >= 1, got ({n1}, {n2})")
    N = n1 + n2 + 2
    vals = [0, 0] + [binom(n1, j - 1) + binom(n2, j - 1) + binom(n1 + n2, j - 2) for j in range(2, N + 1)]
    return AlphaVector(N, tuple(vals))


def alpha_double_star_ideal_exact(n1: int, n2: int) -> AlphaVector:
    """True count: C(N, j) minus independent sets C(s, j) + C(n1, j-1) + C(n2, j-1), s = n1+n2."""
    if n1 < 1 or n2 < 1:
        raise ParameterError(f"double star needs n1, n2 >= 1, got ({n1}, {n2})")
    s = n1 + n2
    vals = [0, 0] + [2 * binom(s, j - 1) + binom(s, j - 2) - binom(n1, j - 1) - binom(n2, j - 1)
                     for j in range(2, s + 3)]
    return AlphaVector(s + 2, tuple(vals))


def alpha_star_ideal(n: int) -> AlphaVector:
    """Members of (x_1 y, ..., x_n y): divisible by y and at least one x_i."""
    if n < 1:
        raise ParameterError(f"star needs n >= 1, got n={n}")
    return AlphaVector(n + 1, tuple(binom(n, j - 1) if j >= 2 else 0 for j in range(n + 2)))
