"""Beta tables and the Hilbert depth scan.

For an alpha vector and 0 <= k <= d,

    beta_k^d = sum_{j<=k} (-1)^(k-j) C(d-j, k-j) alpha_j

and hdepth is the largest d whose whole row is nonnegative.  Rows for
consecutive d are linked by Pascal's rule:

    beta_k^(d-1) = beta_k^d + beta_(k-1)^(d-1)

i.e. the row at d-1 is the running sum of the first d entries of the row
at d.  ``hdepth`` climbs to the top row with the inverse (difference)
step and then walks down with running sums, so a full scan costs O(n^2)
big-integer additions and no multiplications.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import accumulate
from operator import sub
from typing import Sequence, Union

from .alpha import AlphaVector, alpha_path_closed, alpha_cycle_mod_path
from .exactmath import binom, gbinom
from .graphs import ParameterError

AlphaLike = Union[AlphaVector, Sequence[int]]


class DomainError(ValueError):
    """Hilbert depth is undefined for the zero module."""


@dataclass(frozen=True)
class BetaRow:
    d: int
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != self.d + 1:
            raise ValueError(f"beta row at d={self.d} needs {self.d + 1} entries, got {len(self.values)}")

    def __getitem__(self, k: int) -> int:
        return self.values[k]

    def __len__(self) -> int:
        return len(self.values)

    def first_negative(self) -> int | None:
        if min(self.values) >= 0:
            return None
        return next(k for k, b in enumerate(self.values) if b < 0)

    def to_json(self) -> list[str]:
        return [str(b) for b in self.values]


@dataclass(frozen=True)
class Rejection:
    d: int
    k: int
    beta: int

    def to_json(self) -> dict:
        return {"d": self.d, "k": self.k, "beta": str(self.beta)}


@dataclass(frozen=True)
class HdepthResult:
    value: int
    d_start: int
    feasible_row: BetaRow
    rejections: tuple[Rejection, ...] = field(default=())

    def to_json(self) -> dict:
        return {
            "value": self.value,
            "d_start": self.d_start,
            "rejections": [r.to_json() for r in self.rejections],
            "feasible_row": self.feasible_row.to_json(),
        }


def _values(alpha: AlphaLike) -> tuple[int, ...]:
    return alpha.values if isinstance(alpha, AlphaVector) else tuple(alpha)


def beta_row(alpha: AlphaLike, d: int) -> BetaRow:
    """Direct evaluation of the signed binomial transform at one d."""
    a = _values(alpha)
    n = len(a) - 1
    if not 0 <= d <= n:
        raise ValueError(f"d must lie in [0, {n}], got {d}")
    row = []
    for k in range(d + 1):
        s = 0
        for j in range(k + 1):
            term = binom(d - j, k - j) * a[j]
            s += -term if (k - j) & 1 else term
        row.append(s)
    return BetaRow(d, tuple(row))


def beta_row_descend(row: BetaRow) -> BetaRow:
    """Row at d-1 from the row at d."""
    if row.d == 0:
        raise ValueError("cannot descend below d = 0")
    return BetaRow(row.d - 1, tuple(accumulate(row.values[:-1])))


def beta_row_ascend(row: BetaRow, alpha: AlphaLike) -> BetaRow:
    """Row at d+1 from the row at d; needs alpha_(d+1) for the last entry."""
    a = _values(alpha)
    d = row.d + 1
    if d >= len(a):
        raise ValueError(f"cannot ascend past d = {len(a) - 1}")
    prev = row.values
    new = list(map(sub, prev, (0,) + prev[:-1]))
    # alpha_d = sum_j beta_j^d
    new.append(a[d] - sum(new))
    return BetaRow(d, tuple(new))


def beta_table(alpha: AlphaLike) -> list[BetaRow]:
    """All rows d = 0..n, built by ascending."""
    a = _values(alpha)
    rows = [BetaRow(0, (a[0],))]
    for _ in range(len(a) - 1):
        rows.append(beta_row_ascend(rows[-1], a))
    return rows


def alpha_from_beta(row: BetaRow) -> tuple[int, ...]:
    """Inverse transform: alpha_k = sum_j C(d-j, k-j) beta_j^d for k <= d."""
    d = row.d
    return tuple(
        sum(binom(d - j, k - j) * row.values[j] for j in range(k + 1))
        for k in range(d + 1)
    )


def _top_row(a: tuple[int, ...], d_start: int) -> BetaRow:
    row = BetaRow(0, (a[0],))
    while row.d < d_start:
        row = beta_row_ascend(row, a)
    return row


def hdepth(alpha: AlphaLike, method: str = "chain", min_k: int = 0) -> HdepthResult:
    """max{d : beta_k^d >= 0 for all min_k <= k <= d}, scanned downward.

    The scan starts at the top nonzero degree of alpha and records the
    first negative entry of every rejected row.  ``method="direct"``
    recomputes each row from scratch instead of using the recurrence.
    ``min_k`` lets callers drop leading entries known to be nonnegative.
    """
    a = _values(alpha)
    if not any(a):
        raise DomainError("hdepth of the zero module is undefined")
    if method not in ("chain", "direct"):
        raise ValueError(f"unknown method {method!r}")
    d_start = max(j for j, v in enumerate(a) if v)
    row = _top_row(a, d_start) if method == "chain" else beta_row(a, d_start)
    rejections = []
    d = d_start
    while True:
        tail = row.values[min_k:]
        if not tail or min(tail) >= 0:
            return HdepthResult(d, d_start, row, tuple(rejections))
        k = next(i for i, b in enumerate(tail) if b < 0) + min_k
        rejections.append(Rejection(d, k, row.values[k]))
        d -= 1
        row = beta_row_descend(row) if method == "chain" else beta_row(a, d)


def hdepth_relative_cycle_shortcut(n: int) -> int:
    """hdepth(J_n/I_n) as 2 + hdepth of the quotient of a path on n-4 vertices."""
    if n < 6:
        raise ParameterError(f"relative cycle shortcut needs n >= 6, got n={n}")
    return 2 + hdepth(alpha_path_closed(n - 4, "quotient")).value


def hdepth_relative_cycle(n: int) -> int:
    return hdepth(alpha_cycle_mod_path(n)).value


# -- binomial identities ------------------------------------------------------

def minune_sides(n: int, d: int, k: int) -> tuple[int, int]:
    lhs = gbinom(n - d + k - 1, k)
    rhs = 0
    for j in range(k + 1):
        term = binom(d - j, k - j) * binom(n, j)
        rhs += -term if (k - j) & 1 else term
    return lhs, rhs


def check_minune(n: int, d: int, k: int) -> bool:
    """C(n-d+k-1, k) == sum_j (-1)^(k-j) C(d-j, k-j) C(n, j)."""
    if not 0 <= k <= d <= n:
        raise ValueError(f"need 0 <= k <= d <= n, got (n, d, k) = ({n}, {d}, {k})")
    lhs, rhs = minune_sides(n, d, k)
    return lhs == rhs


def path_ideal_beta_lsum(n: int, d: int, k: int) -> int:
    """beta_k^d(I_n) via the double sum over l = 1..floor(k/2)."""
    total = 0
    for ell in range(1, k // 2 + 1):
        inner = 0
        for j in range(k + 1):
            term = binom(d - j, k - j) * gbinom(n - j + 1, ell) * gbinom(n - 2 * ell, j - 2 * ell)
            inner += -term if (k - j) & 1 else term
        total += inner if ell & 1 else -inner
    return total


def check_pp3(n: int, d: int, k: int) -> bool:
    if n < 2 or not 0 <= k <= d <= n:
        raise ValueError(f"need n >= 2 and 0 <= k <= d <= n, got (n, d, k) = ({n}, {d}, {k})")
    direct = beta_row(alpha_path_closed(n, "ideal"), d)[k]
    return path_ideal_beta_lsum(n, d, k) == direct


def double_star_beta_closed(n1: int, n2: int, d: int, k: int, kind: str = "ideal") -> int:
    """Closed beta_k^d for the double-star formulas, generalized binomials throughout.

    These are the transforms of ``alpha_double_star_ideal`` (and of its
    complement for ``kind="quotient"``), not of the true double-star module.
    """
    N = n1 + n2 + 2
    if n1 < 1 or n2 < 1 or not 0 <= k <= d <= N:
        raise ValueError(f"need n1, n2 >= 1 and 0 <= k <= d <= {N}, got (n1, n2, d, k) = ({n1}, {n2}, {d}, {k})")
    sign = -1 if k & 1 else 1
    if kind == "ideal":
        if k <= 1:
            return 0
        return (gbinom(n1 - d + k - 1, k - 1) + gbinom(n2 - d + k - 1, k - 1)
                + gbinom(n1 + n2 - d + k - 1, k - 2) + 2 * sign * gbinom(d - 1, k - 1))
    if kind == "quotient":
        if k == 0:
            return 1
        if k == 1:
            return N - d
        return (gbinom(n1 + n2 - d + k + 1, k) - gbinom(n1 + n2 - d + k - 1, k - 2)
                - gbinom(n1 - d + k - 1, k - 1) - gbinom(n2 - d + k - 1, k - 1)
                - 2 * sign * gbinom(d - 1, k - 1))
    raise ValueError(f"kind must be 'ideal' or 'quotient', got {kind!r}")
