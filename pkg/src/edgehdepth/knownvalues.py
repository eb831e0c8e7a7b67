"""Published depth / Stanley depth / Hilbert depth values and bounds.

These are formula encodings only.  Each returns plain integers; the
``*_report`` helpers wrap them in a BoundsReport carrying a statement
string so a violation report explains itself.  Because
depth <= hdepth and sdepth <= hdepth, every lower bound here is also a
lower bound for the computed Hilbert depth; upper bounds on sdepth say
nothing about hdepth and are reported, not checked.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .exactmath import ceil_div
from .graphs import ParameterError


@dataclass(frozen=True)
class BoundsReport:
    module: str
    lower: int
    upper: Optional[int] = None
    exact: Optional[int] = None
    source: str = ""

    def __post_init__(self):
        # a published window may cross (lower > upper); that is reported via
        # ``crossed`` rather than rejected, since it is a property of the formulas
        if self.exact is not None:
            if self.exact < self.lower or (self.upper is not None and self.exact > self.upper):
                raise ValueError(f"{self.module}: exact value {self.exact} outside [{self.lower}, {self.upper}]")

    @property
    def crossed(self) -> bool:
        return self.upper is not None and self.lower > self.upper

    def to_json(self) -> dict:
        return {
            "module": self.module,
            "lower": self.lower,
            "upper": self.upper,
            "exact": self.exact,
            "crossed": self.crossed,
            "source": self.source,
        }


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise ParameterError(msg)


def path_quotient_depth_sdepth(n: int) -> int:
    _need(n >= 2, f"path needs n >= 2, got {n}")
    return ceil_div(n, 3)


def path_ideal_sdepth_bounds(n: int) -> tuple[int, int]:
    _need(n >= 2, f"path needs n >= 2, got {n}")
    return ceil_div(n + 1, 2), ceil_div(2 * n + 2, 3)


def cycle_quotient_depth(n: int) -> int:
    _need(n >= 3, f"cycle needs n >= 3, got {n}")
    return ceil_div(n - 1, 3)


def cycle_quotient_sdepth_bounds(n: int) -> tuple[int, int]:
    _need(n >= 3, f"cycle needs n >= 3, got {n}")
    lo = ceil_div(n - 1, 3)
    if n % 3 == 1:
        return lo, ceil_div(n, 3)
    return lo, lo


def cycle_ideal_sdepth_bounds(n: int) -> tuple[int, int]:
    _need(n >= 3, f"cycle needs n >= 3, got {n}")
    return ceil_div(n, 2), ceil_div(2 * n + 2, 3)


def relative_cycle_exact(n: int) -> int:
    _need(n >= 6, f"relative cycle/path needs n >= 6, got {n}")
    return ceil_div(n + 2, 3)


def _check_branches(branches: Sequence[int]) -> None:
    _need(len(branches) >= 1, "generalized star needs k >= 1")
    _need(all(b >= 1 for b in branches), f"generalized star needs all n_i >= 1, got {list(branches)}")


def gstar_quotient_values(branches: Sequence[int]) -> BoundsReport:
    """depth = sdepth of S/I for a generalized star: exact or a width-one window."""
    _check_branches(branches)
    label = f"S/I(gstar{tuple(branches)})"
    if any(b % 3 == 1 for b in branches):
        v = 1 + sum(ceil_div(b - 1, 3) for b in branches)
        return BoundsReport(label, v, v, v, "known: some n_i = 1 mod 3 => sdepth(S/I) = depth(S/I) = 1 + sum ceil((n_i-1)/3)")
    lo = sum(ceil_div(b, 3) for b in branches)
    return BoundsReport(label, lo, lo + 1, None,
                        "known: all n_i = 0, 2 mod 3 => sum ceil(n_i/3) <= depth(S/I), sdepth(S/I) <= sum ceil(n_i/3) + 1")


def gstar_ideal_bounds(branches: Sequence[int]) -> tuple[int, int]:
    _check_branches(branches)
    k, N = len(branches), sum(branches)
    eps = sum(1 for b in branches if b % 3 in (0, 2))
    upper = 1 + eps // 2 + sum(2 * b // 3 for b in branches)
    return ceil_div(N + k, 2), upper


def _check_broom(n1: int, n: int, n2: int) -> None:
    _need(min(n1, n, n2) >= 2, f"double broom needs n1, n, n2 >= 2, got ({n1}, {n}, {n2})")


def dbroom_quotient_exact(n1: int, n: int, n2: int) -> int:
    _check_broom(n1, n, n2)
    return 2 + ceil_div(n - 2, 3)


def dbroom_ideal_bounds(n1: int, n: int, n2: int) -> tuple[int, int]:
    _check_broom(n1, n, n2)
    upper = ceil_div(n1 + n2, 2) + ceil_div(2 * n + 1, 3)
    if n % 3 in (0, 2):
        upper += 1
    return ceil_div(n1 + n2 + n + 1, 2), upper


def star_ideal_hdepth_exact(n: int) -> int:
    _need(n >= 1, f"star needs n >= 1, got {n}")
    return (n + 3) // 2


def ci_sdepth(nvars: int, m: int) -> int:
    """sdepth of a complete intersection with m generators; a lower bound for any m-generated ideal."""
    _need(1 <= m <= nvars, f"need 1 <= m <= nvars, got m={m}, nvars={nvars}")
    return nvars - m // 2


# -- reports ------------------------------------------------------------------

def path_reports(n: int) -> list[BoundsReport]:
    v = path_quotient_depth_sdepth(n)
    lo, hi = path_ideal_sdepth_bounds(n)
    return [
        BoundsReport(f"S/I_{n}", v, v, v, "known: depth(S/I_n) = sdepth(S/I_n) = ceil(n/3)"),
        BoundsReport(f"I_{n}", lo, hi, None, "known: ceil((n+1)/2) <= sdepth(I_n) <= ceil((2n+2)/3)"),
    ]


def cycle_reports(n: int) -> list[BoundsReport]:
    depth = cycle_quotient_depth(n)
    slo, shi = cycle_quotient_sdepth_bounds(n)
    lo, hi = cycle_ideal_sdepth_bounds(n)
    return [
        BoundsReport(f"S/J_{n}", depth, None, depth, "known: depth(S/J_n) = ceil((n-1)/3)"),
        BoundsReport(f"S/J_{n}", slo, shi, slo if slo == shi else None,
                     "known: sdepth(S/J_n) = ceil((n-1)/3) for n = 0, 2 mod 3, else in [ceil((n-1)/3), ceil(n/3)]"),
        BoundsReport(f"J_{n}", lo, hi, None, "known: ceil(n/2) <= sdepth(J_n) <= ceil((2n+2)/3)"),
    ]


def relative_cycle_report(n: int) -> BoundsReport:
    v = relative_cycle_exact(n)
    return BoundsReport(f"J_{n}/I_{n}", v, v, v,
                        "known: sdepth(J_n/I_n) = depth(J_n/I_n) = ceil((n+2)/3)")


def gstar_reports(branches: Sequence[int]) -> list[BoundsReport]:
    lo, hi = gstar_ideal_bounds(branches)
    return [
        gstar_quotient_values(branches),
        BoundsReport(f"I(gstar{tuple(branches)})", lo, hi, None,
                     "known: ceil((N+k)/2) <= sdepth(I) <= 1 + floor(eps/2) + sum floor(2n_i/3), eps = #{n_i = 0, 2 mod 3}"),
    ]


def dbroom_reports(n1: int, n: int, n2: int) -> list[BoundsReport]:
    v = dbroom_quotient_exact(n1, n, n2)
    lo, hi = dbroom_ideal_bounds(n1, n, n2)
    return [
        BoundsReport(f"S/I(P({n1},{n},{n2}))", v, v, v,
                     "known: sdepth(S/I) = depth(S/I) = 2 + ceil((n-2)/3)"),
        BoundsReport(f"I(P({n1},{n},{n2}))", lo, hi, None,
                     "known: ceil((n1+n2+n+1)/2) <= sdepth(I) <= ceil((n1+n2)/2) + ceil((2n+1)/3) + [n = 0, 2 mod 3]"),
    ]


def star_report(n: int) -> BoundsReport:
    v = star_ideal_hdepth_exact(n)
    return BoundsReport(f"I(St_{n})", v, v, v, "known: hdepth(I(St_n)) = floor((n+3)/2)")
