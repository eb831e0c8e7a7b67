"""Batch verification of the path/cycle Hilbert depth conjectures.

Every record is recomputed from closed-form alpha vectors and the
descending-chain solver; nothing is hand-entered.  Scans are
embarrassingly parallel over n and always merged in ascending n, so the
worker count never changes a report.
"""
from __future__ import annotations

import csv
import io
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement
from pathlib import Path
from typing import Callable, Iterable, Optional, Sequence

from . import knownvalues as kv
from .alpha import alpha_cycle_closed, alpha_cycle_mod_path, alpha_path_closed, alpha_star_ideal, alpha_tree_dp
from .exactmath import ceil_div
from .graphs import DoubleBroom, GeneralizedStar, build
from .hilbert import hdepth, hdepth_relative_cycle_shortcut

log = logging.getLogger(__name__)

SCAN_COLUMNS = ("n", "hdepth_I", "hdepth_SI", "hdepth_J", "hdepth_SJ", "delta1", "delta2",
                "conj1_ok", "conj2a_ok", "conj2b_ok", "conj2c_ok")
ALL_FIELDS = frozenset({"I", "SI", "J", "SJ"})


def delta1(n: int, h_si: int) -> int:
    return h_si - ceil_div(n, 3) - (3 * n - 1) // 29 + 1


def delta2(n: int, h_i: int) -> int:
    return h_i - (2 * n + 1) // 3 - (2 * n - 5) // 17 + 1


@dataclass(frozen=True)
class ScanRecord:
    n: int
    hdepth_I: Optional[int] = None
    hdepth_SI: Optional[int] = None
    hdepth_J: Optional[int] = None
    hdepth_SJ: Optional[int] = None

    @property
    def delta1(self) -> Optional[int]:
        return None if self.hdepth_SI is None else delta1(self.n, self.hdepth_SI)

    @property
    def delta2(self) -> Optional[int]:
        return None if self.hdepth_I is None else delta2(self.n, self.hdepth_I)

    @property
    def conj1_ok(self) -> Optional[bool]:
        return None if self.hdepth_I is None else self.hdepth_I >= (2 * self.n + 1) // 3

    @property
    def conj2a_ok(self) -> Optional[bool]:
        if self.hdepth_SI is None or self.hdepth_SJ is None:
            return None
        return self.hdepth_SI - self.hdepth_SJ in (0, 1)

    @property
    def conj2b_ok(self) -> Optional[bool]:
        if self.hdepth_I is None or self.hdepth_J is None:
            return None
        return self.hdepth_I - self.hdepth_J in (0, 1)

    @property
    def conj2c_ok(self) -> Optional[bool]:
        return None if self.hdepth_J is None else self.hdepth_J >= (2 * self.n) // 3

    def csv_row(self) -> list[str]:
        def cell(v):
            if v is None:
                return ""
            if isinstance(v, bool):
                return "1" if v else "0"
            return str(v)
        return [cell(getattr(self, c)) for c in SCAN_COLUMNS]

    @classmethod
    def from_csv_row(cls, row: dict) -> "ScanRecord":
        def opt(key):
            v = row.get(key, "")
            return int(v) if v not in ("", None) else None
        return cls(int(row["n"]), opt("hdepth_I"), opt("hdepth_SI"), opt("hdepth_J"), opt("hdepth_SJ"))


def compute_record(n: int, fields: Iterable[str] = ALL_FIELDS) -> ScanRecord:
    fields = set(fields)
    h = {}
    if "I" in fields:
        h["hdepth_I"] = hdepth(alpha_path_closed(n, "ideal")).value
    if "SI" in fields:
        h["hdepth_SI"] = hdepth(alpha_path_closed(n, "quotient")).value
    if n >= 3:
        if "J" in fields:
            h["hdepth_J"] = hdepth(alpha_cycle_closed(n, "ideal")).value
        if "SJ" in fields:
            h["hdepth_SJ"] = hdepth(alpha_cycle_closed(n, "quotient")).value
    return ScanRecord(n, **h)


def default_workers() -> int:
    return os.cpu_count() or 1


def _pmap(func: Callable, items: Sequence, workers: Optional[int]):
    """Ordered map, in-process when one worker suffices."""
    workers = default_workers() if workers is None else max(1, workers)
    if workers == 1 or len(items) <= 1:
        for item in items:
            yield func(item)
        return
    chunk = max(1, len(items) // (workers * 8))
    with ProcessPoolExecutor(max_workers=workers) as ex:
        yield from ex.map(func, items, chunksize=chunk)


@dataclass(frozen=True)
class _RecordJob:
    fields: frozenset

    def __call__(self, n: int) -> ScanRecord:
        return compute_record(n, self.fields)


def scan(lo: int, hi: int, workers: Optional[int] = None,
         fields: Iterable[str] = ALL_FIELDS) -> list[ScanRecord]:
    lo = max(lo, 2)
    return list(_pmap(_RecordJob(frozenset(fields)), list(range(lo, hi + 1)), workers))


def scan_to_csv(path, lo: int, hi: int, workers: Optional[int] = None) -> list[ScanRecord]:
    """Scan into a CSV file, one flushed line per n; rows already on disk are reused."""
    path = Path(path)
    done: dict[int, ScanRecord] = {}
    if path.exists() and path.stat().st_size:
        with path.open(newline="") as fh:
            for row in csv.DictReader(fh):
                rec = ScanRecord.from_csv_row(row)
                done[rec.n] = rec
        log.info("resuming %s: %d rows present", path, len(done))
    todo = [n for n in range(max(lo, 2), hi + 1) if n not in done]
    fresh = not done
    with path.open("a", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        if fresh:
            writer.writerow(SCAN_COLUMNS)
            fh.flush()
        for rec in _pmap(_RecordJob(ALL_FIELDS), todo, workers):
            writer.writerow(rec.csv_row())
            fh.flush()
            done[rec.n] = rec
    return [done[n] for n in range(max(lo, 2), hi + 1)]


def records_to_csv(records: Iterable[ScanRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(SCAN_COLUMNS)
    for rec in records:
        writer.writerow(rec.csv_row())
    return buf.getvalue()


# -- reports ------------------------------------------------------------------

@dataclass(frozen=True)
class Counterexample:
    n: object
    claim: str
    detail: str

    def to_json(self) -> dict:
        return {"n": self.n, "claim": self.claim, "detail": self.detail}


@dataclass
class VerificationReport:
    name: str
    range: tuple[int, int]
    claims: dict[str, bool] = field(default_factory=dict)
    counterexamples: list[Counterexample] = field(default_factory=list)
    flagged: list[Counterexample] = field(default_factory=list)
    stats: dict = field(default_factory=dict)
    records: list[ScanRecord] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def claim(self, name: str) -> None:
        self.claims.setdefault(name, True)

    def fail(self, n, claim: str, detail: str) -> None:
        self.claims[claim] = False
        self.counterexamples.append(Counterexample(n, claim, detail))

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "range": list(self.range),
            "passed": self.passed,
            "claims": dict(sorted(self.claims.items())),
            "counterexamples": [c.to_json() for c in self.counterexamples],
            "flagged": [c.to_json() for c in self.flagged],
            "stats": self.stats,
        }


def verify_conj1(n_max: int, n_min: int = 2, workers: Optional[int] = None) -> VerificationReport:
    """hdepth(I_n) >= floor((2n+1)/3)."""
    rep = VerificationReport("conj1", (n_min, n_max))
    rep.claim("hdepth_I >= floor((2n+1)/3)")
    rep.records = scan(n_min, n_max, workers, fields={"I"})
    for r in rep.records:
        if not r.conj1_ok:
            rep.fail(r.n, "hdepth_I >= floor((2n+1)/3)", f"hdepth(I_{r.n}) = {r.hdepth_I} < {(2 * r.n + 1) // 3}")
    return rep


def verify_conj2(n_max: int, n_min: int = 3, workers: Optional[int] = None) -> VerificationReport:
    """Path/cycle differences in {0, 1} and hdepth(J_n) >= floor(2n/3)."""
    rep = VerificationReport("conj2", (max(n_min, 3), n_max))
    names = ("hdepth_SI - hdepth_SJ in {0,1}", "hdepth_I - hdepth_J in {0,1}", "hdepth_J >= floor(2n/3)")
    for c in names:
        rep.claim(c)
    rep.records = scan(max(n_min, 3), n_max, workers)
    for r in rep.records:
        if not r.conj2a_ok:
            rep.fail(r.n, names[0], f"hdepth(S/I) - hdepth(S/J) = {r.hdepth_SI - r.hdepth_SJ}")
        if not r.conj2b_ok:
            rep.fail(r.n, names[1], f"hdepth(I) - hdepth(J) = {r.hdepth_I - r.hdepth_J}")
        if not r.conj2c_ok:
            rep.fail(r.n, names[2], f"hdepth(J_{r.n}) = {r.hdepth_J} < {(2 * r.n) // 3}")
    return rep


@dataclass(frozen=True)
class Conj3Frequencies:
    N: int
    same_quotient: int
    same_ideal: int

    @property
    def samples(self) -> int:
        return self.N - 2

    @property
    def f_quotient(self) -> Fraction:
        return Fraction(self.same_quotient, self.samples)

    @property
    def f_ideal(self) -> Fraction:
        return Fraction(self.same_ideal, self.samples)

    def to_json(self) -> dict:
        def entry(count):
            # unreduced on purpose: denominator is the sample count
            return {"fraction": f"{count}/{self.samples}", "decimal": f"{count / self.samples:.6f}"}
        return {"N": self.N, "samples": self.samples,
                "f_quotient": entry(self.same_quotient), "f_ideal": entry(self.same_ideal)}


def conj3_frequencies(N: int, workers: Optional[int] = None,
                      records: Optional[Sequence[ScanRecord]] = None) -> Conj3Frequencies:
    """Share of 3 <= n <= N with equal path/cycle hdepth, quotients and ideals separately."""
    if N < 3:
        raise ValueError(f"N must be >= 3, got {N}")
    recs = [r for r in (records if records is not None else scan(3, N, workers)) if 3 <= r.n <= N]
    q = sum(1 for r in recs if r.hdepth_SI == r.hdepth_SJ)
    i = sum(1 for r in recs if r.hdepth_I == r.hdepth_J)
    return Conj3Frequencies(N, q, i)


def verify_conj3(N: int, tol: Fraction = Fraction(12, 100), workers: Optional[int] = None) -> VerificationReport:
    rep = VerificationReport("conj3", (3, N))
    rep.records = scan(3, N, workers)
    freq = conj3_frequencies(N, records=rep.records)
    rep.stats = freq.to_json()
    for label, value, target in (("f_quotient near 2/3", freq.f_quotient, Fraction(2, 3)),
                                 ("f_ideal near 5/6", freq.f_ideal, Fraction(5, 6))):
        rep.claim(label)
        if abs(value - target) > tol:
            rep.fail(N, label, f"{float(value):.6f} differs from {target} by more than {float(tol)}")
    return rep


def verify_obsy(n_max: int, workers: Optional[int] = None) -> VerificationReport:
    """Small-n values, gap memberships and lower bounds for path quotients and ideals."""
    rep = VerificationReport("obsy", (2, n_max))
    rep.records = scan(2, n_max, workers, fields={"I", "SI"})
    for r in rep.records:
        n, si, i = r.n, r.hdepth_SI, r.hdepth_I
        if n <= 9:
            rep.claim("hdepth_SI = ceil(n/3) for 2<=n<=9")
            if si != ceil_div(n, 3):
                rep.fail(n, "hdepth_SI = ceil(n/3) for 2<=n<=9", f"hdepth(S/I_{n}) = {si} != {ceil_div(n, 3)}")
        if n == 10:
            rep.claim("hdepth_SI(10) = 4")
            if si != 4:
                rep.fail(n, "hdepth_SI(10) = 4", f"hdepth(S/I_10) = {si}")
        if 10 <= n <= 521:
            rep.claim("delta1 in {0,1} for 10<=n<=521")
            if r.delta1 not in (0, 1):
                rep.fail(n, "delta1 in {0,1} for 10<=n<=521", f"delta1 = {r.delta1}")
        if 522 <= n <= 1000:
            rep.claim("delta1 in {0,1,2} for 522<=n<=1000")
            if r.delta1 not in (0, 1, 2):
                rep.fail(n, "delta1 in {0,1,2} for 522<=n<=1000", f"delta1 = {r.delta1}")
        if 11 <= n <= 1000:
            rep.claim("hdepth_SI lower bound for 11<=n<=1000")
            lb = ceil_div(n, 3) + (3 * n - 1) // 29 - 1
            if si < lb:
                rep.fail(n, "hdepth_SI lower bound for 11<=n<=1000", f"hdepth(S/I_{n}) = {si} < {lb}")
            rep.claim("hdepth_I lower bound for 11<=n<=1000")
            lb = (2 * n + 1) // 3 + (2 * n - 5) // 17 - 1
            if i < lb:
                rep.fail(n, "hdepth_I lower bound for 11<=n<=1000", f"hdepth(I_{n}) = {i} < {lb}")
        if n >= 11:
            rep.claim("delta2 in {0,1} for n>=11")
            if r.delta2 == 2:
                rep.flagged.append(Counterexample(n, "delta2 in {0,1} for n>=11", "delta2 = 2 (flagged for review)"))
            elif r.delta2 not in (0, 1):
                rep.fail(n, "delta2 in {0,1} for n>=11", f"delta2 = {r.delta2}")
    return rep


# -- consistency with known values ----------------------------------------------

CONSISTENCY_FAMILIES = ("path", "cycle", "relative", "star", "generalized_star", "double_broom")


@dataclass(frozen=True)
class ConsistencyLimits:
    path_max: int = 300
    relative_max: int = 200
    star_max: int = 100
    gstar_k_max: int = 4
    gstar_branch_max: int = 10
    dbroom_leaf_max: int = 6
    dbroom_spine_max: int = 30


def _consistency_instances(families, limits: ConsistencyLimits, size_cap: Optional[int]):
    def fits(nv):
        return size_cap is None or nv <= size_cap
    items = []
    if "path" in families:
        items += [("path", (n,)) for n in range(2, limits.path_max + 1) if fits(n)]
    if "cycle" in families:
        items += [("cycle", (n,)) for n in range(3, limits.path_max + 1) if fits(n)]
    if "relative" in families:
        items += [("relative", (n,)) for n in range(6, limits.relative_max + 1) if fits(n)]
    if "star" in families:
        items += [("star", (n,)) for n in range(1, limits.star_max + 1) if fits(n + 1)]
    if "generalized_star" in families:
        for k in range(1, limits.gstar_k_max + 1):
            for br in combinations_with_replacement(range(1, limits.gstar_branch_max + 1), k):
                if fits(1 + sum(br)):
                    items.append(("generalized_star", br))
    if "double_broom" in families:
        for n1 in range(2, limits.dbroom_leaf_max + 1):
            for n2 in range(n1, limits.dbroom_leaf_max + 1):
                for n in range(2, limits.dbroom_spine_max + 1):
                    if fits(n1 + n + n2):
                        items.append(("double_broom", (n1, n, n2)))
    return items


def check_instance(item) -> list[Counterexample]:
    """Compare computed hdepth of one family instance with every known lower bound."""
    family, params = item
    label = f"{family}{params}"
    bad = []

    def at_least(what, value, bound, source):
        if value < bound:
            bad.append(Counterexample(label, f"{what} >= known lower bound", f"{value} < {bound} ({source})"))

    def equal(what, value, expected, source):
        if value != expected:
            bad.append(Counterexample(label, f"{what} = known value", f"{value} != {expected} ({source})"))

    def solve(alpha):
        res = hdepth(alpha)
        if res.value > res.d_start:
            bad.append(Counterexample(label, "hdepth <= dim", f"{res.value} > {res.d_start}"))
        return res.value

    if family == "path":
        (n,) = params
        at_least("hdepth(S/I_n)", solve(alpha_path_closed(n, "quotient")), kv.path_quotient_depth_sdepth(n), "depth(S/I_n)")
        at_least("hdepth(I_n)", solve(alpha_path_closed(n, "ideal")), kv.path_ideal_sdepth_bounds(n)[0], "sdepth(I_n)")
    elif family == "cycle":
        (n,) = params
        at_least("hdepth(S/J_n)", solve(alpha_cycle_closed(n, "quotient")), kv.cycle_quotient_depth(n), "depth(S/J_n)")
        at_least("hdepth(S/J_n)", solve(alpha_cycle_closed(n, "quotient")), kv.cycle_quotient_sdepth_bounds(n)[0], "sdepth(S/J_n)")
        at_least("hdepth(J_n)", solve(alpha_cycle_closed(n, "ideal")), kv.cycle_ideal_sdepth_bounds(n)[0], "sdepth(J_n)")
    elif family == "relative":
        (n,) = params
        full = solve(alpha_cycle_mod_path(n))
        equal("hdepth(J_n/I_n)", full, hdepth_relative_cycle_shortcut(n), "2 + hdepth(S/I_{n-4})")
        at_least("hdepth(J_n/I_n)", full, kv.relative_cycle_exact(n), "depth(J_n/I_n)")
    elif family == "star":
        (n,) = params
        equal("hdepth(I(St_n))", solve(alpha_star_ideal(n)), kv.star_ideal_hdepth_exact(n), "floor((n+3)/2)")
    elif family == "generalized_star":
        g = build(GeneralizedStar(tuple(params)))
        at_least("hdepth(S/I)", solve(alpha_tree_dp(g, "quotient")), kv.gstar_quotient_values(params).lower, "depth(S/I)")
        at_least("hdepth(I)", solve(alpha_tree_dp(g, "ideal")), kv.gstar_ideal_bounds(params)[0], "sdepth(I)")
    elif family == "double_broom":
        g = build(DoubleBroom(*params))
        at_least("hdepth(S/I)", solve(alpha_tree_dp(g, "quotient")), kv.dbroom_quotient_exact(*params), "depth(S/I)")
        at_least("hdepth(I)", solve(alpha_tree_dp(g, "ideal")), kv.dbroom_ideal_bounds(*params)[0], "sdepth(I)")
    else:
        raise ValueError(f"unknown family {family!r}")
    return bad


def verify_theorem_consistency(families: Sequence[str] = CONSISTENCY_FAMILIES, size_cap: Optional[int] = None,
                               limits: ConsistencyLimits = ConsistencyLimits(),
                               workers: Optional[int] = None) -> VerificationReport:
    unknown = set(families) - set(CONSISTENCY_FAMILIES)
    if unknown:
        raise ValueError(f"unknown families: {sorted(unknown)}")
    items = _consistency_instances(set(families), limits, size_cap)
    rep = VerificationReport("consistency", (0, size_cap if size_cap is not None else -1))
    per_family: dict[str, int] = {}
    for fam, _ in items:
        per_family[fam] = per_family.get(fam, 0) + 1
        rep.claim(f"{fam}: hdepth consistent with known values")
    for (fam, _), bad in zip(items, _pmap(check_instance, items, workers)):
        for c in bad:
            rep.fail(c.n, f"{fam}: hdepth consistent with known values", f"{c.claim}: {c.detail}")
    rep.stats = {"instances": per_family}
    return rep
