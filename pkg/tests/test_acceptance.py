"""Acceptance criteria 1-11; each records one PASS/FAIL line (printed in the terminal summary)."""
import random
import time
from fractions import Fraction

from conftest import ACCEPTANCE_LINES

from edgehdepth import conjectures as C
from edgehdepth.alpha import (Ideal, Quotient, Relative, alpha_bruteforce, alpha_cycle_closed, alpha_cycle_mod_path,
                              alpha_double_star_ideal, alpha_path_closed, alpha_star_ideal, alpha_tree_dp)
from edgehdepth.exactmath import ceil_div, gbinom
from edgehdepth.graphs import Cycle, DoubleBroom, GeneralizedStar, Path, Star, build
from edgehdepth.hilbert import (alpha_from_beta, beta_row, beta_row_descend, beta_table, check_minune, check_pp3,
                                double_star_beta_closed, hdepth)


def record(num, title, tolerance, failures, extra=""):
    ok = not failures
    detail = extra if ok else f"{len(failures)} failure(s), first: {failures[:3]}"
    ACCEPTANCE_LINES.append(f"criterion {num}: {'PASS' if ok else 'FAIL'} [{tolerance}] {title}"
                            + (f" -- {detail}" if detail else ""))
    print(ACCEPTANCE_LINES[-1])
    assert ok, detail


def test_criterion_01_small_path_quotients():
    t0 = time.perf_counter()
    bad = []
    for n in range(2, 10):
        h = hdepth(alpha_path_closed(n)).value
        if h != ceil_div(n, 3):
            bad.append(f"n={n}: hdepth(S/I_n)={h}, expected {ceil_div(n, 3)}")
    h10 = hdepth(alpha_path_closed(10)).value
    if h10 != 4:
        bad.append(f"n=10: hdepth(S/I_10)={h10}, expected 4")
    elapsed = time.perf_counter() - t0
    if elapsed >= 1.0:
        bad.append(f"took {elapsed:.2f} s >= 1 s")
    record(1, "hdepth(S/I_n) = ceil(n/3) for 2<=n<=9 and hdepth(S/I_10) = 4", "exact, < 1 s", bad,
           f"{elapsed * 1000:.1f} ms")


def test_criterion_02_conj1_to_500():
    t0 = time.perf_counter()
    rep = C.verify_conj1(500, workers=1)
    elapsed = time.perf_counter() - t0
    bad = [f"{c.n}: {c.detail}" for c in rep.counterexamples]
    if elapsed >= 60:
        bad.append(f"took {elapsed:.1f} s >= 60 s")
    record(2, "hdepth(I_n) >= floor((2n+1)/3) for 2<=n<=500", "exact, < 60 s", bad, f"{elapsed:.2f} s")


def test_criterion_03_conj2_to_300():
    t0 = time.perf_counter()
    rep = C.verify_conj2(300, workers=1)
    elapsed = time.perf_counter() - t0
    bad = [f"{c.n} {c.claim}: {c.detail}" for c in rep.counterexamples]
    if len(rep.claims) != 3:
        bad.append(f"expected 3 claims, got {sorted(rep.claims)}")
    if elapsed >= 120:
        bad.append(f"took {elapsed:.1f} s >= 120 s")
    record(3, "hdepth(J_n) >= floor(2n/3) and both path/cycle gaps in {0,1}, 3<=n<=300", "exact, < 120 s", bad,
           f"{elapsed:.2f} s")


def test_criterion_04_gaps_and_lower_bounds():
    bad = []
    for r in C.scan(11, 300, workers=1, fields={"I", "SI"}):
        n = r.n
        if r.delta1 not in (0, 1):
            bad.append(f"n={n}: delta1={r.delta1}")
        if r.delta2 not in (0, 1):
            bad.append(f"n={n}: delta2={r.delta2}")
        if r.hdepth_SI < ceil_div(n, 3) + (3 * n - 1) // 29 - 1:
            bad.append(f"n={n}: quotient lower bound")
        if r.hdepth_I < (2 * n + 1) // 3 + (2 * n - 5) // 17 - 1:
            bad.append(f"n={n}: ideal lower bound")
    record(4, "delta1, delta2 in {0,1} and both lower bounds, 11<=n<=300", "exact membership", bad)


def test_criterion_05_relative_cycle():
    bad = []
    for n in range(6, 201):
        # J/I counts: survivors of the path quotient that the cycle edge kills
        diff = [p - c for p, c in zip(alpha_path_closed(n), alpha_cycle_closed(n))]
        if tuple(diff) != alpha_cycle_mod_path(n).values:
            bad.append(f"n={n}: relative alpha mismatch")
        full = hdepth(diff).value
        short = 2 + hdepth(alpha_path_closed(n - 4)).value
        if full != short:
            bad.append(f"n={n}: {full} != {short}")
        if full < ceil_div(n + 2, 3):
            bad.append(f"n={n}: {full} < ceil((n+2)/3)")
    record(5, "hdepth(J_n/I_n) = 2 + hdepth(S/I_{n-4}) and >= ceil((n+2)/3), 6<=n<=200", "exact", bad)


def _partitions(total, largest=None):
    """Nondecreasing tuples of positive ints summing to total."""
    largest = total if largest is None else largest
    if total == 0:
        yield ()
        return
    for first in range(min(total, largest), 0, -1):
        for rest in _partitions(total - first, first):
            yield rest + (first,)


def _oracle_instances(cap=18):
    for n in range(2, cap + 1):
        yield Path(n)
    for n in range(3, cap + 1):
        yield Cycle(n)
    for n in range(1, cap):
        yield Star(n)
    for total in range(1, cap):
        for br in _partitions(total):
            yield GeneralizedStar(br)
    for n1 in range(2, cap):
        for n2 in range(n1, cap):
            for n in range(2, cap - n1 - n2 + 1):
                yield DoubleBroom(n1, n, n2)


def _closed_forms(spec):
    if isinstance(spec, Path):
        return alpha_path_closed(spec.n), alpha_path_closed(spec.n, "ideal")
    if isinstance(spec, Cycle):
        return alpha_cycle_closed(spec.n), alpha_cycle_closed(spec.n, "ideal")
    if isinstance(spec, Star):
        i = alpha_star_ideal(spec.n)
        return i.complement(), i
    if isinstance(spec, DoubleBroom) and spec.n == 2:
        i = alpha_double_star_ideal(spec.n1, spec.n2)
        return i.complement(), i
    return None


def test_criterion_06_oracle_equivalence():
    bad = []
    count = 0
    for spec in _oracle_instances():
        count += 1
        g = build(spec)
        q = alpha_bruteforce(Quotient(g))
        i = alpha_bruteforce(Ideal(g))
        if not isinstance(spec, Cycle):
            if alpha_tree_dp(g) != q or alpha_tree_dp(g, "ideal") != i:
                bad.append(f"{spec}: tree DP")
        closed = _closed_forms(spec)
        if closed is not None and (closed[0] != q or closed[1] != i):
            bad.append(f"{spec}: closed form")
        if isinstance(spec, Cycle) and spec.n >= 6:
            if alpha_bruteforce(Relative(g, build(Path(spec.n)))) != alpha_cycle_mod_path(spec.n):
                bad.append(f"{spec}: relative closed form")
    record(6, f"brute force = tree DP = closed form over {count} instances with <= 18 vertices", "exact", bad)


def test_criterion_07_beta_machinery():
    rng = random.Random(20240607)
    bad = []
    for trial in range(50):
        n = rng.randint(1, 100)
        a = [rng.randrange(0, 10**rng.randint(1, 30)) for _ in range(n + 1)]
        row = beta_row(a, n)
        for d in range(n, -1, -1):
            if row != beta_row(a, d):
                bad.append(f"trial {trial}: descend row d={d}")
                break
            if alpha_from_beta(row) != tuple(a[: d + 1]):
                bad.append(f"trial {trial}: inverse at d={d}")
                break
            if d:
                row = beta_row_descend(row)
    for n in range(0, 61):
        for d in range(n + 1):
            for k in range(d + 1):
                if n and not check_minune(n, d, k):
                    bad.append(f"minune {(n, d, k)}")
    for n in range(2, 31):
        for d in range(n + 1):
            for k in range(d + 1):
                if not check_pp3(n, d, k):
                    bad.append(f"l-sum {(n, d, k)}")
    record(7, "descend = direct rows (50 random alpha, n<=100), inverse transform, binomial identities", "exact",
           bad)


def test_criterion_08_double_star_closed_beta():
    bad = []
    discriminating = 0
    for n1 in range(1, 16):
        for n2 in range(1, 16):
            ideal = alpha_double_star_ideal(n1, n2)
            quot = ideal.complement()
            N = n1 + n2 + 2
            ti, tq = beta_table(ideal), beta_table(quot)
            for d in range(N + 1):
                for k in range(d + 1):
                    if double_star_beta_closed(n1, n2, d, k) != ti[d][k]:
                        bad.append(f"ideal {(n1, n2, d, k)}")
                    if double_star_beta_closed(n1, n2, d, k, "quotient") != tq[d][k]:
                        bad.append(f"quotient {(n1, n2, d, k)}")
                    if k >= 1 and (n1 - d + k - 1 < 0 or n2 - d + k - 1 < 0):
                        discriminating += 1
    if gbinom(-1, 1) != -1:
        bad.append("gbinom(-1, 1) != -1")
    if double_star_beta_closed(2, 2, 4, 2) != 5:
        bad.append("(2,2,4,2) != 5")
    record(8, "closed double-star beta = pipeline beta, n1,n2<=15, all 0<=k<=d<=N", "exact", bad,
           f"{discriminating} negative-top cases")


def test_criterion_09_star_ideals():
    bad = []
    for n in range(1, 101):
        h = hdepth(alpha_tree_dp(build(Star(n)), "ideal")).value
        if h != (n + 3) // 2:
            bad.append(f"n={n}: {h}")
    record(9, "hdepth(I(St_n)) = floor((n+3)/2) for 1<=n<=100", "exact", bad)


def test_criterion_10_bound_consistency():
    rep = C.verify_theorem_consistency(workers=1)
    bad = [f"{c.n}: {c.detail}" for c in rep.counterexamples]
    stats = ", ".join(f"{k} {v}" for k, v in rep.stats["instances"].items())
    record(10, "computed hdepth >= every known lower bound (paths/cycles<=300, gstars k<=4 n_i<=10, "
               "double brooms n1,n2<=6 n<=30)", "exact inequalities", bad, stats)


def test_criterion_11_conj3_frequencies():
    f = C.conj3_frequencies(300, workers=1)
    tol = Fraction(12, 100)
    bad = []
    if abs(f.f_quotient - Fraction(2, 3)) > tol:
        bad.append(f"f_quotient = {float(f.f_quotient):.4f}")
    if abs(f.f_ideal - Fraction(5, 6)) > tol:
        bad.append(f"f_ideal = {float(f.f_ideal):.4f}")
    js = f.to_json()
    record(11, "N=300 equality frequencies near 2/3 (quotients) and 5/6 (ideals)", "+/- 0.12", bad,
           f"f_quotient = {js['f_quotient']['fraction']} = {js['f_quotient']['decimal']}, "
           f"f_ideal = {js['f_ideal']['fraction']} = {js['f_ideal']['decimal']}")
