"""Engine dispatch: which alpha engines apply to a family/module pair."""
from __future__ import annotations

from typing import Callable

from . import alpha as A
from .graphs import Cycle, DoubleStar, FamilySpec, ParameterError, Path, Star, build, is_forest

ENGINES = ("closed", "published", "dp", "brute")


def module_spec(spec: FamilySpec, kind: str) -> A.ModuleSpec:
    g = build(spec)
    if kind == "ideal":
        return A.Ideal(g)
    if kind == "quotient":
        return A.Quotient(g)
    if kind == "relative":
        if not isinstance(spec, Cycle):
            raise ParameterError("the relative module is only defined for the cycle family (J = cycle, I = path)")
        return A.Relative(g, build(Path(spec.n)))
    raise ValueError(f"unknown module kind {kind!r}")


def _closed(spec: FamilySpec, kind: str) -> Callable[[], A.AlphaVector] | None:
    if isinstance(spec, Path) and kind in ("ideal", "quotient"):
        return lambda: A.alpha_path_closed(spec.n, kind)
    if isinstance(spec, Cycle):
        if kind in ("ideal", "quotient"):
            return lambda: A.alpha_cycle_closed(spec.n, kind)
        if kind == "relative" and spec.n >= 6:
            return lambda: A.alpha_cycle_mod_path(spec.n)
    if isinstance(spec, Star) and kind in ("ideal", "quotient"):
        if kind == "ideal":
            return lambda: A.alpha_star_ideal(spec.n)
        return lambda: A.alpha_star_ideal(spec.n).complement()
    if isinstance(spec, DoubleStar) and kind in ("ideal", "quotient"):
        if kind == "ideal":
            return lambda: A.alpha_double_star_ideal_exact(spec.n1, spec.n2)
        return lambda: A.alpha_double_star_ideal_exact(spec.n1, spec.n2).complement()
    return None


def _published(spec: FamilySpec, kind: str) -> Callable[[], A.AlphaVector] | None:
    if isinstance(spec, DoubleStar) and kind in ("ideal", "quotient"):
        if kind == "ideal":
            return lambda: A.alpha_double_star_ideal(spec.n1, spec.n2)
        return lambda: A.alpha_double_star_ideal(spec.n1, spec.n2).complement()
    return None


def available_engines(spec: FamilySpec, kind: str) -> list[str]:
    out = []
    if _closed(spec, kind):
        out.append("closed")
    if _published(spec, kind):
        out.append("published")
    if kind != "relative" and is_forest(build(spec)).acyclic:
        out.append("dp")
    out.append("brute")
    return out


def compute_alpha(spec: FamilySpec, kind: str, engine: str = "auto") -> tuple[A.AlphaVector, str]:
    """Alpha vector plus the engine that produced it.

    ``auto`` prefers closed form, then tree DP, then brute force.  The
    ``published`` engine is never picked automatically.
    """
    if engine == "auto":
        closed = _closed(spec, kind)
        if closed:
            return closed(), "closed"
        m = module_spec(spec, kind)
        if kind != "relative" and is_forest(m.graph).acyclic:
            return A.alpha_tree_dp(m.graph, kind), "dp"
        return A.alpha_bruteforce(m), "brute"
    if engine == "closed":
        fn = _closed(spec, kind)
        if fn is None:
            raise A.EngineMismatchError(f"no closed form for {kind} of {spec}")
        return fn(), engine
    if engine == "published":
        fn = _published(spec, kind)
        if fn is None:
            raise A.EngineMismatchError(f"no published formula for {kind} of {spec}")
        return fn(), engine
    if engine == "dp":
        if kind == "relative":
            raise A.EngineMismatchError("tree DP does not handle relative modules")
        return A.alpha_tree_dp(build(spec), kind), engine
    if engine == "brute":
        return A.alpha_bruteforce(module_spec(spec, kind)), engine
    raise ValueError(f"unknown engine {engine!r}")
