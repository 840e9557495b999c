"""Self-verification checks: algebra laws, identities, and reference tables.

Each check returns a :class:`CheckResult`; the CLI prints one line per
check and exits nonzero if any fails.  The checks are deterministic
(seeded where randomness is involved).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import infotheory, xreal
from .infotheory import JointTable
from .oracle import (
    FEATURES,
    FeatureId,
    Scenario,
    ScenarioSpec,
    SkewNormalParams,
    mi_y2_xy_gaussian,
    oracle_provider,
    skewnormal_pdf,
    skewnormal_sample,
    mi_class_squared_feature,
)
from .reference import (
    CLASS_MI_TABLE,
    ENTROPY_TABLE,
    ORDERING_TABLE,
    expected_positions,
)
from .selection import select_all
from .xreal import NEG_INF, POS_INF, IndetKind, finite, indeterminate


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str


def _sample_values() -> list[xreal.XReal]:
    finites = [finite(v) for v in (-2.5, -1.0, 0.0, 0.5, 3.0)]
    indets = [indeterminate(k) for k in IndetKind]
    return finites + [POS_INF, NEG_INF] + indets


def check_xreal_algebra() -> CheckResult:
    values = _sample_values()
    ops: list[Callable] = [xreal.xadd, xreal.xmul, xreal.xdiv]
    cases = 0
    for op, a, b in itertools.product(ops, values, values):
        cases += 1
        r1 = op(a, b)
        # absorption
        if (a.is_indet or b.is_indet) and not r1.is_indet:
            return CheckResult("xreal-algebra", False, f"{op.__name__}({a},{b}) = {r1}")
        # commutativity of add/mul up to indeterminate-ness
        if op is not xreal.xdiv:
            r2 = op(b, a)
            if r1.is_indet != r2.is_indet:
                return CheckResult(
                    "xreal-algebra", False, f"{op.__name__} not commutative on {a},{b}"
                )
            if not r1.is_indet and xreal.compare(r1, r2) != 0:
                return CheckResult(
                    "xreal-algebra", False, f"{op.__name__} not commutative on {a},{b}"
                )
    for v in values:
        if not v.is_indet and xreal.compare(xreal.xneg(xreal.xneg(v)), v) != 0:
            return CheckResult("xreal-algebra", False, f"negation not involutive on {v}")
    return CheckResult("xreal-algebra", True, f"{cases} operator cases")


def _random_table(rng: np.random.Generator, max_arity: int = 4) -> JointTable:
    arities = rng.integers(2, max_arity + 1, size=3)
    probs = rng.random(arities.prod()).reshape(arities)
    probs[rng.random(probs.shape) < 0.2] = 0.0  # exercise the 0*ln0 branch
    if probs.sum() == 0.0:
        probs.flat[0] = 1.0
    return JointTable(probs / probs.sum())


def _mi_direct(t: JointTable, x: int, y: int) -> float:
    """MI from its defining double sum, independent of the entropy route."""
    pxy = t.marginal((x, y))
    px = pxy.sum(axis=1, keepdims=True)
    py = pxy.sum(axis=0, keepdims=True)
    mask = pxy > 0.0
    return float(np.sum(pxy[mask] * np.log(pxy[mask] / (px * py)[mask])))


def check_discrete_identities(tables: int = 1000, tol: float = 1e-10) -> CheckResult:
    rng = np.random.default_rng(1847)
    worst = 0.0
    for _ in range(tables):
        t = _random_table(rng)
        dev = abs(_mi_direct(t, 0, 1) - infotheory.mi(t, (0,), (1,)))
        forms = (
            infotheory.tmi(t, (0,), (1,), (2,)),
            infotheory.mi(t, (0,), (2,)) - infotheory.cond_mi(t, (0,), (2,), (1,)),
            infotheory.mi(t, (1,), (2,)) - infotheory.cond_mi(t, (1,), (2,), (0,)),
        )
        dev = max(dev, max(forms) - min(forms))
        worst = max(worst, dev)
        if dev > tol:
            return CheckResult(
                "discrete-identities", False, f"deviation {dev:.2e} exceeds {tol:.0e}"
            )
    return CheckResult(
        "discrete-identities", True, f"{tables} tables, max deviation {worst:.1e}"
    )


def check_oracle_tables(tol: float = 1e-3) -> CheckResult:
    worst = 0.0
    for scenario, entries in ENTROPY_TABLE.items():
        provider = oracle_provider(ScenarioSpec(scenario, 0.2))
        for f, want in entries.items():
            got = provider.entropy(f).value
            worst = max(worst, abs(got - want))
    for (scenario, k), entries in CLASS_MI_TABLE.items():
        provider = oracle_provider(ScenarioSpec(scenario, k))
        for f, want in entries.items():
            got = provider.class_mi(f).value
            if want == 0.0 and got != 0.0:
                return CheckResult(
                    "oracle-tables", False, f"{scenario.value} k={k} {f.name}: expected exact 0"
                )
            worst = max(worst, abs(got - want))
    ok = worst <= tol
    return CheckResult("oracle-tables", ok, f"60 values, max deviation {worst:.1e}")


def check_pairwise_tables(tol: float = 2e-3) -> CheckResult:
    expected_finite = {
        Scenario.UNIFORM: (0.5, (1.0 - math.log(2.0)) / 2.0),
        Scenario.GAUSSIAN: (math.log(2.0) / 2.0, 0.1078),
    }
    for scenario in Scenario:
        provider = oracle_provider(ScenarioSpec(scenario, 0.2))
        allowed = {0.0} | set(expected_finite[scenario])
        for i in FEATURES:
            for j in FEATURES:
                v = provider.pairwise_mi(i, j)
                w = provider.pairwise_mi(j, i)
                if v is not w and xreal.compare(v, w) != 0:
                    return CheckResult("pairwise-tables", False, f"asymmetric {i},{j}")
                if i == j and not v.is_pos_inf:
                    return CheckResult("pairwise-tables", False, f"MI({i},{i}) not +inf")
                if v.is_finite and min(abs(v.value - a) for a in allowed) > tol:
                    return CheckResult(
                        "pairwise-tables", False, f"{scenario.value} {i},{j} = {v}"
                    )
    dual = mi_y2_xy_gaussian()
    if abs(dual - 0.1078) > tol:
        return CheckResult(
            "pairwise-tables", False, f"independent evaluation {dual:.4f} vs 0.1078"
        )
    return CheckResult(
        "pairwise-tables", True, f"both scenarios; independent route {dual:.4f}"
    )


def check_zero_mi_of_square(tol: float = 1e-3) -> CheckResult:
    worst = 0.0
    for k in (0.2, 0.8):
        for base, delta in (("uniform", 0.5), ("uniform", 1.0), ("normal", 0.5)):
            worst = max(worst, abs(mi_class_squared_feature(k, base, delta)))
    ok = worst <= tol
    return CheckResult("zero-mi-of-square", ok, f"6 cases, max |MI| {worst:.1e}")


def check_skew_normal() -> CheckResult:
    from scipy.integrate import quad

    p = SkewNormalParams(0.0, 1.0, 1.0)
    mass, _ = quad(lambda t: skewnormal_pdf(p, t), -10.0, 10.0, epsabs=1e-10)
    if abs(mass - 1.0) > 1e-6:
        return CheckResult("skew-normal", False, f"pdf mass {mass}")
    base = skewnormal_pdf(SkewNormalParams(0.0, 1.0, 0.0), 0.0)
    if abs(base - 1.0 / math.sqrt(2.0 * math.pi)) > 1e-12:
        return CheckResult("skew-normal", False, "shape 0 does not reduce to normal")
    rng = np.random.default_rng(99)
    draws = skewnormal_sample(p, rng, 1_000_000)
    want = (1.0 / math.sqrt(2.0)) * math.sqrt(2.0 / math.pi)
    se = draws.std() / math.sqrt(draws.size)
    if abs(draws.mean() - want) > 3.0 * se:
        return CheckResult(
            "skew-normal", False, f"sample mean {draws.mean():.4f} vs {want:.4f}"
        )
    return CheckResult("skew-normal", True, f"mass {mass:.8f}, mean dev < 3 SE")


def check_ordering_tables() -> CheckResult:
    rows = 0
    for (scenario, k), methods in ORDERING_TABLE.items():
        provider = oracle_provider(ScenarioSpec(scenario, k))
        for mspec in methods:
            want, excluded = expected_positions(scenario, k, mspec)
            trace = select_all(mspec, provider)
            got = trace.selected
            if len(got) != len(want):
                return CheckResult(
                    "ordering-tables",
                    False,
                    f"{scenario.value} k={k} {mspec.label()}: {len(got)} picks, "
                    f"expected {len(want)}",
                )
            for pos, (g, w) in enumerate(zip(got, want)):
                if pos in excluded:
                    continue
                if g != w:
                    return CheckResult(
                        "ordering-tables",
                        False,
                        f"{scenario.value} k={k} {mspec.label()} step {pos + 1}: "
                        f"{g.name} != {w.name}",
                    )
            rows += 1
    return CheckResult("ordering-tables", True, f"{rows} rows reproduced")


ALL_CHECKS: tuple[Callable[[], CheckResult], ...] = (
    check_xreal_algebra,
    check_discrete_identities,
    check_oracle_tables,
    check_pairwise_tables,
    check_zero_mi_of_square,
    check_skew_normal,
    check_ordering_tables,
)


def run_all_checks() -> list[CheckResult]:
    return [check() for check in ALL_CHECKS]
