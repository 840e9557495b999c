"""Reference values the suite reproduces.

Entropies and class MIs of the ten features (both scenarios, both
evaluated class slopes), and the true selection orderings of all eight
methods.  Rows shorter than ten features end in a forced halt.  One
cell is known to be irreproducible from the stated objective semantics
and is listed in ``EXCLUDED_CELLS``.
"""

from __future__ import annotations

from .oracle import FeatureId, Scenario
from .selection import Method, MethodSpec

V = FeatureId

ENTROPY_TABLE: dict[Scenario, dict[FeatureId, float]] = {
    Scenario.UNIFORM: {
        V.V1: 0.0, V.V2: 1.0986, V.V3: -1.6932, V.V4: 0.5, V.V5: 0.0,
        V.V6: -1.6932, V.V7: 0.0, V.V8: -1.6932, V.V9: 0.0, V.V10: 0.5,
    },
    Scenario.GAUSSIAN: {
        V.V1: 1.4189, V.V2: 2.5176, V.V3: 0.7838, V.V4: 1.7655, V.V5: 1.4189,
        V.V6: 0.7838, V.V7: 1.4189, V.V8: 0.7838, V.V9: 1.4189, V.V10: 1.7655,
    },
}

CLASS_MI_TABLE: dict[tuple[Scenario, float], dict[FeatureId, float]] = {
    (Scenario.UNIFORM, 0.2): {
        V.V1: 0.5932, V.V2: 0.5932, V.V3: 0.0, V.V4: 0.1785, V.V5: 0.0,
        V.V6: 0.0, V.V7: 0.0067, V.V8: 0.0, V.V9: 0.0, V.V10: 0.0,
    },
    (Scenario.UNIFORM, 0.8): {
        V.V1: 0.2932, V.V2: 0.2932, V.V3: 0.0, V.V4: 0.0201, V.V5: 0.0,
        V.V6: 0.0, V.V7: 0.1153, V.V8: 0.0, V.V9: 0.0, V.V10: 0.0,
    },
    (Scenario.GAUSSIAN, 0.2): {
        V.V1: 0.5520, V.V2: 0.5520, V.V3: 0.0, V.V4: 0.0947, V.V5: 0.0,
        V.V6: 0.0, V.V7: 0.0124, V.V8: 0.0, V.V9: 0.0, V.V10: 0.0,
    },
    (Scenario.GAUSSIAN, 0.8): {
        V.V1: 0.2495, V.V2: 0.2495, V.V3: 0.0, V.V4: 0.0032, V.V5: 0.0,
        V.V6: 0.0, V.V7: 0.1434, V.V8: 0.0, V.V9: 0.0, V.V10: 0.0,
    },
}

# The ordering shared by MIFS (beta != 0), mRMR and maxMIFS everywhere.
FULL_ORDER = (V.V1, V.V7, V.V5, V.V9, V.V4, V.V10, V.V2, V.V3, V.V6, V.V8)

_BETAS = (0.0, 0.4, 0.7, 1.0)


def _methods_with_betas(rows: dict) -> dict[MethodSpec, tuple[FeatureId, ...]]:
    out: dict[MethodSpec, tuple[FeatureId, ...]] = {}
    for key, row in rows.items():
        if isinstance(key, tuple):
            method, beta = key
            out[MethodSpec(method, beta)] = tuple(row)
        else:
            out[MethodSpec(key)] = tuple(row)
    return out


ORDERING_TABLE: dict[tuple[Scenario, float], dict[MethodSpec, tuple[FeatureId, ...]]] = {
    (Scenario.UNIFORM, 0.2): _methods_with_betas({
        (Method.MIFS, 0.0): (V.V1, V.V4, V.V7, V.V5, V.V9, V.V10),
        **{(Method.MIFS, b): FULL_ORDER for b in _BETAS[1:]},
        (Method.MIFS_U, 0.0): (V.V1,),
        **{(Method.MIFS_U, b): (V.V1, V.V2, V.V4, V.V8) for b in _BETAS[1:]},
        Method.MRMR: FULL_ORDER,
        Method.MMIFS_U: (V.V1, V.V2, V.V4, V.V8),
        Method.MICC: (V.V1, V.V8, V.V4, V.V3),
        Method.QMIFS: (V.V1, V.V2),
        Method.NMIFS: (V.V1, V.V8, V.V3, V.V6, V.V4),
        Method.MAX_MIFS: FULL_ORDER,
    }),
    (Scenario.UNIFORM, 0.8): _methods_with_betas({
        (Method.MIFS, 0.0): (V.V1, V.V7, V.V4, V.V5, V.V9, V.V10),
        **{(Method.MIFS, b): FULL_ORDER for b in _BETAS[1:]},
        (Method.MIFS_U, 0.0): (V.V1,),
        **{(Method.MIFS_U, b): (V.V1, V.V2, V.V4, V.V8) for b in _BETAS[1:]},
        Method.MRMR: FULL_ORDER,
        Method.MMIFS_U: (V.V1, V.V2, V.V4, V.V8),
        Method.MICC: (V.V1, V.V8, V.V4, V.V3),
        Method.QMIFS: (V.V1, V.V2),
        Method.NMIFS: (V.V1, V.V8, V.V2, V.V6, V.V4),
        Method.MAX_MIFS: FULL_ORDER,
    }),
    (Scenario.GAUSSIAN, 0.2): _methods_with_betas({
        (Method.MIFS, 0.0): (V.V1, V.V4, V.V7, V.V5, V.V9, V.V10),
        **{(Method.MIFS, b): FULL_ORDER for b in _BETAS[1:]},
        (Method.MIFS_U, 0.0): (V.V1, V.V4, V.V7, V.V5, V.V9, V.V10),
        (Method.MIFS_U, 0.4): (V.V1, V.V4, V.V7, V.V5, V.V9, V.V10, V.V2, V.V3, V.V8),
        (Method.MIFS_U, 0.7): (V.V1, V.V7, V.V5, V.V9, V.V10, V.V4, V.V2, V.V3, V.V8),
        (Method.MIFS_U, 1.0): (V.V1, V.V7, V.V5, V.V9, V.V10, V.V4, V.V2, V.V3, V.V8),
        Method.MRMR: FULL_ORDER,
        Method.MMIFS_U: (V.V1, V.V7, V.V5, V.V9, V.V10, V.V4, V.V2, V.V3, V.V8),
        Method.MICC: (V.V1, V.V7, V.V4, V.V3, V.V8, V.V2),
        Method.QMIFS: (V.V1, V.V7, V.V5, V.V9, V.V10, V.V4),
        Method.NMIFS: FULL_ORDER,
        Method.MAX_MIFS: FULL_ORDER,
    }),
    (Scenario.GAUSSIAN, 0.8): _methods_with_betas({
        (Method.MIFS, 0.0): (V.V1, V.V7, V.V4, V.V5, V.V9, V.V10),
        **{(Method.MIFS, b): FULL_ORDER for b in _BETAS[1:]},
        (Method.MIFS_U, 0.0): (V.V1, V.V7, V.V4, V.V5, V.V9, V.V10),
        **{
            (Method.MIFS_U, b): (V.V1, V.V7, V.V5, V.V9, V.V10, V.V4, V.V2, V.V3, V.V8)
            for b in _BETAS[1:]
        },
        Method.MRMR: FULL_ORDER,
        Method.MMIFS_U: (V.V1, V.V7, V.V5, V.V9, V.V10, V.V4, V.V2, V.V3, V.V8),
        Method.MICC: (V.V1, V.V7, V.V4, V.V3, V.V8, V.V2),
        Method.QMIFS: (V.V1, V.V7, V.V5, V.V9, V.V10, V.V4),
        Method.NMIFS: FULL_ORDER,
        Method.MAX_MIFS: FULL_ORDER,
    }),
}

# (scenario, k, method spec) -> 0-based positions whose reference value is
# inconsistent with the stated objective semantics: the uniform-scenario
# k=0.8 NMIFS third pick is listed as the affine copy of X, but every
# quantity entering the objective at that step is identical to the k=0.2
# case, where the squared feature is (correctly) listed instead.
EXCLUDED_CELLS: dict[tuple[Scenario, float, MethodSpec], frozenset[int]] = {
    (Scenario.UNIFORM, 0.8, MethodSpec(Method.NMIFS)): frozenset({2}),
}


def expected_positions(
    scenario: Scenario, k: float, method: MethodSpec
) -> tuple[tuple[FeatureId, ...], frozenset[int]]:
    """Reference row plus the set of excluded 0-based positions."""
    row = ORDERING_TABLE[(scenario, k)][method]
    excluded = EXCLUDED_CELLS.get((scenario, k, method), frozenset())
    return row, excluded
