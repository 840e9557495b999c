"""Closed arithmetic over the extended reals with typed indeterminate outcomes.

Objective functions built from entropies and mutual informations of
continuous features routinely produce +inf (fully associated features),
-inf (infinite redundancy penalties) and the four classic indeterminate
forms (0*inf, inf-inf, 0/0, inf/inf).  Floating-point NaN silently
poisons comparisons, so indeterminates are first-class tagged values
here: every operation is total, and an indeterminate operand absorbs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable


class IndetKind(Enum):
    """The four undefined extended-real outcomes."""

    ZERO_TIMES_INF = "0*inf"
    INF_MINUS_INF = "inf-inf"
    ZERO_OVER_ZERO = "0/0"
    INF_OVER_INF = "inf/inf"


class _Kind(Enum):
    FINITE = 0
    POS_INF = 1
    NEG_INF = 2
    INDET = 3


class IndeterminateComparison(ValueError):
    """Raised when an indeterminate value reaches an order comparison."""


@dataclass(frozen=True)
class XReal:
    """Extended-real value: finite, +inf, -inf, or a tagged indeterminate.

    Construct through :func:`finite`, :func:`indeterminate` or the module
    constants ``POS_INF`` / ``NEG_INF``; the raw constructor does not
    validate.
    """

    kind: _Kind
    value: float = 0.0
    indet_kind: IndetKind | None = None

    @property
    def is_finite(self) -> bool:
        return self.kind is _Kind.FINITE

    @property
    def is_pos_inf(self) -> bool:
        return self.kind is _Kind.POS_INF

    @property
    def is_neg_inf(self) -> bool:
        return self.kind is _Kind.NEG_INF

    @property
    def is_infinite(self) -> bool:
        return self.kind is _Kind.POS_INF or self.kind is _Kind.NEG_INF

    @property
    def is_indet(self) -> bool:
        return self.kind is _Kind.INDET

    def __str__(self) -> str:
        if self.is_finite:
            return format(self.value, "g")
        if self.is_pos_inf:
            return "+inf"
        if self.is_neg_inf:
            return "-inf"
        assert self.indet_kind is not None
        return f"indet({self.indet_kind.value})"

    def __repr__(self) -> str:
        return f"XReal<{self}>"


POS_INF = XReal(_Kind.POS_INF)
NEG_INF = XReal(_Kind.NEG_INF)


def finite(value: float) -> XReal:
    """Wrap a host float; NaN and the float infinities are rejected."""
    value = float(value)
    if math.isnan(value) or math.isinf(value):
        raise ValueError(f"not a finite real: {value!r}")
    if value == 0.0:
        value = 0.0  # collapse -0.0 so exact-zero tests and rendering agree
    return XReal(_Kind.FINITE, value)


def indeterminate(kind: IndetKind) -> XReal:
    return XReal(_Kind.INDET, indet_kind=kind)


ZERO = finite(0.0)


def xneg(a: XReal) -> XReal:
    if a.is_indet:
        return a
    if a.is_pos_inf:
        return NEG_INF
    if a.is_neg_inf:
        return POS_INF
    return finite(-a.value)


def xadd(a: XReal, b: XReal) -> XReal:
    if a.is_indet:
        return a
    if b.is_indet:
        return b
    if a.is_finite and b.is_finite:
        return finite(a.value + b.value)
    if a.is_finite:
        return b
    if b.is_finite:
        return a
    if a.kind is b.kind:
        return a
    return indeterminate(IndetKind.INF_MINUS_INF)


def xsub(a: XReal, b: XReal) -> XReal:
    return xadd(a, xneg(b))


def xmul(a: XReal, b: XReal) -> XReal:
    if a.is_indet:
        return a
    if b.is_indet:
        return b
    if a.is_finite and b.is_finite:
        return finite(a.value * b.value)
    if a.is_finite or b.is_finite:
        fin, inf = (a, b) if a.is_finite else (b, a)
        if fin.value == 0.0:
            return indeterminate(IndetKind.ZERO_TIMES_INF)
        return POS_INF if (fin.value > 0.0) == inf.is_pos_inf else NEG_INF
    return POS_INF if a.kind is b.kind else NEG_INF


def xdiv(a: XReal, b: XReal) -> XReal:
    if a.is_indet:
        return a
    if b.is_indet:
        return b
    if b.is_finite and b.value == 0.0:
        if a.is_finite and a.value == 0.0:
            return indeterminate(IndetKind.ZERO_OVER_ZERO)
        # one-sided limit convention: sign of the numerator
        return POS_INF if a.is_pos_inf or a.value > 0.0 else NEG_INF
    if a.is_finite and b.is_finite:
        return finite(a.value / b.value)
    if b.is_infinite:
        if a.is_infinite:
            return indeterminate(IndetKind.INF_OVER_INF)
        return ZERO
    # a infinite, b finite nonzero
    return POS_INF if a.is_pos_inf == (b.value > 0.0) else NEG_INF


def xsum(values: Iterable[XReal]) -> XReal:
    """Left fold of :func:`xadd`; the empty sum is finite zero."""
    total = ZERO
    for v in values:
        total = xadd(total, v)
    return total


def compare(a: XReal, b: XReal) -> int:
    """Order two non-indeterminate values: -inf < finite < +inf.

    Returns -1, 0 or 1.  Indeterminate operands signal a programming
    error: callers must filter them out before ranking.
    """
    for v in (a, b):
        if v.is_indet:
            raise IndeterminateComparison(f"cannot order {v}")
    ka = _order_class(a)
    kb = _order_class(b)
    if ka != kb:
        return -1 if ka < kb else 1
    if a.is_finite:
        if a.value < b.value:
            return -1
        if a.value > b.value:
            return 1
    return 0


def _order_class(v: XReal) -> int:
    if v.is_neg_inf:
        return 0
    if v.is_finite:
        return 1
    return 2


def xmax(values: Iterable[XReal]) -> XReal:
    """Maximum under the extended order; an indeterminate operand absorbs."""
    return _extremum(values, 1)


def xmin(values: Iterable[XReal]) -> XReal:
    """Minimum under the extended order; an indeterminate operand absorbs."""
    return _extremum(values, -1)


def _extremum(values: Iterable[XReal], sign: int) -> XReal:
    best: XReal | None = None
    indet: XReal | None = None
    for v in values:
        if v.is_indet:
            indet = indet or v
            continue
        if best is None or sign * compare(v, best) > 0:
            best = v
    if indet is not None:
        return indet
    if best is None:
        raise ValueError("extremum of an empty sequence")
    return best
