"""Adaptive quadrature on boxes of dimension 1-3 plus a principal-value rule.

The one-dimensional engine is a globally adaptive Gauss-Kronrod (G7/K15)
panel scheme with a worst-panel-first heap; higher dimensions nest it.
Semi-infinite and doubly infinite edges are folded to finite intervals by
rational substitutions before panelling.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .errors import DomainError, ToleranceError

__all__ = ["QuadratureRule", "adaptive_quad", "pv_quad_1d"]

# 15-point Kronrod extension of 7-point Gauss on [-1, 1]
_XK = np.array([
    -0.991455371120813, -0.949107912342759, -0.864864423359769,
    -0.741531185599394, -0.586087235467691, -0.405845151377397,
    -0.207784955007898, 0.0,
    0.207784955007898, 0.405845151377397, 0.586087235467691,
    0.741531185599394, 0.864864423359769, 0.949107912342759,
    0.991455371120813,
])
_WK = np.array([
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728,
    0.204432940075298, 0.190350578064785, 0.169004726639267,
    0.140653259715525, 0.104790010322250, 0.063092092629979,
    0.022935322010529,
])
_WG = np.array([
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469,
    0.381830050505119, 0.279705391489277, 0.129484966168870,
])
_G_IDX = np.arange(1, 15, 2)  # Gauss nodes sit at the odd Kronrod indices


@dataclass
class QuadratureRule:
    """Panel rule and adaptivity budget for ``adaptive_quad``."""

    dimension: int = 1
    rel_tol: float = 1e-9
    abs_tol: float = 0.0
    max_subdivisions: int = 400
    nodes: np.ndarray = field(default_factory=lambda: _XK.copy())
    weights: np.ndarray = field(default_factory=lambda: _WK.copy())

    def __post_init__(self):
        if self.dimension < 1:
            raise DomainError("quadrature dimension must be >= 1")
        if not (0.0 < self.rel_tol < 1.0):
            raise DomainError("relative tolerance must lie in (0, 1)")
        if self.max_subdivisions < 1:
            raise DomainError("max_subdivisions must be >= 1")
        if not (np.all(np.isfinite(self.nodes)) and np.all(np.isfinite(self.weights))):
            raise DomainError("quadrature nodes/weights must be finite")

    def inner(self) -> "QuadratureRule":
        """Rule for nested (inner-dimension) integrals."""
        return QuadratureRule(
            dimension=1,
            rel_tol=self.rel_tol / 5.0,
            abs_tol=0.0,
            max_subdivisions=self.max_subdivisions,
        )


def _eval(f, x: np.ndarray, vectorized: bool) -> np.ndarray:
    if vectorized:
        return np.asarray(f(x))
    return np.asarray([f(float(xi)) for xi in x])


def _panel(f, a: float, b: float, vectorized: bool):
    half = 0.5 * (b - a)
    mid = 0.5 * (a + b)
    y = _eval(f, mid + half * _XK, vectorized)
    if not np.all(np.isfinite(y.view(float) if np.iscomplexobj(y) else y)):
        raise DomainError(f"integrand not finite inside panel [{a}, {b}]")
    ik = half * np.sum(_WK * y)
    ig = half * np.sum(_WG * y[_G_IDX])
    err = abs(ik - ig) + 50.0 * np.finfo(float).eps * abs(ik)
    return ik, err


def _adaptive_1d(f, a: float, b: float, rule: QuadratureRule, vectorized: bool):
    if a == b:
        return 0.0, 0.0
    sign = 1.0
    if a > b:
        a, b, sign = b, a, -1.0
    val, err = _panel(f, a, b, vectorized)
    heap = [(-err, a, b, val, err)]
    total_val, total_err = val, err
    splits = 0
    while total_err > max(rule.abs_tol, rule.rel_tol * abs(total_val)):
        if splits >= rule.max_subdivisions:
            raise ToleranceError(
                f"subdivision budget {rule.max_subdivisions} exhausted "
                f"(achieved {total_err:.3e} on |value| {abs(total_val):.3e})",
                estimate=sign * total_val,
                achieved=total_err,
            )
        _, pa, pb, pval, perr = heapq.heappop(heap)
        pm = 0.5 * (pa + pb)
        if pm <= pa or pm >= pb:  # interval at roundoff floor; keep as is
            heapq.heappush(heap, (0.0, pa, pb, pval, 0.0))
            total_err -= perr
            continue
        lv, le = _panel(f, pa, pm, vectorized)
        rv, re_ = _panel(f, pm, pb, vectorized)
        total_val += lv + rv - pval
        total_err += le + re_ - perr
        heapq.heappush(heap, (-le, pa, pm, lv, le))
        heapq.heappush(heap, (-re_, pm, pb, rv, re_))
        splits += 1
    return sign * total_val, total_err


def _fold_infinite(f, lo: float, hi: float, vectorized: bool):
    """Map an infinite interval to a finite one; return (g, a, b)."""
    if math.isinf(lo) and math.isinf(hi):
        # x = t/(1-t^2), t in (-1, 1)
        def g(t):
            t = np.asarray(t, dtype=float)
            u = 1.0 - t * t
            x = t / u
            jac = (1.0 + t * t) / (u * u)
            return f(x) * jac if vectorized else f(float(x)) * float(jac)

        return g, -1.0 + 1e-14, 1.0 - 1e-14
    if math.isinf(hi):
        # x = lo + t/(1-t), t in (0, 1)
        def g(t):
            t = np.asarray(t, dtype=float)
            u = 1.0 - t
            x = lo + t / u
            jac = 1.0 / (u * u)
            return f(x) * jac if vectorized else f(float(x)) * float(jac)

        return g, 0.0, 1.0 - 1e-14
    if math.isinf(lo):
        def g(t):
            t = np.asarray(t, dtype=float)
            u = 1.0 - t
            x = hi - t / u
            jac = 1.0 / (u * u)
            return f(x) * jac if vectorized else f(float(x)) * float(jac)

        return g, 0.0, 1.0 - 1e-14
    return f, lo, hi


def adaptive_quad(
    f: Callable,
    domain: Sequence[tuple[float, float]] | tuple[float, float],
    rule: QuadratureRule | None = None,
    vectorized: bool = False,
):
    """Integrate ``f`` over a box of dimension d <= 3.

    ``domain`` is a (lo, hi) pair or a sequence of them; infinite edges are
    allowed.  ``f`` takes one float per dimension; with ``vectorized=True``
    the innermost argument may be an ndarray.  Returns ``(value, error)``;
    raises :class:`ToleranceError` when the budget runs out, carrying the
    best estimate.
    """
    if isinstance(domain, tuple) and len(domain) == 2 and np.isscalar(domain[0]):
        domain = [domain]
    domain = [tuple(map(float, edge)) for edge in domain]
    d = len(domain)
    if d > 3:
        raise DomainError(f"adaptive_quad supports dimension <= 3, got {d}")
    if rule is None:
        rule = QuadratureRule(dimension=d)
    if d == 1:
        g, a, b = _fold_infinite(f, domain[0][0], domain[0][1], vectorized)
        return _adaptive_1d(g, a, b, rule, vectorized)

    inner_rule = rule.inner()
    inner_budget = [0.0]  # largest relative error accepted by inner calls

    def sliced(x: float):
        def fx(*rest):
            return f(x, *rest)

        val, err = adaptive_quad(fx, domain[1:], inner_rule, vectorized)
        if abs(val) > 0:
            inner_budget[0] = max(inner_budget[0], err / abs(val))
        return val

    g, a, b = _fold_infinite(sliced, domain[0][0], domain[0][1], False)
    val, err = _adaptive_1d(g, a, b, rule, vectorized=False)
    # inner errors are relative per slice; fold them in conservatively
    err = err + 3.0 * abs(val) * max(inner_budget[0], inner_rule.rel_tol)
    return val, err


def pv_quad_1d(
    g: Callable,
    halfwidth: float,
    rule: QuadratureRule | None = None,
    vectorized: bool = False,
):
    """Principal value of ``g(t)/t`` over ``[-halfwidth, halfwidth]``.

    Uses the symmetric-pair rewrite ``int_0^h (g(t) - g(-t))/t dt``; ``g``
    must be continuous on the interval.  Returns the value (complex when
    ``g`` is complex-valued).
    """
    if not (halfwidth > 0 and math.isfinite(halfwidth)):
        raise DomainError("pv_quad_1d requires a finite positive halfwidth")
    if rule is None:
        rule = QuadratureRule(dimension=1)

    if vectorized:
        def h(t):
            return (g(t) - g(-t)) / t
    else:
        def h(t):
            return (g(t) - g(-t)) / t

    val, _err = _adaptive_1d(h, 0.0, float(halfwidth), rule, vectorized)
    return val
