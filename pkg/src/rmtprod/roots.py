"""Bracketed scalar root finding for the monotone client equations."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from scipy.optimize import brentq

from .errors import BracketError

__all__ = ["Bracket", "find_root_bracketed", "grow_bracket"]

_GROW_CAP = 2.0 ** 60


@dataclass(frozen=True)
class Bracket:
    """A sign-changing interval for a scalar function."""

    lo: float
    hi: float
    f_lo: float
    f_hi: float

    def __post_init__(self):
        if not (self.lo < self.hi):
            raise BracketError(f"bracket requires lo < hi, got [{self.lo}, {self.hi}]")
        if not (self.f_lo * self.f_hi <= 0.0):
            raise BracketError(
                f"no sign change on [{self.lo}, {self.hi}]: "
                f"f = ({self.f_lo:.3g}, {self.f_hi:.3g})"
            )


def find_root_bracketed(f: Callable[[float], float], bracket: Bracket, tol: float = 1e-13) -> float:
    """Root of ``f`` inside ``bracket`` to width < ``tol``."""
    if bracket.f_lo == 0.0:
        return bracket.lo
    if bracket.f_hi == 0.0:
        return bracket.hi
    return float(brentq(f, bracket.lo, bracket.hi, xtol=tol, rtol=8.9e-16, maxiter=200))


def grow_bracket(f: Callable[[float], float], lo: float = 0.0, hi: float = 1.0) -> Bracket:
    """Double ``hi`` from the starting interval until the sign changes.

    The client equations are monotone increasing on (0, inf), so a single
    upward growth suffices; capped at 2**60.
    """
    f_lo = f(lo)
    f_hi = f(hi)
    while f_lo * f_hi > 0.0:
        if hi >= _GROW_CAP or not math.isfinite(f_hi):
            raise BracketError(f"no sign change found growing to hi = {hi:.3g}")
        hi *= 2.0
        f_hi = f(hi)
    return Bracket(lo, hi, f_lo, f_hi)
