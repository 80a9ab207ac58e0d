"""Log-domain complex arithmetic.

Kernel factors in this package routinely have magnitudes like exp(+-N*m),
far outside double range.  A ``LogComplex`` stores a complex value as
(log-magnitude, phase) so products and quotients of such factors stay
representable; only final, order-one combinations are exponentiated.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = ["LogComplex", "log_sum_exp_complex", "ZERO", "ONE"]

_TWO_PI = 2.0 * math.pi


def _wrap_phase(phi: float) -> float:
    """Reduce a phase to the canonical interval (-pi, pi]."""
    if -math.pi < phi <= math.pi:
        return phi
    phi = math.fmod(phi, _TWO_PI)
    if phi <= -math.pi:
        phi += _TWO_PI
    elif phi > math.pi:
        phi -= _TWO_PI
    return phi


@dataclass(frozen=True)
class LogComplex:
    """A complex number stored as ``exp(log_mag) * exp(1j*phase)``.

    ``log_mag = -inf`` encodes an exact zero.  ``phase`` lies in (-pi, pi].
    """

    log_mag: float
    phase: float = 0.0

    def __post_init__(self):
        if math.isnan(self.log_mag):
            raise ValueError("log_mag is NaN")
        object.__setattr__(self, "phase", _wrap_phase(self.phase))

    # -- constructors -------------------------------------------------

    @staticmethod
    def from_complex(z: complex) -> "LogComplex":
        z = complex(z)
        if z == 0:
            return ZERO
        return LogComplex(math.log(abs(z)), cmath.phase(z))

    @staticmethod
    def from_real(x: float) -> "LogComplex":
        if x == 0:
            return ZERO
        if x > 0:
            return LogComplex(math.log(x), 0.0)
        return LogComplex(math.log(-x), math.pi)

    @staticmethod
    def from_clog(w: complex) -> "LogComplex":
        """Interpret ``w`` as a complex logarithm: value = exp(w)."""
        return LogComplex(w.real, w.imag)

    # -- queries -------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.log_mag == -math.inf

    def to_complex(self) -> complex:
        if self.is_zero:
            return 0.0 + 0.0j
        mag = math.exp(self.log_mag)  # may overflow to inf deliberately
        # exact phases keep real values exactly real
        if self.phase == 0.0:
            return complex(mag, 0.0)
        if self.phase == math.pi:
            return complex(-mag, 0.0)
        return mag * complex(math.cos(self.phase), math.sin(self.phase))

    # -- arithmetic ----------------------------------------------------

    def __mul__(self, other: "LogComplex") -> "LogComplex":
        if self.is_zero or other.is_zero:
            return ZERO
        return LogComplex(self.log_mag + other.log_mag, self.phase + other.phase)

    def __truediv__(self, other: "LogComplex") -> "LogComplex":
        if other.is_zero:
            raise ZeroDivisionError("division by exact LogComplex zero")
        if self.is_zero:
            return ZERO
        return LogComplex(self.log_mag - other.log_mag, self.phase - other.phase)

    def __neg__(self) -> "LogComplex":
        if self.is_zero:
            return ZERO
        return LogComplex(self.log_mag, self.phase + math.pi)

    def conj(self) -> "LogComplex":
        if self.is_zero or self.phase in (0.0, math.pi):
            return self
        return LogComplex(self.log_mag, -self.phase)

    def scaled(self, factor: complex) -> "LogComplex":
        return self * LogComplex.from_complex(factor)

    def powi(self, n: int) -> "LogComplex":
        if self.is_zero:
            return ZERO if n > 0 else ONE
        return LogComplex(n * self.log_mag, n * self.phase)


ZERO = LogComplex(-math.inf, 0.0)
ONE = LogComplex(0.0, 0.0)


def _unit_phase(phi: float) -> complex:
    # snap exactly-representable real phases so 1 + exp(i*pi) cancels to 0
    if phi == 0.0:
        return 1.0 + 0.0j
    if phi == math.pi:
        return -1.0 + 0.0j
    return complex(math.cos(phi), math.sin(phi))


def log_sum_exp_complex(terms: Iterable[LogComplex] | Sequence[LogComplex]) -> LogComplex:
    """Sum LogComplex terms after factoring out the maximal log-magnitude.

    Exact cancellation to zero is allowed and returns the zero element.
    """
    terms = list(terms)
    if not terms:
        raise ValueError("log_sum_exp_complex requires at least one term")
    pivot = max(t.log_mag for t in terms)
    if pivot == -math.inf:
        return ZERO
    acc = 0.0 + 0.0j
    for t in terms:
        if t.is_zero:
            continue
        acc += math.exp(t.log_mag - pivot) * _unit_phase(t.phase)
    if acc == 0:
        return ZERO
    return LogComplex(pivot + math.log(abs(acc)), cmath.phase(acc))
