"""Sign + log-magnitude arithmetic for quantities far outside float range.

Everything at scales like 10**294 (Bernoulli magnitudes, model gap counts)
or n = 10**(10**6) (density asymptotics) is carried as a LogValue: an exact
sign together with the natural log of the magnitude. Multiplication is
addition of logs; addition goes through a stable log-sum-exp.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

LN10 = math.log(10.0)


@dataclass(frozen=True)
class LogValue:
    """A real number stored as (sign, ln|x|); ln_mag is ignored when sign == 0."""

    sign: int
    ln_mag: float

    def __post_init__(self):
        if self.sign not in (-1, 0, 1):
            raise ValueError(f"sign must be -1, 0 or +1, got {self.sign}")

    # -- constructors -------------------------------------------------

    @staticmethod
    def from_float(x) -> "LogValue":
        if isinstance(x, LogValue):
            return x
        if x == 0:
            return LogValue(0, 0.0)
        if isinstance(x, int):
            # big ints are fine: math.log takes arbitrary-precision integers
            return LogValue(1 if x > 0 else -1, math.log(abs(x)))
        x = float(x)
        return LogValue(1 if x > 0 else -1, math.log(abs(x)))

    @staticmethod
    def from_ln(ln_mag: float, sign: int = 1) -> "LogValue":
        return LogValue(sign, float(ln_mag))

    @staticmethod
    def exp10(log10_x: float) -> "LogValue":
        """LogValue for 10**log10_x."""
        return LogValue(1, log10_x * LN10)

    # -- conversions --------------------------------------------------

    def to_float(self) -> float:
        if self.sign == 0:
            return 0.0
        if self.ln_mag > 709.0:
            return math.inf * self.sign
        return self.sign * math.exp(self.ln_mag)

    @property
    def log10(self) -> float:
        if self.sign == 0:
            raise ValueError("log10 of zero")
        return self.ln_mag / LN10

    def mantissa_exponent(self) -> tuple[float, int]:
        """Decimal scientific form: (signed mantissa in [1,10), exponent)."""
        if self.sign == 0:
            return 0.0, 0
        lg = self.log10
        e = math.floor(lg)
        m = 10.0 ** (lg - e)
        if m >= 10.0:  # guard the floor edge
            m /= 10.0
            e += 1
        return self.sign * m, e

    def __str__(self):
        if self.sign == 0:
            return "0"
        m, e = self.mantissa_exponent()
        return f"{m:.6g}e{e:+d}"

    # -- arithmetic ---------------------------------------------------

    def __mul__(self, other) -> "LogValue":
        other = LogValue.from_float(other)
        if self.sign == 0 or other.sign == 0:
            return LogValue(0, 0.0)
        return LogValue(self.sign * other.sign, self.ln_mag + other.ln_mag)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "LogValue":
        other = LogValue.from_float(other)
        if other.sign == 0:
            raise ZeroDivisionError("LogValue division by zero")
        if self.sign == 0:
            return LogValue(0, 0.0)
        return LogValue(self.sign * other.sign, self.ln_mag - other.ln_mag)

    def __pow__(self, k: float) -> "LogValue":
        if self.sign == 0:
            return LogValue(0, 0.0) if k > 0 else LogValue(1, math.inf)
        if self.sign < 0:
            raise ValueError("power of negative LogValue")
        return LogValue(1, self.ln_mag * k)

    def __neg__(self) -> "LogValue":
        return LogValue(-self.sign, self.ln_mag)

    def __add__(self, other) -> "LogValue":
        other = LogValue.from_float(other)
        if self.sign == 0:
            return other
        if other.sign == 0:
            return self
        a, b = self, other
        if b.ln_mag > a.ln_mag:
            a, b = b, a
        d = b.ln_mag - a.ln_mag  # <= 0
        if a.sign == b.sign:
            return LogValue(a.sign, a.ln_mag + math.log1p(math.exp(d)))
        t = -math.expm1(d)  # 1 - exp(d) in (0,1]
        if t == 0.0:
            return LogValue(0, 0.0)
        return LogValue(a.sign, a.ln_mag + math.log(t))

    __radd__ = __add__

    def __sub__(self, other) -> "LogValue":
        return self + (-LogValue.from_float(other))

    # -- comparisons (same totally ordered semantics as floats) -------

    def _key(self):
        return (self.sign, self.sign * self.ln_mag)

    def __lt__(self, other):
        return self._key() < LogValue.from_float(other)._key()

    def __le__(self, other):
        return self._key() <= LogValue.from_float(other)._key()

    def __gt__(self, other):
        return self._key() > LogValue.from_float(other)._key()

    def __ge__(self, other):
        return self._key() >= LogValue.from_float(other)._key()

    def isclose(self, other, rel: float = 1e-12) -> bool:
        other = LogValue.from_float(other)
        if self.sign != other.sign:
            return self.sign == 0 and other.sign == 0
        if self.sign == 0:
            return True
        return abs(self.ln_mag - other.ln_mag) <= rel


def ln_of(x) -> float:
    """Natural log of a positive int/float/LogValue (ints may exceed float range)."""
    if isinstance(x, LogValue):
        if x.sign <= 0:
            raise ValueError("ln of non-positive value")
        return x.ln_mag
    if isinstance(x, int):
        if x <= 0:
            raise ValueError("ln of non-positive value")
        return math.log(x)
    x = float(x)
    if x <= 0:
        raise ValueError("ln of non-positive value")
    return math.log(x)
