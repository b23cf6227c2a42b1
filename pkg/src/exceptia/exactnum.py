"""Exact scalar arithmetic: rationals, the field Q(sqrt5), modular powers.

Everything downstream (hypercomplex numbers, lattices, q-series) does its
arithmetic in one of two fields: plain rationals, or the real quadratic field
Q(sqrt5) needed by the golden-ratio quaternions. Both are exact; no floats
enter or leave this module. Approximations, where a caller wants them, are the
caller's business.

Rationals are `fractions.Fraction` throughout. The stdlib type already keeps
the canonical reduced form with positive denominator, so we use it directly
rather than wrapping it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Rat = Union[int, Fraction]


def rat(x: Rat) -> Fraction:
    """Coerce an int or Fraction to Fraction (no floats accepted)."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"exact scalar expected, got {type(x).__name__}")


def rat_arith(a: Rat, b: Rat, kind: str) -> Fraction:
    """Field arithmetic on rationals; `kind` is one of add/sub/mul/div."""
    a, b = rat(a), rat(b)
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    if kind == "div":
        if b == 0:
            raise ZeroDivisionError("rational division by zero")
        return a / b
    raise ValueError(f"unknown arithmetic kind {kind!r}")


@dataclass(frozen=True)
class GoldenRational:
    """An element u + v*sqrt(5) of Q(sqrt5), with exact rational u, v.

    The basis is {1, sqrt5}, not {1, phi}; the coordinate split used by the
    icosian-to-R^8 embedding reads the two components off directly.
    """

    u: Fraction
    v: Fraction

    def __init__(self, u: Rat = 0, v: Rat = 0):
        object.__setattr__(self, "u", rat(u))
        object.__setattr__(self, "v", rat(v))

    def __add__(self, other: "GoldenRational") -> "GoldenRational":
        other = _coerce(other)
        return GoldenRational(self.u + other.u, self.v + other.v)

    __radd__ = __add__

    def __sub__(self, other: "GoldenRational") -> "GoldenRational":
        other = _coerce(other)
        return GoldenRational(self.u - other.u, self.v - other.v)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __neg__(self) -> "GoldenRational":
        return GoldenRational(-self.u, -self.v)

    def __mul__(self, other: "GoldenRational") -> "GoldenRational":
        other = _coerce(other)
        return GoldenRational(
            self.u * other.u + 5 * self.v * other.v,
            self.u * other.v + self.v * other.u,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: "GoldenRational") -> "GoldenRational":
        other = _coerce(other)
        # (u - v sqrt5)(u + v sqrt5) = u^2 - 5 v^2, nonzero for nonzero
        # elements because sqrt5 is irrational
        n = other.u * other.u - 5 * other.v * other.v
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt5)")
        return self * GoldenRational(other.u / n, -other.v / n)

    def __bool__(self) -> bool:
        return bool(self.u) or bool(self.v)

    def conjugate(self) -> "GoldenRational":
        """Galois conjugate sqrt5 -> -sqrt5."""
        return GoldenRational(self.u, -self.v)

    def trace_value(self) -> Fraction:
        """The rational u + v, i.e. the evaluation sqrt5 -> 1.

        Not a field map; used by callers comparing quadratic forms.
        """
        return self.u + self.v

    def __repr__(self) -> str:
        if self.v == 0:
            return f"golden({self.u})"
        return f"golden({self.u} + {self.v}*sqrt5)"


def _coerce(x) -> GoldenRational:
    if isinstance(x, GoldenRational):
        return x
    return GoldenRational(rat(x))


GOLDEN_ZERO = GoldenRational(0)
GOLDEN_ONE = GoldenRational(1)
PHI = GoldenRational(Fraction(1, 2), Fraction(1, 2))
PHI_BAR = PHI.conjugate()


def golden_mul(x: GoldenRational, y: GoldenRational) -> GoldenRational:
    return x * y


def golden_conj(x: GoldenRational) -> GoldenRational:
    return x.conjugate()


def mod_pow(base: int, exp: int, modulus: int) -> int:
    """base**exp mod modulus by binary exponentiation.

    Thin wrapper over the builtin three-argument pow, which already does
    square-and-multiply; kept as a named operation so call sites read as
    number theory rather than as a builtin trick.
    """
    if modulus < 1:
        raise ValueError("modulus must be positive")
    if exp < 0:
        raise ValueError("negative exponent not supported here")
    return pow(base, exp, modulus)
