"""Exact Gaussian-rational scalars.

A scalar is a complex number whose real and imaginary parts are both
arbitrary-precision rationals (``fractions.Fraction``).  This subfield of the
complex numbers is closed under conjugation, the four field operations, and
inversion of nonzero elements, so every computation in the package stays
exact; there is no tolerance parameter anywhere.

Text format: ``"p/q"`` or ``"p/q+r/s i"`` (signs allowed, whitespace
ignored, trailing ``i`` marks the imaginary term).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Rational = Union[int, Fraction]

_FZERO = Fraction(0)


def _make(re: Fraction, im: Fraction) -> "GaussianRational":
    # internal fast path: both arguments are already Fractions
    z = object.__new__(GaussianRational)
    object.__setattr__(z, "re", re)
    object.__setattr__(z, "im", im)
    return z


@dataclass(frozen=True)
class GaussianRational:
    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    # -- field operations -------------------------------------------------

    def __add__(self, other):
        other = as_scalar(other)
        return _make(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return _make(-self.re, -self.im)

    def __sub__(self, other):
        other = as_scalar(other)
        return _make(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return as_scalar(other) + (-self)

    def __mul__(self, other):
        other = as_scalar(other)
        if not self.im and not other.im:
            return _make(self.re * other.re, _FZERO)
        return _make(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = as_scalar(other)
        if other.is_zero:
            raise ZeroDivisionError("division by zero scalar")
        n = other.norm_sq()
        return GaussianRational(
            (self.re * other.re + self.im * other.im) / n,
            (self.im * other.re - self.re * other.im) / n,
        )

    def __rtruediv__(self, other):
        return as_scalar(other) / self

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm_sq(self) -> Fraction:
        """|z|^2, always a nonnegative rational (no square roots needed)."""
        return self.re * self.re + self.im * self.im

    # -- predicates & comparisons -----------------------------------------

    @property
    def is_zero(self) -> bool:
        return not (self.re or self.im)

    @property
    def is_real(self) -> bool:
        return not self.im

    def __bool__(self):
        return not self.is_zero

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        # hash-compatible with plain rationals when the value is real
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    # -- text format -------------------------------------------------------

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        im = f"{self.im}i" if self.im < 0 else f"+{self.im}i"
        if self.re == 0:
            return f"{self.im}i"
        return f"{self.re}{im}"

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"


ZERO = GaussianRational()
ONE = GaussianRational(Fraction(1))
I = GaussianRational(Fraction(0), Fraction(1))


def as_scalar(x) -> GaussianRational:
    """Coerce an int, Fraction, or GaussianRational to a scalar."""
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussianRational(Fraction(x))
    if isinstance(x, str):
        return parse_scalar(x)
    raise TypeError(f"cannot interpret {x!r} as an exact scalar")


def parse_scalar(text: str) -> GaussianRational:
    """Parse the ``"p/q"`` / ``"p/q+r/s i"`` text form.  Whitespace is ignored."""
    s = "".join(text.split())
    if not s:
        raise ValueError("empty scalar string")
    if not s.endswith("i"):
        return GaussianRational(Fraction(s))
    body = s[:-1]
    # split real from imaginary at the last top-level sign (index >= 1)
    split = max(body.rfind("+", 1), body.rfind("-", 1))
    if split == -1:
        real, imag = "", body
    else:
        real, imag = body[:split], body[split:]
    if imag in ("", "+"):
        im = Fraction(1)
    elif imag == "-":
        im = Fraction(-1)
    else:
        im = Fraction(imag)
    re = Fraction(real) if real else Fraction(0)
    return GaussianRational(re, im)
