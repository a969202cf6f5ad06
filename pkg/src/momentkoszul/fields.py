"""Exact coefficient fields: arbitrary-precision rationals and odd prime fields.

Rational elements are `fractions.Fraction`; prime-field elements are plain
ints in ``range(p)``.  A field object only bundles the arithmetic; vectors and
matrices elsewhere store raw elements and pass the field alongside.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class InvalidFieldError(ValueError):
    """A field violates a characteristic guard of the requested computation."""


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class Field:
    """Coefficient field: rationals when ``p`` is None, else F_p with p an odd prime."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None:
            if not _is_prime(self.p) or self.p < 3:
                raise InvalidFieldError(f"modulus must be a prime >= 3, got {self.p}")

    @property
    def char(self) -> int:
        return 0 if self.p is None else self.p

    def of(self, a):
        """Embed an integer (or Fraction, for the rationals) into the field."""
        if self.p is None:
            return Fraction(a)
        if isinstance(a, Fraction):
            num = a.numerator % self.p
            den = a.denominator % self.p
            if den == 0:
                raise InvalidFieldError(f"denominator {a.denominator} vanishes mod {self.p}")
            return num * pow(den, self.p - 2, self.p) % self.p
        return a % self.p

    def zero(self):
        return Fraction(0) if self.p is None else 0

    def one(self):
        return Fraction(1) if self.p is None else 1

    def add(self, a, b):
        return a + b if self.p is None else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.p is None else (a - b) % self.p

    def mul(self, a, b):
        return a * b if self.p is None else (a * b) % self.p

    def neg(self, a):
        return -a if self.p is None else (-a) % self.p

    def inv(self, a):
        if self.p is None:
            return 1 / Fraction(a)
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of 0")
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        return a == 0 if self.p is None else a % self.p == 0

    def __str__(self) -> str:
        return "QQ" if self.p is None else f"F{self.p}"


QQ = Field()

#: Default prime for fast cross-checks; large enough that no computation in
#: the supported range hits an accidental characteristic collision.
DEFAULT_PRIME = 32003


def GF(p: int) -> Field:
    return Field(p)


def parse_field(text: str) -> Field:
    """Parse a CLI field spec: ``qq`` or ``fp:P``."""
    t = text.strip().lower()
    if t in ("qq", "q", "rational", "rationals"):
        return QQ
    if t.startswith("fp:"):
        return GF(int(t[3:]))
    raise InvalidFieldError(f"unrecognized field spec {text!r} (use 'qq' or 'fp:P')")
