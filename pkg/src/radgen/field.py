"""Exact coefficient fields: the rationals and prime fields F_p."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

Scalar = Union[int, Fraction]


class CoefficientError(ValueError):
    """A value cannot be represented in the target field."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, math.isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


@dataclass(frozen=True)
class Field:
    """A coefficient field.

    ``modulus`` is ``None`` for the rationals (elements are ``Fraction``) and a
    prime ``p`` for F_p (elements are ``int`` residues in ``[0, p)``).
    """

    modulus: Optional[int] = None

    def __post_init__(self):
        if self.modulus is not None and not is_prime(self.modulus):
            raise ValueError(f"modulus {self.modulus} is not prime")

    @property
    def name(self) -> str:
        return "Q" if self.modulus is None else f"Fp:{self.modulus}"

    def __str__(self) -> str:
        return self.name

    @property
    def zero(self) -> Scalar:
        return Fraction(0) if self.modulus is None else 0

    @property
    def one(self) -> Scalar:
        return Fraction(1) if self.modulus is None else 1

    def __call__(self, value) -> Scalar:
        """Convert an int, Fraction or ``"a/b"`` string into this field."""
        if isinstance(value, str):
            value = Fraction(value)
        if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
            raise TypeError(f"cannot convert {value!r} to a field element")
        p = self.modulus
        if p is None:
            return Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator % p == 0:
                raise CoefficientError(
                    f"{value} is not representable in F_{p}: denominator divisible by {p}"
                )
            return value.numerator * pow(value.denominator, -1, p) % p
        return value % p

    def add(self, a: Scalar, b: Scalar) -> Scalar:
        return a + b if self.modulus is None else (a + b) % self.modulus

    def sub(self, a: Scalar, b: Scalar) -> Scalar:
        return a - b if self.modulus is None else (a - b) % self.modulus

    def mul(self, a: Scalar, b: Scalar) -> Scalar:
        return a * b if self.modulus is None else a * b % self.modulus

    def neg(self, a: Scalar) -> Scalar:
        return -a if self.modulus is None else -a % self.modulus

    def inv(self, a: Scalar) -> Scalar:
        if not a:
            raise ZeroDivisionError("inverse of zero")
        if self.modulus is None:
            return 1 / a
        return pow(a, -1, self.modulus)

    def div(self, a: Scalar, b: Scalar) -> Scalar:
        return self.mul(a, self.inv(b))

    def format(self, a: Scalar) -> str:
        return str(a)


QQ = Field()


def GF(p: int) -> Field:
    return Field(p)


def parse_field(text: str) -> Field:
    """Parse ``Q`` or ``Fp:<prime>``."""
    text = text.strip()
    if text in ("Q", "QQ"):
        return QQ
    if text.startswith("Fp:"):
        try:
            p = int(text[3:])
        except ValueError:
            raise ValueError(f"bad field descriptor {text!r}") from None
        return Field(p)
    raise ValueError(f"bad field descriptor {text!r} (expected Q or Fp:<prime>)")
