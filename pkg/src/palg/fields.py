"""Exact scalar arithmetic over the rationals and small prime fields.

Scalars are plain Python values: ``fractions.Fraction`` over the rationals
(kept in lowest terms with positive denominator automatically) and ``int``
residues in ``[0, p)`` over GF(p).  A :class:`FieldSpec` bundles the
arithmetic so that nothing downstream ever touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Union

Scalar = Union[int, Fraction]

RATIONALS = "rationals"
PRIME = "prime-field"

MAX_MODULUS = 97


class FieldError(ValueError):
    """Raised for malformed field specifications or scalar values."""


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The coefficient field: either Q or GF(p) for a prime 2 <= p <= 97."""

    kind: str
    modulus: int | None = None

    def __post_init__(self) -> None:
        if self.kind == RATIONALS:
            if self.modulus is not None:
                raise FieldError("rationals take no modulus")
        elif self.kind == PRIME:
            p = self.modulus
            if not isinstance(p, int) or not is_prime(p):
                raise FieldError(f"modulus {p!r} is not prime")
            if p > MAX_MODULUS:
                raise FieldError(f"modulus {p} exceeds the cap {MAX_MODULUS}")
        else:
            raise FieldError(f"unknown field kind {self.kind!r}")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def rationals() -> "FieldSpec":
        return FieldSpec(RATIONALS)

    @staticmethod
    def prime(p: int) -> "FieldSpec":
        return FieldSpec(PRIME, p)

    @staticmethod
    def parse(text: str) -> "FieldSpec":
        """Parse ``"Q"`` or a prime written in decimal."""
        if text == "Q":
            return FieldSpec.rationals()
        if text.isdigit():
            return FieldSpec.prime(int(text))
        raise FieldError(f"unrecognised field {text!r}")

    # -- basic queries -----------------------------------------------------

    @property
    def is_finite(self) -> bool:
        return self.kind == PRIME

    @property
    def characteristic(self) -> int:
        return self.modulus if self.kind == PRIME else 0

    @property
    def order(self) -> int:
        if self.kind != PRIME:
            raise FieldError("the rationals are infinite")
        return self.modulus  # type: ignore[return-value]

    def __str__(self) -> str:
        return "Q" if self.kind == RATIONALS else f"GF({self.modulus})"

    # -- arithmetic --------------------------------------------------------

    def zero(self) -> Scalar:
        return 0 if self.kind == PRIME else Fraction(0)

    def one(self) -> Scalar:
        return 1 if self.kind == PRIME else Fraction(1)

    def from_int(self, k: int) -> Scalar:
        return k % self.modulus if self.kind == PRIME else Fraction(k)

    def coerce(self, value) -> Scalar:
        """Normalise a raw value (int, Fraction, or num/den string) into the field."""
        if isinstance(value, float):
            raise FieldError("floating point values are forbidden")
        if isinstance(value, str):
            return self.parse_scalar(value)
        if isinstance(value, Fraction):
            if self.kind == RATIONALS:
                return value
            num = value.numerator % self.modulus
            den = value.denominator % self.modulus
            if den == 0:
                raise FieldError(f"denominator vanishes in {self}")
            return (num * self.inv(den)) % self.modulus
        if isinstance(value, int):
            return self.from_int(value)
        raise FieldError(f"cannot coerce {value!r} into {self}")

    def add(self, a: Scalar, b: Scalar) -> Scalar:
        return (a + b) % self.modulus if self.kind == PRIME else a + b

    def sub(self, a: Scalar, b: Scalar) -> Scalar:
        return (a - b) % self.modulus if self.kind == PRIME else a - b

    def mul(self, a: Scalar, b: Scalar) -> Scalar:
        return (a * b) % self.modulus if self.kind == PRIME else a * b

    def neg(self, a: Scalar) -> Scalar:
        return (-a) % self.modulus if self.kind == PRIME else -a

    def inv(self, a: Scalar) -> Scalar:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.kind == PRIME:
            return pow(a, self.modulus - 2, self.modulus)
        return Fraction(1) / a

    def div(self, a: Scalar, b: Scalar) -> Scalar:
        return self.mul(a, self.inv(b))

    # -- parsing and formatting --------------------------------------------

    def parse_scalar(self, text: str) -> Scalar:
        """Parse a decimal integer or ``num/den`` string; floats are rejected."""
        text = text.strip()
        if "/" in text:
            num_s, _, den_s = text.partition("/")
            num, den = _parse_int(num_s), _parse_int(den_s)
            if den == 0:
                raise FieldError(f"zero denominator in {text!r}")
            if self.kind == RATIONALS:
                return Fraction(num, den)
            return self.coerce(Fraction(num, den))
        return self.coerce(_parse_int(text))

    def format_scalar(self, a: Scalar) -> str:
        return str(a)

    # -- enumeration (finite fields) ----------------------------------------

    def elements(self) -> Iterator[Scalar]:
        if self.kind != PRIME:
            raise FieldError("cannot enumerate the rationals")
        return iter(range(self.modulus))  # type: ignore[arg-type]


def _parse_int(text: str) -> int:
    text = text.strip()
    sign = 1
    if text.startswith("-"):
        sign, text = -1, text[1:]
    elif text.startswith("+"):
        text = text[1:]
    if not text.isdigit():
        raise FieldError(f"not an integer literal: {text!r}")
    return sign * int(text)
