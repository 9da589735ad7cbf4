"""Exact scalar fields: the rationals and prime fields F_p (p < 2^31).

Rational elements are `fractions.Fraction`; prime-field elements are ints in
[0, p). No floats exist anywhere in this package: a single rounding error
would corrupt every rank, and therefore every dimension, computed downstream.
"""
from __future__ import annotations

from fractions import Fraction

from .errors import NotPrime, ParseError

_MAX_PRIME = 2**31


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class Field:
    """The rationals (`Field.rationals()`) or F_p (`Field.prime(p)`)."""

    __slots__ = ("p",)

    def __init__(self, p: int | None):
        if p is not None:
            if not (2 <= p < _MAX_PRIME):
                raise NotPrime(f"p must satisfy 2 <= p < 2^31, got {p}")
            if not _is_prime(p):
                raise NotPrime(f"{p} is not prime")
        self.p = p

    @classmethod
    def rationals(cls) -> "Field":
        return cls(None)

    @classmethod
    def prime(cls, p: int) -> "Field":
        return cls(p)

    @property
    def is_rational(self) -> bool:
        return self.p is None

    def zero(self):
        return Fraction(0) if self.p is None else 0

    def one(self):
        return Fraction(1) if self.p is None else 1

    def coerce(self, x):
        """Coerce an int / Fraction / "a/b" string into a field element."""
        if self.p is None:
            if isinstance(x, Fraction):
                return x
            if isinstance(x, int):
                return Fraction(x)
            if isinstance(x, str):
                try:
                    return Fraction(x)
                except (ValueError, ZeroDivisionError) as exc:
                    raise ParseError(f"bad rational literal {x!r}") from exc
            raise ParseError(f"cannot coerce {x!r} into Q")
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ParseError(f"denominator of {x} vanishes in F_{self.p}")
            return x.numerator * pow(x.denominator, self.p - 2, self.p) % self.p
        if isinstance(x, bool) or not isinstance(x, (int, str)):
            raise ParseError(f"cannot coerce {x!r} into F_{self.p}")
        return int(x) % self.p

    def neg(self, a):
        return -a if self.p is None else (-a) % self.p

    def add(self, a, b):
        return a + b if self.p is None else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.p is None else (a - b) % self.p

    def mul(self, a, b):
        return a * b if self.p is None else (a * b) % self.p

    def inv(self, a):
        if self.p is None:
            if a == 0:
                raise ZeroDivisionError("inverse of 0")
            return 1 / a
        a = a % self.p
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def random(self, rng):
        if self.p is None:
            return Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        return rng.randrange(self.p)

    def random_nonzero(self, rng):
        while True:
            x = self.random(rng)
            if x != self.zero():
                return x

    def show(self, a) -> str | int:
        """Canonical JSON form: "num/den" for Q (den > 0, reduced), int for F_p."""
        if self.p is None:
            return f"{a.numerator}/{a.denominator}"
        return int(a)

    def to_json(self) -> dict:
        if self.p is None:
            return {"kind": "rationals"}
        return {"kind": "prime-field", "p": self.p}

    @classmethod
    def from_json(cls, data: dict) -> "Field":
        kind = data.get("kind")
        if kind == "rationals":
            return cls.rationals()
        if kind == "prime-field":
            return cls.prime(int(data["p"]))
        raise ParseError(f"unknown field kind: {kind!r}")

    def __eq__(self, other):
        return isinstance(other, Field) and self.p == other.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return "QQ" if self.p is None else f"GF({self.p})"


QQ = Field.rationals()
