"""Exact scalar fields: the rationals and prime fields F_p.

Rationals are plain ``fractions.Fraction`` values.  Residues mod p are
instances of :class:`Fp`.  A field object converts raw input (ints,
Fractions, "num/den" strings) into its own scalars and refuses to mix
scalars that belong to a different field.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache


class FieldMismatchError(TypeError):
    """Scalars from two different fields met in one operation."""


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


class Fp:
    """A residue class mod a prime p, stored in [0, p)."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "value", value % p)

    def __setattr__(self, name, value):
        raise AttributeError("Fp is immutable")

    def _coerce(self, other):
        if isinstance(other, Fp):
            if other.p != self.p:
                raise FieldMismatchError(f"F_{self.p} vs F_{other.p}")
            return other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return other
        if isinstance(other, Fraction):
            raise FieldMismatchError(f"F_{self.p} vs rational {other}")
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Fp(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Fp(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Fp(o - self.value, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Fp(self.value * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return Fp(-self.value, self.p)

    def inverse(self) -> "Fp":
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse in F_{self.p}")
        return Fp(pow(self.value, self.p - 2, self.p), self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * Fp(o, self.p).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Fp(o, self.p) * self.inverse()

    def __eq__(self, other):
        if isinstance(other, Fp):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"Fp({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)


class Field:
    """Base class for exact fields.  Calling the field converts a value."""

    name: str
    characteristic: int

    def __call__(self, x):
        raise NotImplementedError

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def contains(self, x) -> bool:
        raise NotImplementedError

    def to_text(self, x) -> str:
        """Serialize a scalar as a "num/den" string."""
        raise NotImplementedError

    def __repr__(self):
        return f"<field {self.name}>"


class RationalField(Field):
    name = "rational"
    characteristic = 0

    def __call__(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, bool):
            raise TypeError("bool is not a field scalar")
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, str):
            return Fraction(x.strip())
        if isinstance(x, Fp):
            raise FieldMismatchError(f"rational vs F_{x.p}")
        raise TypeError(f"cannot convert {x!r} to a rational")

    def contains(self, x):
        return isinstance(x, Fraction)

    def to_text(self, x):
        return f"{x.numerator}/{x.denominator}"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("rational")


class PrimeField(Field):
    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.name = f"fp:{p}"

    def __call__(self, x):
        if isinstance(x, Fp):
            if x.p != self.p:
                raise FieldMismatchError(f"F_{self.p} vs F_{x.p}")
            return x
        if isinstance(x, bool):
            raise TypeError("bool is not a field scalar")
        if isinstance(x, int):
            return Fp(x, self.p)
        if isinstance(x, str):
            x = Fraction(x.strip())
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"denominator of {x} vanishes mod {self.p}")
            return Fp(x.numerator, self.p) / x.denominator
        raise TypeError(f"cannot convert {x!r} to F_{self.p}")

    def contains(self, x):
        return isinstance(x, Fp) and x.p == self.p

    def to_text(self, x):
        return f"{x.value}/1"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("fp", self.p))


QQ = RationalField()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def parse_field(descriptor: str) -> Field:
    """Turn ``"rational"`` or ``"fp:<p>"`` into a field object."""
    d = descriptor.strip().lower()
    if d in ("rational", "q", "qq"):
        return QQ
    if d.startswith("fp:"):
        try:
            p = int(d[3:])
        except ValueError:
            raise ValueError(f"bad prime in field descriptor {descriptor!r}") from None
        return GF(p)
    raise ValueError(f"unknown field descriptor {descriptor!r}")


def field_of(x) -> Field:
    if isinstance(x, Fp):
        return GF(x.p)
    if isinstance(x, (Fraction, int)) and not isinstance(x, bool):
        return QQ
    raise TypeError(f"{x!r} is not a field scalar")
