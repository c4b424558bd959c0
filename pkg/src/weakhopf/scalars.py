"""Exact ground-field arithmetic.

Every algebraic identity in this package is decided by exact equality of
scalars, so the only supported fields are the rationals (arbitrary-precision
``fractions.Fraction``) and prime fields GF(p).  All objects carry their
field; combining values over different fields raises :class:`FieldMismatch`.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DivisionByZero, FieldMismatch


class GFElement:
    """An element of GF(p), stored as the canonical representative in [0, p)."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _lift(self, other):
        if isinstance(other, GFElement):
            if other.p != self.p:
                raise FieldMismatch(f"GF({self.p}) vs GF({other.p})")
            return other
        if isinstance(other, int):
            return GFElement(other, self.p)
        raise FieldMismatch(f"cannot mix GF({self.p}) with {type(other).__name__}")

    def __add__(self, other):
        other = self._lift(other)
        return GFElement(self.value + other.value, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        return GFElement(self.value - other.value, self.p)

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        return GFElement(self.value * other.value, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        if other.value == 0:
            raise DivisionByZero(f"division by zero in GF({self.p})")
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def __neg__(self):
        return GFElement(-self.value, self.p)

    def inverse(self) -> "GFElement":
        if self.value == 0:
            raise DivisionByZero(f"0 has no inverse in GF({self.p})")
        return GFElement(pow(self.value, self.p - 2, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, GFElement):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"{self.value} mod {self.p}"


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class Field:
    """A ground field: scalar factory plus the few operations that are not
    expressible through the scalar's own operators."""

    characteristic: int

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def from_int(self, n: int):
        raise NotImplementedError

    def coerce(self, x):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def parse(self, s: str):
        raise NotImplementedError

    def fmt(self, a) -> str:
        raise NotImplementedError

    def char_divides(self, n: int) -> bool:
        """True iff the field characteristic divides n (char 0 divides nothing)."""
        if n < 1:
            raise ValueError("n must be a positive integer")
        return self.characteristic != 0 and n % self.characteristic == 0


class RationalField(Field):
    characteristic = 0

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def from_int(self, n: int):
        return Fraction(n)

    def coerce(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, str):
            return self.parse(x)
        raise FieldMismatch(f"cannot interpret {x!r} as a rational")

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("0 has no inverse in Q")
        return 1 / Fraction(a)

    def parse(self, s: str):
        return Fraction(s.strip())

    def fmt(self, a) -> str:
        return str(Fraction(a))

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "Q"


class PrimeField(Field):
    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p

    def zero(self):
        return GFElement(0, self.p)

    def one(self):
        return GFElement(1, self.p)

    def from_int(self, n: int):
        return GFElement(n, self.p)

    def coerce(self, x):
        if isinstance(x, GFElement):
            if x.p != self.p:
                raise FieldMismatch(f"GF({x.p}) element in GF({self.p}) context")
            return x
        if isinstance(x, int):
            return GFElement(x, self.p)
        if isinstance(x, str):
            return self.parse(x)
        raise FieldMismatch(f"cannot interpret {x!r} as a GF({self.p}) element")

    def inv(self, a):
        return self.coerce(a).inverse()

    def parse(self, s: str):
        s = s.strip()
        if s.endswith(f"mod {self.p}"):
            s = s[: -len(f"mod {self.p}")].strip()
        return GFElement(int(s), self.p)

    def fmt(self, a) -> str:
        return str(self.coerce(a).value)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = RationalField()


def field_from_name(name: str) -> Field:
    """Parse a field spec string: "Q" or "Fp:<p>" (also accepts "GF(p)")."""
    name = name.strip()
    if name in ("Q", "QQ", "rational"):
        return QQ
    if name.startswith("Fp:"):
        return PrimeField(int(name[3:]))
    if name.startswith("GF(") and name.endswith(")"):
        return PrimeField(int(name[3:-1]))
    raise ValueError(f"unknown field spec {name!r}")


def field_name(field: Field) -> str:
    if isinstance(field, RationalField):
        return "Q"
    if isinstance(field, PrimeField):
        return f"Fp:{field.p}"
    raise ValueError(f"unknown field {field!r}")


def _same_field_of(a, b):
    a_gf = isinstance(a, GFElement)
    b_gf = isinstance(b, GFElement)
    if a_gf != b_gf or (a_gf and b_gf and a.p != b.p):
        raise FieldMismatch(f"cannot combine {a!r} and {b!r}")


def add(a, b):
    _same_field_of(a, b)
    return a + b


def sub(a, b):
    _same_field_of(a, b)
    return a - b


def mul(a, b):
    _same_field_of(a, b)
    return a * b


def div(a, b):
    _same_field_of(a, b)
    if not b:
        raise DivisionByZero("division by zero")
    return a / b


def char_divides(field: Field, n: int) -> bool:
    return field.char_divides(n)
