"""Exact scalar fields: the rationals and prime fields GF(p).

Every value is a :class:`Scalar` tagged with its :class:`FieldDescriptor`.
Values are kept canonical (lowest-terms fractions, residues in ``[0, p)``)
so equality is structural everywhere downstream.
"""

from __future__ import annotations

import enum
import math
import operator
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .errors import DivisionByZero, FieldMismatch, ParseError

MAX_MODULUS = 2**31

_SCALAR_RE = re.compile(r"(-?[0-9]+)(?:/([0-9]+))?")


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, math.isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


class FieldKind(enum.Enum):
    RATIONAL = "rational"
    PRIME = "prime"


@dataclass(frozen=True)
class FieldDescriptor:
    kind: FieldKind
    modulus: int | None = None

    def __post_init__(self):
        if self.kind is FieldKind.RATIONAL:
            if self.modulus is not None:
                raise ValueError("the rational field takes no modulus")
            return
        p = self.modulus
        if not isinstance(p, int) or p < 2:
            raise ValueError(f"modulus must be an integer >= 2, got {p!r}")
        if p > MAX_MODULUS:
            raise ValueError(f"modulus {p} exceeds 2**31")
        if not is_prime(p):
            raise ValueError(f"modulus {p} is not prime")

    @classmethod
    def rational(cls) -> FieldDescriptor:
        return cls(FieldKind.RATIONAL)

    @classmethod
    def gf(cls, p: int) -> FieldDescriptor:
        return cls(FieldKind.PRIME, p)

    @classmethod
    def from_name(cls, name: str) -> FieldDescriptor:
        """Parse ``"rational"`` or ``"gf:<p>"``."""
        if name == "rational":
            return cls.rational()
        if name.startswith("gf:") and name[3:].isdigit():
            return cls.gf(int(name[3:]))
        raise ValueError(f"unknown field {name!r}; use 'rational' or 'gf:<p>'")

    @property
    def name(self) -> str:
        if self.kind is FieldKind.RATIONAL:
            return "rational"
        return f"gf:{self.modulus}"

    @property
    def characteristic(self) -> int:
        return 0 if self.kind is FieldKind.RATIONAL else self.modulus

    def __repr__(self):
        return f"FieldDescriptor({self.name})"

    def _canon(self, value):
        if self.kind is FieldKind.RATIONAL:
            return Fraction(value)
        if isinstance(value, Fraction):
            num = value.numerator % self.modulus
            den = value.denominator % self.modulus
            if den == 0:
                raise DivisionByZero(f"{value} has no image in GF({self.modulus})")
            return num * pow(den, -1, self.modulus) % self.modulus
        return int(value) % self.modulus

    def __call__(self, value) -> Scalar:
        """Coerce an int, Fraction, string or Scalar of this field."""
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldMismatch(f"{value.field.name} scalar given to {self.name}")
            return value
        if isinstance(value, str):
            return parse_scalar(value, self)
        return Scalar(self, self._canon(value))

    @cached_property
    def zero(self) -> Scalar:
        return Scalar(self, self._canon(0))

    @cached_property
    def one(self) -> Scalar:
        return Scalar(self, self._canon(1))


RATIONAL = FieldDescriptor.rational()


class Scalar:
    """Immutable element of a :class:`FieldDescriptor`.

    Plain ints on either side of an arithmetic operator are coerced into
    the scalar's field.
    """

    __slots__ = ("field", "value")

    def __init__(self, field: FieldDescriptor, value):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    def _coerce(self, other) -> Scalar:
        if type(other) is Scalar:
            if other.field is self.field or other.field == self.field:
                return other
            raise FieldMismatch(
                f"cannot combine {self.field.name} and {other.field.name}"
            )
        if isinstance(other, (int, Fraction)):
            return self.field(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        p = self.field.modulus
        v = self.value + o.value
        return _new(self.field, v if p is None else v % p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        p = self.field.modulus
        v = self.value - o.value
        return _new(self.field, v if p is None else v % p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        p = self.field.modulus
        v = self.value * o.value
        return _new(self.field, v if p is None else v % p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * scalar_inverse(o)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * scalar_inverse(self)

    def __neg__(self):
        p = self.field.modulus
        return _new(self.field, -self.value if p is None else -self.value % p)

    def __pos__(self):
        return self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return scalar_inverse(self) ** -k
        if self.field.kind is FieldKind.PRIME:
            return Scalar(self.field, pow(self.value, k, self.field.modulus))
        return Scalar(self.field, self.value**k)

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        if type(other) is Scalar:
            return self.value == other.value and (
                other.field is self.field or other.field == self.field
            )
        if isinstance(other, (int, Fraction)):
            try:
                return self.value == self.field._canon(other)
            except DivisionByZero:
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"Scalar({self.field.name}, {render(self)})"

    def is_zero(self) -> bool:
        return self.value == 0


_OPS = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


def _new(field: FieldDescriptor, value) -> Scalar:
    s = object.__new__(Scalar)
    object.__setattr__(s, "field", field)
    object.__setattr__(s, "value", value)
    return s


def scalar_arith(a: Scalar, b: Scalar, op: str) -> Scalar:
    """Exact ``a <op> b`` for ``op`` in add, sub, mul, div."""
    if a.field != b.field:
        raise FieldMismatch(f"cannot combine {a.field.name} and {b.field.name}")
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None
    return fn(a, b)


def scalar_inverse(a: Scalar) -> Scalar:
    if a.value == 0:
        raise DivisionByZero("zero has no multiplicative inverse")
    f = a.field
    if f.kind is FieldKind.RATIONAL:
        return _new(f, 1 / a.value)
    return _new(f, pow(a.value, -1, f.modulus))


def parse_scalar(text: str, field: FieldDescriptor) -> Scalar:
    """Parse ``[-]digits[/digits]`` into ``field``.

    Over GF(p) the slash means field division, so ``"1/3"`` over GF(5)
    is 2. A zero denominator raises :class:`DivisionByZero`.
    """
    m = _SCALAR_RE.fullmatch(text)
    if m is None:
        raise ParseError(f"malformed scalar {text!r}")
    num = int(m.group(1))
    den_text = m.group(2)
    if den_text is None:
        return field(num)
    den = int(den_text)
    if den == 0:
        raise DivisionByZero(f"zero denominator in {text!r}")
    if den_text[0] == "0":
        raise ParseError(f"denominator with leading zero in {text!r}")
    return field(num) / field(den)


def render(a: Scalar) -> str:
    v = a.value
    if a.field.kind is FieldKind.PRIME:
        return str(v)
    if v.denominator == 1:
        return str(v.numerator)
    return f"{v.numerator}/{v.denominator}"
