"""Candidate determinant functionals and residual checks against them.

A functional D takes an n-tuple of vectors in F^dim to a scalar. The
residual of the defining identity for an (n+1)-tuple (v_1, ..., v_n, b) is

    D(v_1, ..., v_n) * b - sum_k D(v_1, ..., b, ..., v_n) * v_k

with b in slot k of the k-th term. Residuals are returned as exact
values, never booleans.

Descriptor text grammar::

    det:<n> | scaled:<c>:<inner> | lifted:<inner> | xminusy | xy
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Any

from .determinant import det_elimination
from .errors import (
    ArityMismatch,
    DimensionMismatch,
    FieldMismatch,
    IndexOutOfRange,
    NoNonvanishingTuple,
    NotProportional,
    ParseError,
)
from .field import RATIONAL, FieldDescriptor, Scalar, parse_scalar
from .linalg import Matrix, Vector, VecTuple
from .sampling import SplitMix64, random_scalar, random_tuple, random_vector


class DetFunctional:
    """Base class for a function D: V^arity -> F with V = F^dim.

    Subclasses implement ``_value`` on validated vectors.
    """

    arity: int
    dim: int
    field: FieldDescriptor

    def __call__(self, t) -> Scalar:
        return evaluate(self, t)

    def _value(self, vectors: tuple) -> Scalar:
        raise NotImplementedError

    def descriptor(self) -> str:
        raise NotImplementedError


@dataclass(frozen=True)
class StandardDet(DetFunctional):
    n: int
    field: FieldDescriptor = RATIONAL

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("StandardDet needs n >= 1")

    @property
    def arity(self):
        return self.n

    @property
    def dim(self):
        return self.n

    def _value(self, vectors):
        if self.n == 1:
            return vectors[0].entries[0]
        return det_elimination(Matrix(vectors, self.field))

    def descriptor(self):
        return f"det:{self.n}"


@dataclass(frozen=True)
class Scaled(DetFunctional):
    c: Scalar
    inner: DetFunctional

    def __post_init__(self):
        c = self.inner.field(self.c)
        if c.is_zero():
            raise ValueError("scaling constant must be nonzero")
        object.__setattr__(self, "c", c)

    @property
    def arity(self):
        return self.inner.arity

    @property
    def dim(self):
        return self.inner.dim

    @property
    def field(self):
        return self.inner.field

    def _value(self, vectors):
        return self.c * self.inner._value(vectors)

    def descriptor(self):
        return f"scaled:{self.c}:{self.inner.descriptor()}"


@dataclass(frozen=True)
class Lifted(DetFunctional):
    """Extension of ``inner`` from V^n to (F x V)^(n+1).

    D'(w_1, ..., w_{n+1}) = sum_i (-1)**i * head(w_i) * D(tail(w_j) for j != i)
    with head the first coordinate and tail the remaining ones.
    """

    inner: DetFunctional

    @property
    def arity(self):
        return self.inner.arity + 1

    @property
    def dim(self):
        return self.inner.dim + 1

    @property
    def field(self):
        return self.inner.field

    def _value(self, vectors):
        heads = [v.entries[0] for v in vectors]
        tails = [Vector._raw(v.entries[1:], self.field) for v in vectors]
        total = self.field.zero
        for i, h in enumerate(heads):
            if h.is_zero():
                continue
            term = h * self.inner._value(tuple(tails[:i] + tails[i + 1 :]))
            total = total - term if i % 2 else total + term
        return total

    def descriptor(self):
        return f"lifted:{self.inner.descriptor()}"


@dataclass(frozen=True)
class PathologicalXminusY(DetFunctional):
    """D(x, y) = x - y when both are nonzero, else 0, on V = F."""

    field: FieldDescriptor = RATIONAL
    arity = 2
    dim = 1

    def _value(self, vectors):
        x, y = vectors[0].entries[0], vectors[1].entries[0]
        if x.is_zero() or y.is_zero():
            return self.field.zero
        return x - y

    def descriptor(self):
        return "xminusy"


@dataclass(frozen=True)
class ProductXY(DetFunctional):
    """D(x, y) = x * y on V = F. Bilinear and symmetric; not a determinant."""

    field: FieldDescriptor = RATIONAL
    arity = 2
    dim = 1

    def _value(self, vectors):
        return vectors[0].entries[0] * vectors[1].entries[0]

    def descriptor(self):
        return "xy"


def parse_functional(text: str, field: FieldDescriptor = RATIONAL) -> DetFunctional:
    if text == "xminusy":
        return PathologicalXminusY(field)
    if text == "xy":
        return ProductXY(field)
    if text.startswith("det:"):
        arg = text[4:]
        if not arg.isdigit() or int(arg) < 1:
            raise ParseError(f"bad arity in {text!r}")
        return StandardDet(int(arg), field)
    if text.startswith("lifted:"):
        return Lifted(parse_functional(text[7:], field))
    if text.startswith("scaled:"):
        c_text, sep, rest = text[7:].partition(":")
        if not sep:
            raise ParseError(f"missing inner functional in {text!r}")
        c = parse_scalar(c_text, field)
        if c.is_zero():
            raise ParseError(f"scaling constant must be nonzero in {text!r}")
        return Scaled(c, parse_functional(rest, field))
    raise ParseError(f"unknown functional descriptor {text!r}")


def _coerce_tuple(f: DetFunctional, t) -> VecTuple:
    if not isinstance(t, VecTuple):
        t = VecTuple(t, f.field, f.dim)
    if t.field != f.field:
        raise FieldMismatch(f"{t.field.name} tuple for a {f.field.name} functional")
    if t.arity != f.arity:
        raise ArityMismatch(f"functional takes {f.arity} vectors, got {t.arity}")
    if t.dim != f.dim:
        raise DimensionMismatch(f"functional acts on F^{f.dim}, got F^{t.dim}")
    return t


def _coerce_vector(f: DetFunctional, b) -> Vector:
    if not isinstance(b, Vector):
        b = Vector(b if isinstance(b, (list, tuple)) else [b], f.field)
    if b.field != f.field:
        raise FieldMismatch(f"{b.field.name} vector for a {f.field.name} functional")
    if b.dim != f.dim:
        raise DimensionMismatch(f"functional acts on F^{f.dim}, got F^{b.dim}")
    return b


def evaluate(f: DetFunctional, t) -> Scalar:
    t = _coerce_tuple(f, t)
    return f._value(t.vectors)


def main_equation_residual(f: DetFunctional, t, b) -> Vector:
    t = _coerce_tuple(f, t)
    b = _coerce_vector(f, b)
    residual = b * f._value(t.vectors)
    for k, v in enumerate(t.vectors):
        coeff = f._value(t.replace(k, b).vectors)
        if not coeff.is_zero():
            residual = residual - v * coeff
    return residual


def multilinearity_residuals(f: DetFunctional, t, k: int, w, s) -> tuple[Scalar, Scalar]:
    """(additivity residual, homogeneity residual) in slot ``k``."""
    t = _coerce_tuple(f, t)
    w = _coerce_vector(f, w)
    s = f.field(s)
    if not 0 <= k < f.arity:
        raise IndexOutOfRange(f"slot {k} outside arity {f.arity}")
    v = t[k]
    base = f._value(t.vectors)
    additivity = (
        f._value(t.replace(k, v + w).vectors)
        - base
        - f._value(t.replace(k, w).vectors)
    )
    homogeneity = f._value(t.replace(k, v * s).vectors) - s * base
    return additivity, homogeneity


def antisymmetry_residual(f: DetFunctional, t, i: int, j: int) -> Scalar:
    """f(t) + f(t with slots i and j swapped)."""
    t = _coerce_tuple(f, t)
    if i == j:
        raise IndexOutOfRange("antisymmetry needs two distinct slots")
    for idx in (i, j):
        if not 0 <= idx < f.arity:
            raise IndexOutOfRange(f"slot {idx} outside arity {f.arity}")
    return f._value(t.vectors) + f._value(t.swap(i, j).vectors)


@dataclass(frozen=True)
class Witness:
    trial: int
    inputs: dict[str, Any]
    residual: Any


@dataclass(frozen=True)
class ResidualReport:
    """Outcome of a seeded sampling run; ``witness is None`` means all residuals were zero."""

    property: str
    trials_run: int
    seed: int
    witness: Witness | None = None
    skipped: bool = dc_field(default=False)

    @property
    def passed(self) -> bool:
        return self.witness is None


def _is_zero(r) -> bool:
    if isinstance(r, tuple):
        return all(x.is_zero() for x in r)
    return r.is_zero()


def _run(name, f, trials, seed, make_instance) -> ResidualReport:
    if trials < 1:
        raise ValueError("trials must be >= 1")
    for trial in range(trials):
        rng = SplitMix64.for_trial(seed, trial)
        inputs, residual = make_instance(rng)
        if not _is_zero(residual):
            return ResidualReport(name, trial + 1, seed, Witness(trial, inputs, residual))
    return ResidualReport(name, trials, seed)


def verify_main_equation(f: DetFunctional, trials: int = 200, seed: int = 0) -> ResidualReport:
    def instance(rng):
        t = random_tuple(f.field, f.arity, f.dim, rng)
        b = random_vector(f.field, f.dim, rng)
        return {"t": t, "b": b}, main_equation_residual(f, t, b)

    return _run("main_equation", f, trials, seed, instance)


def verify_multilinearity(f: DetFunctional, trials: int = 200, seed: int = 0) -> ResidualReport:
    def instance(rng):
        t = random_tuple(f.field, f.arity, f.dim, rng)
        k = rng.randint(0, f.arity - 1)
        w = random_vector(f.field, f.dim, rng)
        s = random_scalar(f.field, rng)
        return {"t": t, "k": k, "w": w, "s": s}, multilinearity_residuals(f, t, k, w, s)

    return _run("multilinearity", f, trials, seed, instance)


def verify_antisymmetry(f: DetFunctional, trials: int = 200, seed: int = 0) -> ResidualReport:
    if f.arity < 2:
        return ResidualReport("antisymmetry", 0, seed, skipped=True)

    def instance(rng):
        t = random_tuple(f.field, f.arity, f.dim, rng)
        i = rng.randint(0, f.arity - 1)
        j = rng.randint(0, f.arity - 2)
        if j >= i:
            j += 1
        return {"t": t, "i": i, "j": j}, antisymmetry_residual(f, t, i, j)

    return _run("antisymmetry", f, trials, seed, instance)


def uniqueness_constant(
    d1: DetFunctional, d2: DetFunctional, trials: int = 100, seed: int = 0
) -> Scalar:
    """Recover c with d2 = c * d1, checking the ratio on every sampled tuple.

    The first sampled tuple where d1 does not vanish fixes c; every later
    tuple must satisfy d2(T) == c * d1(T) or :class:`NotProportional` is
    raised.
    """
    if (d1.arity, d1.dim, d1.field) != (d2.arity, d2.dim, d2.field):
        raise ArityMismatch("functionals differ in arity, dimension or field")
    c = None
    for trial in range(trials):
        rng = SplitMix64.for_trial(seed, trial)
        t = random_tuple(d1.field, d1.arity, d1.dim, rng)
        v1, v2 = d1._value(t.vectors), d2._value(t.vectors)
        if c is None:
            if not v1.is_zero():
                c = v2 / v1
            continue
        if v2 != c * v1:
            raise NotProportional(c, t, v1, v2)
    if c is None:
        raise NoNonvanishingTuple(f"d1 vanished on all {trials} sampled tuples")
    return c


PROPERTIES = ("main_equation", "multilinearity", "antisymmetry")


def classification(f: DetFunctional) -> dict[str, bool | None]:
    """Which properties ``f`` is documented to satisfy; None means unclassified.

    Standard determinants, their nonzero multiples and their lifts satisfy
    all three. ``xminusy`` satisfies the main equation and antisymmetry but
    is not multilinear (over GF(2) it is identically zero, hence trivially
    multilinear). ``xy`` is bilinear but fails the main equation, and is
    antisymmetric only in characteristic 2.
    """
    if isinstance(f, StandardDet):
        return dict.fromkeys(PROPERTIES, True)
    if isinstance(f, Scaled):
        return classification(f.inner)
    if isinstance(f, Lifted):
        inner = classification(f.inner)
        if all(v is True for v in inner.values()):
            return inner
        return dict.fromkeys(PROPERTIES, None)
    char2 = f.field.characteristic == 2
    if isinstance(f, PathologicalXminusY):
        return {"main_equation": True, "multilinearity": char2, "antisymmetry": True}
    if isinstance(f, ProductXY):
        return {"main_equation": False, "multilinearity": True, "antisymmetry": char2}
    return dict.fromkeys(PROPERTIES, None)
