"""Seeded random scalars, vectors and matrices.

The generator is SplitMix64, so a ``(seed, trial)`` pair names the same
sample on every platform. Rationals are drawn as ``n/d`` with ``n`` in
[-9, 9] and ``d`` in [1, 9]; prime-field elements are uniform residues.
"""

from __future__ import annotations

from .field import FieldDescriptor, FieldKind, Scalar
from .linalg import Matrix, Vector, VecTuple

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15

NUMERATOR_RANGE = (-9, 9)
DENOMINATOR_RANGE = (1, 9)


def mix64(z: int) -> int:
    z &= MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


class SplitMix64:
    def __init__(self, seed: int = 0):
        self.state = seed & MASK64

    @classmethod
    def for_trial(cls, seed: int, trial: int) -> SplitMix64:
        """Independent stream for one trial, so trials can run in any order."""
        return cls(mix64((seed & MASK64) ^ mix64(trial + 1)))

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN_GAMMA) & MASK64
        return mix64(self.state)

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi], by rejection (no modulo bias)."""
        span = hi - lo + 1
        if span <= 0:
            raise ValueError("empty range")
        limit = (1 << 64) - ((1 << 64) % span)
        while True:
            x = self.next_u64()
            if x < limit:
                return lo + x % span


def random_scalar(field: FieldDescriptor, rng: SplitMix64) -> Scalar:
    if field.kind is FieldKind.RATIONAL:
        num = rng.randint(*NUMERATOR_RANGE)
        den = rng.randint(*DENOMINATOR_RANGE)
        return field(num) / field(den)
    return field(rng.randint(0, field.modulus - 1))


def random_nonzero_scalar(field: FieldDescriptor, rng: SplitMix64) -> Scalar:
    while True:
        s = random_scalar(field, rng)
        if not s.is_zero():
            return s


def random_vector(field: FieldDescriptor, dim: int, rng: SplitMix64) -> Vector:
    return Vector([random_scalar(field, rng) for _ in range(dim)], field)


def random_tuple(
    field: FieldDescriptor, arity: int, dim: int, rng: SplitMix64
) -> VecTuple:
    return VecTuple(
        [random_vector(field, dim, rng) for _ in range(arity)], field, dim
    )


def random_matrix(
    field: FieldDescriptor, nrows: int, rng: SplitMix64, ncols: int | None = None
) -> Matrix:
    ncols = nrows if ncols is None else ncols
    return Matrix([random_vector(field, ncols, rng) for _ in range(nrows)], field)
