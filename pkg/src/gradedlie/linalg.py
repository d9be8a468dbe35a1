"""Exact scalars and canonical subspaces of F^n.

Prime-field scalars are plain ints kept in [0, p); rational scalars are
``fractions.Fraction``.  Vectors are tuples.  A :class:`Subspace` stores its
reduced row echelon basis, so two subspaces are equal exactly when their
row tuples are equal.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

MAX_PRIME = 97
MAX_ENUM_DIM = 6

Vector = tuple


class DimensionError(ValueError):
    pass


class UnsupportedFieldError(ValueError):
    pass


class ResourceGuardError(RuntimeError):
    """An exhaustive enumeration would exceed its configured size guard."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, int(n**0.5) + 1))


@dataclass(frozen=True)
class FieldSpec:
    kind: str  # "prime" or "rational"
    p: int | None = None

    def __post_init__(self):
        if self.kind == "prime":
            if not isinstance(self.p, int) or not _is_prime(self.p) or self.p > MAX_PRIME:
                raise ValueError(f"p must be a prime with 2 <= p <= {MAX_PRIME}, got {self.p!r}")
        elif self.kind == "rational":
            if self.p is not None:
                raise ValueError("rational field takes no modulus")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls("prime", p)

    @classmethod
    def rational(cls) -> "FieldSpec":
        return cls("rational")

    @property
    def is_finite(self) -> bool:
        return self.kind == "prime"

    def __str__(self):
        return f"F_{self.p}" if self.is_finite else "Q"

    # scalar arithmetic

    def scalar(self, x) -> int | Fraction:
        """Coerce an int, Fraction or ``"num/den"`` string into this field."""
        if self.kind == "prime":
            if isinstance(x, Fraction):
                return x.numerator * pow(x.denominator, -1, self.p) % self.p
            if isinstance(x, str):
                return self.scalar(Fraction(x))
            return int(x) % self.p
        return Fraction(x)

    def inv(self, x):
        if self.kind == "prime":
            assert x % self.p, "inverse of zero"
            return pow(x, -1, self.p)
        assert x != 0, "inverse of zero"
        return 1 / x

    def reduce(self, x):
        return x % self.p if self.kind == "prime" else x

    def elements(self) -> range:
        if not self.is_finite:
            raise UnsupportedFieldError("the rational field cannot be enumerated")
        return range(self.p)

    # vector arithmetic

    def zero_vector(self, n: int) -> Vector:
        return (self.scalar(0),) * n

    def unit_vector(self, n: int, i: int) -> Vector:
        return tuple(self.scalar(int(k == i)) for k in range(n))

    def vector(self, entries: Iterable) -> Vector:
        return tuple(self.scalar(x) for x in entries)

    def add(self, v: Vector, w: Vector) -> Vector:
        return tuple(self.reduce(a + b) for a, b in zip(v, w))

    def sub(self, v: Vector, w: Vector) -> Vector:
        return tuple(self.reduce(a - b) for a, b in zip(v, w))

    def scale(self, c, v: Vector) -> Vector:
        return tuple(self.reduce(c * a) for a in v)

    def axpy(self, c, v: Vector, w: Vector) -> Vector:
        """Return c*v + w."""
        return tuple(self.reduce(c * a + b) for a, b in zip(v, w))

    def combine(self, coeffs: Sequence, vectors: Sequence[Vector], n: int) -> Vector:
        acc = [0] * n
        for c, v in zip(coeffs, vectors):
            if c:
                for k, a in enumerate(v):
                    if a:
                        acc[k] += c * a
        return tuple(self.reduce(a) if self.kind == "prime" else Fraction(a) for a in acc)

    def vectors(self, n: int) -> Iterator[Vector]:
        """All vectors of F_p^n in colex order (last coordinate most significant)."""
        for rev in itertools.product(self.elements(), repeat=n):
            yield tuple(reversed(rev))


def colex_key(v: Vector) -> tuple:
    """Sort key used for every canonical enumeration order in the package."""
    return tuple(reversed(v))


def rref(field: FieldSpec, rows: Iterable[Vector], ncols: int) -> tuple[tuple[Vector, ...], tuple[int, ...]]:
    """Reduced row echelon form of ``rows``; returns (nonzero rows, pivot columns)."""
    mat = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = field.inv(mat[r][c])
        mat[r] = [field.reduce(inv * a) for a in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [field.reduce(a - f * b) for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return tuple(tuple(row) for row in mat[:r]), tuple(pivots)


def kernel(field: FieldSpec, matrix: Sequence[Sequence], ncols: int) -> list[Vector]:
    """Basis of {y : matrix @ y = 0}; ``matrix`` is given as a list of rows."""
    red, pivots = rref(field, [tuple(r) for r in matrix], ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        y = [field.scalar(0)] * ncols
        y[f] = field.scalar(1)
        for row, pc in zip(red, pivots):
            y[pc] = field.reduce(-row[f])
        basis.append(tuple(y))
    return basis


@dataclass(frozen=True)
class Subspace:
    field: FieldSpec
    ambient_dim: int
    rows: tuple[Vector, ...]

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(i for i, a in enumerate(r) if a != 0) for r in self.rows)

    def reduce(self, v: Vector) -> Vector:
        """Reduce ``v`` modulo the subspace: result is zero on every pivot column."""
        _check_vector(self, v)
        out = v
        for row, pc in zip(self.rows, self.pivots):
            c = out[pc]
            if c != 0:
                out = self.field.axpy(self.field.reduce(-c), row, out)
        return out

    def __contains__(self, v) -> bool:
        return member(self, v)

    def __le__(self, other: "Subspace") -> bool:
        _check_pair(self, other)
        return all(member(other, r) for r in self.rows)

    def __lt__(self, other: "Subspace") -> bool:
        return self.dim < other.dim and self <= other

    def sort_key(self) -> tuple:
        return (self.dim, tuple(colex_key(r) for r in self.rows))

    def is_zero(self) -> bool:
        return not self.rows

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim


def _check_vector(S: Subspace, v: Vector):
    if len(v) != S.ambient_dim:
        raise DimensionError(f"vector of length {len(v)} in ambient dimension {S.ambient_dim}")


def _check_pair(S: Subspace, T: Subspace):
    if S.field != T.field or S.ambient_dim != T.ambient_dim:
        raise DimensionError("subspaces live in different ambient spaces")


def canonicalize(field: FieldSpec, ambient_dim: int, generators: Iterable[Sequence]) -> Subspace:
    gens = []
    for g in generators:
        if len(g) != ambient_dim:
            raise DimensionError(f"generator of length {len(g)} in ambient dimension {ambient_dim}")
        gens.append(field.vector(g))
    rows, _ = rref(field, gens, ambient_dim)
    return Subspace(field, ambient_dim, rows)


def zero_subspace(field: FieldSpec, n: int) -> Subspace:
    return Subspace(field, n, ())


def full_subspace(field: FieldSpec, n: int) -> Subspace:
    return Subspace(field, n, tuple(field.unit_vector(n, i) for i in range(n)))


def coordinate_subspace(field: FieldSpec, n: int, indices: Iterable[int]) -> Subspace:
    return Subspace(field, n, tuple(field.unit_vector(n, i) for i in sorted(set(indices))))


def member(S: Subspace, v: Sequence) -> bool:
    v = S.field.vector(v)
    _check_vector(S, v)
    return not any(S.reduce(v))


def join(S: Subspace, T: Subspace) -> Subspace:
    _check_pair(S, T)
    if T.is_zero() or T <= S:
        return S
    return canonicalize(S.field, S.ambient_dim, S.rows + T.rows)


def meet(S: Subspace, T: Subspace) -> Subspace:
    _check_pair(S, T)
    field, n = S.field, S.ambient_dim
    # coefficients c with sum c_r s_r in T
    cols = [T.reduce(r) for r in S.rows]
    matrix = [tuple(col[k] for col in cols) for k in range(n)]
    coeffs = kernel(field, matrix, S.dim)
    return canonicalize(field, n, [field.combine(c, S.rows, n) for c in coeffs])


def preimage(field: FieldSpec, matrix: Sequence[Sequence], source_dim: int, target: Subspace) -> Subspace:
    """{y in F^source_dim : matrix @ y in target}; ``matrix`` has one row per target coordinate."""
    images = [target.reduce(tuple(matrix[k][j] for k in range(target.ambient_dim))) for j in range(source_dim)]
    rows = [tuple(images[j][k] for j in range(source_dim)) for k in range(target.ambient_dim)]
    return canonicalize(field, source_dim, kernel(field, rows, source_dim))


def gaussian_binomial(n: int, k: int, q: int) -> int:
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def count_subspaces(p: int, n: int) -> int:
    return sum(gaussian_binomial(n, k, p) for k in range(n + 1))


def _rref_matrices(p: int, n: int, k: int) -> Iterator[tuple[Vector, ...]]:
    for pivots in itertools.combinations(range(n), k):
        # free entries: row r, column c > pivots[r] and c not a pivot
        slots = [(r, c) for r in range(k) for c in range(pivots[r] + 1, n) if c not in pivots]
        for values in itertools.product(range(p), repeat=len(slots)):
            mat = [[0] * n for _ in range(k)]
            for r, c in enumerate(pivots):
                mat[r][c] = 1
            for (r, c), a in zip(slots, values):
                mat[r][c] = a
            yield tuple(tuple(row) for row in mat)


def enumerate_subspaces(field: FieldSpec, ambient_dim: int, max_dim: int = MAX_ENUM_DIM) -> list[Subspace]:
    """Every subspace of F_p^ambient_dim once, ordered by dimension then row matrix."""
    if not field.is_finite:
        raise UnsupportedFieldError("subspace enumeration requires a prime field")
    if ambient_dim > max_dim:
        raise ResourceGuardError(f"ambient dimension {ambient_dim} exceeds enumeration guard {max_dim}")
    out = []
    for k in range(ambient_dim + 1):
        layer = [Subspace(field, ambient_dim, rows) for rows in _rref_matrices(field.p, ambient_dim, k)]
        layer.sort(key=Subspace.sort_key)
        out.extend(layer)
    return out
