"""Finite-dimensional G-graded Lie algebras on a homogeneous basis."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from functools import cached_property
from typing import Mapping, Sequence

from .linalg import (
    DimensionError,
    FieldSpec,
    Subspace,
    Vector,
    canonicalize,
    colex_key,
    coordinate_subspace,
    kernel,
    zero_subspace,
)

Degree = tuple


@dataclass(frozen=True)
class AbelianGroup:
    """Z^free_rank + Z/m_1 + ... + Z/m_s, written additively."""

    free_rank: int = 1
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(self.torsion))
        if self.free_rank < 0 or any(m < 2 for m in self.torsion):
            raise ValueError("free_rank must be >= 0 and every torsion modulus >= 2")

    @property
    def rank(self) -> int:
        return self.free_rank + len(self.torsion)

    def normalize(self, g: Sequence[int]) -> Degree:
        g = tuple(int(a) for a in g)
        if len(g) != self.rank:
            raise ValueError(f"degree {g} has {len(g)} coordinates, group needs {self.rank}")
        free, tors = g[: self.free_rank], g[self.free_rank :]
        return free + tuple(a % m for a, m in zip(tors, self.torsion))

    def add(self, g: Degree, h: Degree) -> Degree:
        return self.normalize(tuple(a + b for a, b in zip(g, h)))

    @property
    def zero(self) -> Degree:
        return (0,) * self.rank


@dataclass(frozen=True)
class Violation:
    axiom: str  # ALTERNATING, JACOBI or GRADING
    indices: tuple
    residual: Vector

    def __str__(self):
        return f"{self.axiom} at {self.indices}: residual {list(self.residual)}"


@dataclass(frozen=True)
class GradedLieAlgebra:
    """Structure constants on a homogeneous basis.

    ``brackets`` holds ``(i, j, vector)`` triples with ``i < j`` giving
    ``[e_i, e_j]``; omitted pairs bracket to zero.
    """

    field: FieldSpec
    group: AbelianGroup
    basis_names: tuple[str, ...]
    degrees: tuple[Degree, ...]
    brackets: tuple[tuple[int, int, Vector], ...] = ()
    name: str = dc_field(default="L", compare=False)

    @property
    def dim(self) -> int:
        return len(self.basis_names)

    @cached_property
    def _table(self) -> list[list[Vector]]:
        n = self.dim
        zero = self.field.zero_vector(n)
        table = [[zero] * n for _ in range(n)]
        for i, j, v in self.brackets:
            if i == j:
                continue
            table[i][j] = v
            table[j][i] = self.field.scale(self.field.scalar(-1), v)
        return table

    def basis_vector(self, i: int) -> Vector:
        return self.field.unit_vector(self.dim, i)

    def basis(self) -> list[Vector]:
        return [self.basis_vector(i) for i in range(self.dim)]

    def vector(self, entries) -> Vector:
        v = self.field.vector(entries)
        if len(v) != self.dim:
            raise DimensionError(f"vector of length {len(v)} for a {self.dim}-dimensional algebra")
        return v

    def zero_vector(self) -> Vector:
        return self.field.zero_vector(self.dim)

    @cached_property
    def support(self) -> tuple[Degree, ...]:
        """Degrees with a nonzero component, in order of first basis index."""
        return tuple(dict.fromkeys(self.degrees))

    def indices_of_degree(self, g: Degree) -> tuple[int, ...]:
        return tuple(i for i, d in enumerate(self.degrees) if d == g)

    def format_vector(self, v: Vector) -> str:
        terms = []
        for name, c in zip(self.basis_names, v):
            if c == 0:
                continue
            if c == 1:
                terms.append(name)
            elif self.field.is_finite:
                terms.append(f"{c}{name}")
            else:
                terms.append(f"({c}){name}")
        return "+".join(terms) if terms else "0"

    def format_subspace(self, S: Subspace) -> str:
        if S.is_zero():
            return "0"
        if S.is_full() and S.dim > 0:
            return "L"
        return "span{" + ", ".join(self.format_vector(r) for r in S.rows) + "}"


def build_algebra(
    name: str,
    field: FieldSpec,
    group: AbelianGroup,
    basis: Sequence[tuple[str, Sequence[int]]],
    brackets: Mapping[tuple[int, int], Mapping[int, object]] = {},
) -> GradedLieAlgebra:
    """Build an algebra from sparse bracket data ``{(i, j): {k: coeff}}``."""
    n = len(basis)
    names = tuple(b[0] for b in basis)
    degrees = tuple(group.normalize(b[1]) for b in basis)
    entries = []
    for (i, j), coeffs in sorted(brackets.items()):
        vec = [0] * n
        for k, c in coeffs.items():
            vec[k] = c
        v = field.vector(vec)
        if any(v):
            entries.append((i, j, v))
    return GradedLieAlgebra(field, group, names, degrees, tuple(entries), name)


def bracket(L: GradedLieAlgebra, v: Sequence, w: Sequence) -> Vector:
    n = L.dim
    if len(v) != n or len(w) != n:
        raise DimensionError("bracket arguments must have the algebra's dimension")
    table = L._table
    acc = [0] * n
    for i, a in enumerate(v):
        if not a:
            continue
        row = table[i]
        for j, b in enumerate(w):
            if not b or i == j:
                continue
            ab = a * b
            for k, c in enumerate(row[j]):
                if c:
                    acc[k] += ab * c
    return L.field.vector(acc)


def validate(L: GradedLieAlgebra) -> list[Violation]:
    field, n = L.field, L.dim
    out = []
    seen = set()
    for i, j, v in L.brackets:
        if not (0 <= i < j < n) or (i, j) in seen or len(v) != n:
            out.append(Violation("ALTERNATING", (i, j), tuple(v)))
        seen.add((i, j))
    for i, j, k in itertools.combinations(range(n), 3):
        ei, ej, ek = L.basis_vector(i), L.basis_vector(j), L.basis_vector(k)
        total = field.add(
            field.add(bracket(L, bracket(L, ei, ej), ek), bracket(L, bracket(L, ej, ek), ei)),
            bracket(L, bracket(L, ek, ei), ej),
        )
        if any(total):
            out.append(Violation("JACOBI", (i, j, k), total))
    for i, j, v in L.brackets:
        if not (0 <= i < n and 0 <= j < n) or len(v) != n:
            continue
        target = L.group.add(L.degrees[i], L.degrees[j])
        for k, c in enumerate(v):
            if c != 0 and L.degrees[k] != target:
                out.append(Violation("GRADING", (i, j, k), v))
    return out


def homogeneous_split(L: GradedLieAlgebra, v: Sequence) -> dict[Degree, Vector]:
    v = L.vector(v)
    out = {}
    for g in L.support:
        idx = set(L.indices_of_degree(g))
        comp = tuple(a if k in idx else L.field.scalar(0) for k, a in enumerate(v))
        if any(comp):
            out[g] = comp
    return out


def is_homogeneous(L: GradedLieAlgebra, v: Sequence) -> bool:
    return len(homogeneous_split(L, v)) == 1


def graded_component(L: GradedLieAlgebra, g: Sequence[int]) -> Subspace:
    g = L.group.normalize(g)
    return coordinate_subspace(L.field, L.dim, L.indices_of_degree(g))


def homogeneous_elements(L: GradedLieAlgebra) -> list[Vector]:
    """h(L): all nonzero homogeneous vectors (finite fields), in colex order."""
    out = []
    for g in L.support:
        idx = L.indices_of_degree(g)
        for coeffs in L.field.vectors(len(idx)):
            if not any(coeffs):
                continue
            v = [0] * L.dim
            for k, c in zip(idx, coeffs):
                v[k] = c
            out.append(L.field.vector(v))
    out.sort(key=colex_key)
    return out


def identity_component(L: GradedLieAlgebra) -> GradedLieAlgebra:
    """The subalgebra L_e spanned by basis vectors of degree zero."""
    idx = L.indices_of_degree(L.group.zero)
    pos = {k: a for a, k in enumerate(idx)}
    entries = []
    for i, j, v in L.brackets:
        if i in pos and j in pos:
            w = L.field.vector([v[k] for k in idx])
            if any(w):
                entries.append((pos[i], pos[j], w))
    return GradedLieAlgebra(
        L.field,
        L.group,
        tuple(L.basis_names[k] for k in idx),
        tuple(L.degrees[k] for k in idx),
        tuple(entries),
        f"{L.name}_e",
    )


@dataclass(frozen=True)
class GradedHom:
    """A linear map between graded algebras; ``matrix`` is target_dim x source_dim."""

    source: GradedLieAlgebra
    target: GradedLieAlgebra
    degree_map: tuple[tuple[Degree, Degree], ...]
    matrix: tuple[Vector, ...]

    def __call__(self, v: Sequence) -> Vector:
        v = self.source.vector(v)
        return self.target.field.vector(
            sum(a * b for a, b in zip(row, v)) for row in self.matrix
        )

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.matrix)

    @property
    def rank(self) -> int:
        return canonicalize(self.target.field, self.target.dim, [self.column(j) for j in range(self.source.dim)]).dim

    def is_surjective(self) -> bool:
        return self.rank == self.target.dim

    def check(self) -> list[str]:
        """Problems with the graded and bracket-preserving conditions (empty if none)."""
        problems = []
        dmap = dict(self.degree_map)
        for j in range(self.source.dim):
            g = self.source.degrees[j]
            if g not in dmap:
                problems.append(f"degree {g} has no image degree")
                continue
            img = self.column(j)
            for k, c in enumerate(img):
                if c != 0 and self.target.degrees[k] != dmap[g]:
                    problems.append(f"basis {j} leaves target component {dmap[g]}")
        for i, j in itertools.combinations(range(self.source.dim), 2):
            ei, ej = self.source.basis_vector(i), self.source.basis_vector(j)
            lhs = self(bracket(self.source, ei, ej))
            rhs = bracket(self.target, self(ei), self(ej))
            if lhs != rhs:
                problems.append(f"bracket not preserved on ({i}, {j})")
        return problems


def identity_hom(L: GradedLieAlgebra) -> GradedHom:
    return GradedHom(L, L, tuple((g, g) for g in L.support), tuple(L.basis()))


class QuotientError(ValueError):
    pass


def quotient(L: GradedLieAlgebra, I: Subspace) -> tuple[GradedLieAlgebra, GradedHom]:
    """L/I on the coset basis of non-pivot indices, plus the projection."""
    from .ideals import is_graded_subspace, is_ideal

    if not is_ideal(L, I):
        raise QuotientError("quotient requires an ideal")
    if not is_graded_subspace(L, I):
        raise QuotientError("quotient requires a graded ideal")
    field, n = L.field, L.dim
    keep = [k for k in range(n) if k not in I.pivots]

    def project(v: Vector) -> Vector:
        r = I.reduce(v)
        return tuple(r[k] for k in keep)

    matrix_cols = [project(L.basis_vector(j)) for j in range(n)]
    matrix = tuple(tuple(col[a] for col in matrix_cols) for a in range(len(keep)))
    entries = []
    for a, b in itertools.combinations(range(len(keep)), 2):
        w = project(bracket(L, L.basis_vector(keep[a]), L.basis_vector(keep[b])))
        if any(w):
            entries.append((a, b, w))
    Q = GradedLieAlgebra(
        field,
        L.group,
        tuple(L.basis_names[k] for k in keep),
        tuple(L.degrees[k] for k in keep),
        tuple(entries),
        f"{L.name}/{L.format_subspace(I)}",
    )
    phi = GradedHom(L, Q, tuple((g, g) for g in L.support), matrix)
    return Q, phi


def hom_kernel(phi: GradedHom) -> Subspace:
    rows = [list(r) for r in phi.matrix]
    return canonicalize(phi.source.field, phi.source.dim, kernel(phi.source.field, rows, phi.source.dim))


def restrict_to_indices(S: Subspace, indices: Sequence[int]) -> Subspace:
    """Express a subspace contained in a coordinate subspace in those coordinates."""
    if not S.rows:
        return zero_subspace(S.field, len(indices))
    return canonicalize(S.field, len(indices), [[r[k] for k in indices] for r in S.rows])
