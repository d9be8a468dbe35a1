"""Ideal tests, generated ideals, ideal brackets and colon subspaces."""

from __future__ import annotations

from functools import cached_property
from typing import Sequence

from .algebra import GradedLieAlgebra, bracket, homogeneous_split, is_homogeneous
from .linalg import (
    DimensionError,
    Subspace,
    Vector,
    canonicalize,
    full_subspace,
    join,
    kernel,
    member,
    zero_subspace,
)


class NotAnIdealError(ValueError):
    pass


def _check(L: GradedLieAlgebra, S: Subspace):
    if S.field != L.field or S.ambient_dim != L.dim:
        raise DimensionError(f"subspace of {S.field}^{S.ambient_dim} given for {L.name}")


def is_ideal(L: GradedLieAlgebra, S: Subspace) -> bool:
    _check(L, S)
    return all(member(S, bracket(L, s, e)) for s in S.rows for e in L.basis())


def is_graded_subspace(L: GradedLieAlgebra, S: Subspace) -> bool:
    _check(L, S)
    return all(member(S, c) for r in S.rows for c in homogeneous_split(L, r).values())


class IdealHandle:
    """A subspace of an algebra with lazily computed ideal/graded flags."""

    def __init__(self, algebra: GradedLieAlgebra, space: Subspace, *, is_ideal: bool | None = None,
                 is_graded: bool | None = None, iterations: int | None = None):
        _check(algebra, space)
        self.algebra = algebra
        self.space = space
        self.iterations = iterations
        if is_ideal is not None:
            self.__dict__["is_ideal"] = is_ideal
        if is_graded is not None:
            self.__dict__["is_graded"] = is_graded

    @cached_property
    def is_ideal(self) -> bool:
        return is_ideal(self.algebra, self.space)

    @cached_property
    def is_graded(self) -> bool:
        return is_graded_subspace(self.algebra, self.space)

    @property
    def dim(self) -> int:
        return self.space.dim

    def __contains__(self, v) -> bool:
        return member(self.space, v)

    def __le__(self, other) -> bool:
        return self.space <= as_space(other)

    def __eq__(self, other):
        if isinstance(other, IdealHandle):
            return self.space == other.space
        if isinstance(other, Subspace):
            return self.space == other
        return NotImplemented

    def __hash__(self):
        return hash(self.space)

    def __repr__(self):
        return f"IdealHandle({self.algebra.name}, {self.algebra.format_subspace(self.space)})"


def as_space(x) -> Subspace:
    return x.space if isinstance(x, IdealHandle) else x


def handle(L: GradedLieAlgebra, x) -> IdealHandle:
    return x if isinstance(x, IdealHandle) else IdealHandle(L, x)


def zero_ideal(L: GradedLieAlgebra) -> IdealHandle:
    return IdealHandle(L, zero_subspace(L.field, L.dim), is_ideal=True, is_graded=True)


def full_ideal(L: GradedLieAlgebra) -> IdealHandle:
    return IdealHandle(L, full_subspace(L.field, L.dim), is_ideal=True, is_graded=True)


def generated_ideal(L: GradedLieAlgebra, gens: Sequence[Sequence]) -> IdealHandle:
    """Smallest ideal containing ``gens``, as the fixpoint of W <- W + [W, L]."""
    gens = [L.vector(g) for g in gens]
    W = canonicalize(L.field, L.dim, gens)
    steps = 0
    while True:
        step = canonicalize(L.field, L.dim, [bracket(L, w, e) for w in W.rows for e in L.basis()])
        nxt = join(W, step)
        if nxt == W:
            break
        W = nxt
        steps += 1
    graded = True if all(is_homogeneous(L, g) or not any(g) for g in gens) else None
    return IdealHandle(L, W, is_ideal=True, is_graded=graded, iterations=steps)


def _require_ideal(L, I):
    h = handle(L, I)
    if not h.is_ideal:
        raise NotAnIdealError(f"{L.format_subspace(h.space)} is not an ideal of {L.name}")
    return h


def ideal_bracket(L: GradedLieAlgebra, I, J) -> IdealHandle:
    """[I, J]: span of brackets of basis rows; an ideal by the Jacobi identity."""
    I, J = _require_ideal(L, I), _require_ideal(L, J)
    S = canonicalize(L.field, L.dim, [bracket(L, a, b) for a in I.space.rows for b in J.space.rows])
    graded = True if (I.is_graded and J.is_graded) else None
    return IdealHandle(L, S, is_ideal=True, is_graded=graded)


def derived_ideal(L: GradedLieAlgebra, H=None) -> IdealHandle:
    H = full_ideal(L) if H is None else H
    return ideal_bracket(L, H, H)


def colon(L: GradedLieAlgebra, I, J) -> IdealHandle:
    """(I : J) = {y : [y, w] in I for w in J}.

    ``J`` may be an ideal (handle or subspace) or a single vector.  For a
    single vector the result need not be an ideal; its flag is computed.
    """
    I = _require_ideal(L, I)
    if isinstance(J, (IdealHandle, Subspace)):
        J = _require_ideal(L, J)
        ws, second_is_ideal = list(J.space.rows), True
    else:
        ws, second_is_ideal = [L.vector(J)], False
    rows = []
    for w in ws:
        images = [I.space.reduce(bracket(L, e, w)) for e in L.basis()]
        rows.extend(tuple(img[k] for img in images) for k in range(L.dim))
    S = canonicalize(L.field, L.dim, kernel(L.field, rows, L.dim)) if rows else full_subspace(L.field, L.dim)
    return IdealHandle(L, S, is_ideal=True if second_is_ideal else None)
