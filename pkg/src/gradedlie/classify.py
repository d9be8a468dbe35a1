"""Decision procedures for graded prime, semiprime, irreducible and total prime ideals.

Every procedure quantifies over a finite search space (graded ideals, all
ideals, or nonzero homogeneous elements), so all of them need a prime
field.  Negative verdicts carry the first violating tuple in the canonical
enumeration order.

Homogeneous-element quantifiers range over nonzero vectors only.  The
``proper_only`` variant restricts every ideal quantifier to ideals other
than L; element quantifiers then skip x with <x> = L, which keeps the
element criteria equivalent to their ideal-quantified definitions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .algebra import (
    GradedHom,
    GradedLieAlgebra,
    bracket,
    homogeneous_elements,
    identity_component,
    restrict_to_indices,
)
from .ideals import IdealHandle, as_space, colon, generated_ideal, handle, is_graded_subspace, is_ideal
from .linalg import (
    MAX_ENUM_DIM,
    ResourceGuardError,
    Subspace,
    UnsupportedFieldError,
    Vector,
    canonicalize,
    coordinate_subspace,
    count_subspaces,
    enumerate_subspaces,
    full_subspace,
    meet,
    member,
    preimage,
    zero_subspace,
)

MAX_SUBSPACES = 10**5


@dataclass(frozen=True)
class QuantifierVariant:
    proper_only: bool = False

    @property
    def name(self) -> str:
        return "proper" if self.proper_only else "literal"

    @classmethod
    def from_name(cls, name: str) -> "QuantifierVariant":
        if name not in ("literal", "proper"):
            raise ValueError(f"unknown variant {name!r}")
        return cls(name == "proper")


LITERAL = QuantifierVariant(False)
PROPER = QuantifierVariant(True)


@dataclass(frozen=True)
class Verdict:
    holds: bool
    method: str
    witness: dict | None = None
    empty: bool = False
    instances: int = 0

    def __bool__(self):
        return self.holds

    def describe(self, L: GradedLieAlgebra) -> dict[str, str]:
        return describe_witness(L, self.witness or {})


class ClassifyError(ValueError):
    pass


def describe_witness(L: GradedLieAlgebra, witness: dict) -> dict[str, str]:
    out = {}
    for k, v in witness.items():
        if isinstance(v, Subspace):
            out[k] = L.format_subspace(v) if v.ambient_dim == L.dim else _fmt_foreign(v)
        elif isinstance(v, tuple) and len(v) == L.dim:
            out[k] = L.format_vector(v)
        else:
            out[k] = str(v)
    return out


def _fmt_foreign(S: Subspace) -> str:
    return "span{" + ", ".join(str(list(r)) for r in S.rows) + "}" if S.rows else "0"


# enumeration


def _require_finite(L: GradedLieAlgebra):
    if not L.field.is_finite:
        raise UnsupportedFieldError("decision requires a finite field")


@lru_cache(maxsize=None)
def _graded_ideal_spaces(L: GradedLieAlgebra, max_dim: int) -> tuple[Subspace, ...]:
    _require_finite(L)
    if L.dim > max_dim:
        raise ResourceGuardError(f"{L.name} has dimension {L.dim} > guard {max_dim}")
    per_component = []
    for g in L.support:
        idx = L.indices_of_degree(g)
        choices = []
        for W in enumerate_subspaces(L.field, len(idx)):
            rows = []
            for r in W.rows:
                v = [0] * L.dim
                for k, a in zip(idx, r):
                    v[k] = a
                rows.append(tuple(v))
            choices.append(rows)
        per_component.append(choices)
    out = []
    for combo in itertools.product(*per_component):
        S = canonicalize(L.field, L.dim, [r for rows in combo for r in rows])
        if is_ideal(L, S):
            out.append(S)
    out.sort(key=Subspace.sort_key)
    return tuple(out)


@lru_cache(maxsize=None)
def _ideal_spaces(L: GradedLieAlgebra, max_count: int) -> tuple[Subspace, ...]:
    _require_finite(L)
    total = count_subspaces(L.field.p, L.dim)
    if total > max_count:
        raise ResourceGuardError(f"{L.name}: {total} subspaces exceed guard {max_count}")
    return tuple(S for S in enumerate_subspaces(L.field, L.dim, max_dim=L.dim) if is_ideal(L, S))


def enumerate_graded_ideals(L: GradedLieAlgebra, max_dim: int = MAX_ENUM_DIM) -> list[IdealHandle]:
    return [IdealHandle(L, S, is_ideal=True, is_graded=True) for S in _graded_ideal_spaces(L, max_dim)]


def enumerate_ideals(L: GradedLieAlgebra, max_count: int = MAX_SUBSPACES) -> list[IdealHandle]:
    return [IdealHandle(L, S, is_ideal=True) for S in _ideal_spaces(L, max_count)]


@lru_cache(maxsize=None)
def homogeneous(L: GradedLieAlgebra) -> tuple[Vector, ...]:
    _require_finite(L)
    return tuple(homogeneous_elements(L))


@lru_cache(maxsize=None)
def nonzero_vectors(L: GradedLieAlgebra) -> tuple[Vector, ...]:
    _require_finite(L)
    return tuple(v for v in L.field.vectors(L.dim) if any(v))


@lru_cache(maxsize=None)
def gen(L: GradedLieAlgebra, v: Vector) -> Subspace:
    return generated_ideal(L, [v]).space


@lru_cache(maxsize=None)
def bracket_space(L: GradedLieAlgebra, A: Subspace, B: Subspace) -> Subspace:
    return canonicalize(L.field, L.dim, [bracket(L, a, b) for a in A.rows for b in B.rows])


def _bracket_with(L, x: Vector, B: Subspace) -> list[Vector]:
    return [bracket(L, x, b) for b in B.rows]


def _domain(spaces, variant: QuantifierVariant):
    return [S for S in spaces if not (variant.proper_only and S.is_full())]


def _graded_domain(L, variant):
    return _domain(_graded_ideal_spaces(L, MAX_ENUM_DIM), variant)


def _require_graded_ideal(L: GradedLieAlgebra, P) -> Subspace:
    _require_finite(L)
    h = handle(L, P)
    if not h.is_ideal:
        raise ClassifyError(f"{L.format_subspace(h.space)} is not an ideal of {L.name}")
    if not h.is_graded:
        raise ClassifyError(f"{L.format_subspace(h.space)} is not a graded ideal of {L.name}")
    return h.space


def _require_ideal(L: GradedLieAlgebra, P) -> Subspace:
    _require_finite(L)
    h = handle(L, P)
    if not h.is_ideal:
        raise ClassifyError(f"{L.format_subspace(h.space)} is not an ideal of {L.name}")
    return h.space


# prime


def _pair_scan(L, P: Subspace, domain, method) -> Verdict:
    n = 0
    for I in domain:
        for J in domain:
            n += 1
            if bracket_space(L, I, J) <= P and not I <= P and not J <= P:
                return Verdict(False, method, {"I": I, "J": J}, instances=n)
    return Verdict(True, method, instances=n)


def _element_scan(L, P: Subspace, elements, variant, method) -> Verdict:
    n = 0
    for x in elements:
        if member(P, x) or (variant.proper_only and gen(L, x).is_full()):
            continue
        for y in elements:
            if member(P, y):
                continue
            Y = gen(L, y)
            if variant.proper_only and Y.is_full():
                continue
            n += 1
            if all(member(P, w) for w in _bracket_with(L, x, Y)):
                return Verdict(False, method, {"x": x, "y": y}, instances=n)
    return Verdict(True, method, instances=n)


@lru_cache(maxsize=None)
def _graded_prime(L, P: Subspace, method: str, variant: QuantifierVariant) -> Verdict:
    if method == "definition":
        return _pair_scan(L, P, _graded_domain(L, variant), method)
    if method == "element":
        return _element_scan(L, P, homogeneous(L), variant, method)
    if method == "colon":
        n = 0
        for x in homogeneous(L):
            if member(P, x):
                continue
            n += 1
            C = colon(L, P, x).space
            if C != P:
                return Verdict(False, method, {"x": x, "colon": C}, instances=n)
        return Verdict(True, method, instances=n)
    raise ValueError(f"unknown method {method!r}")


def is_graded_prime(L: GradedLieAlgebra, P, method: str = "definition",
                    variant: QuantifierVariant = LITERAL) -> Verdict:
    """Graded primality via the definition, the homogeneous-element criterion
    ``[x, <y>] in P => x in P or y in P``, or the colon criterion ``(P:x) = P``."""
    return _graded_prime(L, _require_graded_ideal(L, P), method, variant)


@lru_cache(maxsize=None)
def _nongraded_prime(L, P: Subspace, method: str, variant: QuantifierVariant) -> Verdict:
    if method == "definition":
        return _pair_scan(L, P, _domain(_ideal_spaces(L, MAX_SUBSPACES), variant), method)
    if method == "element":
        return _element_scan(L, P, nonzero_vectors(L), variant, method)
    raise ValueError(f"unknown method {method!r}")


def is_prime_nongraded(L: GradedLieAlgebra, P, method: str = "definition",
                       variant: QuantifierVariant = LITERAL) -> Verdict:
    P = _require_ideal(L, P)
    if method == "definition":
        _ideal_spaces(L, MAX_SUBSPACES)  # raise the guard before caching
    return _nongraded_prime(L, P, method, variant)


# semiprime and irreducible


@lru_cache(maxsize=None)
def _semiprime(L, Q: Subspace, method: str, variant: QuantifierVariant) -> Verdict:
    n = 0
    if method == "definition":
        for H in _graded_domain(L, variant):
            n += 1
            if bracket_space(L, H, H) <= Q and not H <= Q:
                return Verdict(False, method, {"H": H}, instances=n)
        return Verdict(True, method, instances=n)
    if method == "element":
        for x in homogeneous(L):
            X = gen(L, x)
            if member(Q, x) or (variant.proper_only and X.is_full()):
                continue
            n += 1
            if bracket_space(L, X, X) <= Q:
                return Verdict(False, method, {"x": x}, instances=n)
        return Verdict(True, method, instances=n)
    raise ValueError(f"unknown method {method!r}")


def is_semiprime(L: GradedLieAlgebra, Q, method: str = "definition",
                 variant: QuantifierVariant = LITERAL) -> Verdict:
    return _semiprime(L, _require_graded_ideal(L, Q), method, variant)


@lru_cache(maxsize=None)
def _irreducible(L, N: Subspace, variant: QuantifierVariant) -> Verdict:
    dom = [S for S in _graded_domain(L, variant) if N <= S]
    n = 0
    for H in dom:
        for K in dom:
            n += 1
            if meet(H, K) == N and H != N and K != N:
                return Verdict(False, "definition", {"H": H, "K": K}, instances=n)
    return Verdict(True, "definition", instances=n)


def is_graded_irreducible(L: GradedLieAlgebra, N, variant: QuantifierVariant = LITERAL) -> Verdict:
    return _irreducible(L, _require_graded_ideal(L, N), variant)


# total prime


@lru_cache(maxsize=None)
def _total_prime(L, P: Subspace, method: str) -> Verdict:
    n = 0
    hs = homogeneous(L)
    for x in hs:
        for y in hs:
            n += 1
            if method == "definition":
                if member(P, bracket(L, x, y)) and not member(P, x) and not member(P, y):
                    return Verdict(False, method, {"x": x, "y": y}, instances=n)
            elif method == "generated":
                if gen(L, bracket(L, x, y)) <= P and not gen(L, x) <= P and not gen(L, y) <= P:
                    return Verdict(False, method, {"x": x, "y": y}, instances=n)
            else:
                raise ValueError(f"unknown method {method!r}")
    return Verdict(True, method, instances=n)


def is_total_prime(L: GradedLieAlgebra, P, method: str = "definition") -> Verdict:
    return _total_prime(L, _require_graded_ideal(L, P), method)


@lru_cache(maxsize=None)
def _complement_closed(L, P: Subspace) -> Verdict:
    S = [x for x in homogeneous(L) if not member(P, x)]
    if not S:
        return Verdict(True, "complement", empty=True)
    n = 0
    for x in S:
        for y in S:
            n += 1
            z = bracket(L, x, y)
            # z must be a nonzero homogeneous element outside P
            if not any(z) or member(P, z) or z not in _homogeneous_set(L):
                return Verdict(False, "complement", {"x": x, "y": y}, instances=n)
    return Verdict(True, "complement", instances=n)


@lru_cache(maxsize=None)
def _homogeneous_set(L) -> frozenset:
    return frozenset(homogeneous(L))


def complement_mult_closed(L: GradedLieAlgebra, P) -> Verdict:
    """Whether h(L) - h(P) is closed under the bracket; empty S counts as closed."""
    return _complement_closed(L, _require_graded_ideal(L, P))


# homomorphisms and the identity component


def full_ideal_space(L: GradedLieAlgebra) -> Subspace:
    return full_subspace(L.field, L.dim)


def image_ideal(phi: GradedHom, I) -> IdealHandle:
    I = as_space(I)
    T = phi.target
    return IdealHandle(T, canonicalize(T.field, T.dim, [phi(r) for r in I.rows]))


def preimage_ideal(phi: GradedHom, I) -> IdealHandle:
    S = as_space(I)
    return IdealHandle(phi.source, preimage(phi.source.field, phi.matrix, phi.source.dim, S))


def kernel_ideal(phi: GradedHom) -> IdealHandle:
    return preimage_ideal(phi, zero_subspace(phi.target.field, phi.target.dim))


def require_epimorphism(phi: GradedHom):
    if not phi.is_surjective():
        raise ClassifyError("the map is not surjective, so it is not an epimorphism")


def restrict_identity(L: GradedLieAlgebra, P) -> tuple[GradedLieAlgebra, IdealHandle]:
    P = as_space(P)
    idx = L.indices_of_degree(L.group.zero)
    Le = identity_component(L)
    Pe = restrict_to_indices(meet(P, coordinate_subspace(L.field, L.dim, idx)), idx)
    return Le, IdealHandle(Le, Pe)


# witness re-checking


def witness_reproduces(L: GradedLieAlgebra, kind: str, P, verdict: Verdict,
                       variant: QuantifierVariant = LITERAL) -> bool:
    """Substitute a failing verdict's witness back into the defining condition."""
    P = as_space(P)
    w = verdict.witness or {}
    if kind in ("graded_prime", "prime"):
        if verdict.method == "definition":
            I, J = w["I"], w["J"]
            ok = is_ideal(L, I) and is_ideal(L, J) and (kind == "prime" or (is_graded_subspace(L, I) and is_graded_subspace(L, J)))
            if variant.proper_only:
                ok = ok and not I.is_full() and not J.is_full()
            return ok and bracket_space(L, I, J) <= P and not I <= P and not J <= P
        if verdict.method == "element":
            x, y = w["x"], w["y"]
            return all(member(P, v) for v in _bracket_with(L, x, gen(L, y))) and not member(P, x) and not member(P, y)
        if verdict.method == "colon":
            return colon(L, P, w["x"]).space != P and not member(P, w["x"])
    if kind == "semiprime":
        H = w["H"] if verdict.method == "definition" else gen(L, w["x"])
        return bracket_space(L, H, H) <= P and not H <= P
    if kind == "irreducible":
        H, K = w["H"], w["K"]
        return meet(H, K) == P and H != P and K != P
    if kind == "total_prime":
        x, y = w["x"], w["y"]
        if verdict.method == "definition":
            return member(P, bracket(L, x, y)) and not member(P, x) and not member(P, y)
        return gen(L, bracket(L, x, y)) <= P and not gen(L, x) <= P and not gen(L, y) <= P
    if kind == "complement":
        x, y = w["x"], w["y"]
        z = bracket(L, x, y)
        return not member(P, x) and not member(P, y) and (not any(z) or member(P, z) or z not in _homogeneous_set(L))
    raise ValueError(f"unknown kind {kind!r}")


def clear_caches():
    for f in (_graded_ideal_spaces, _ideal_spaces, homogeneous, nonzero_vectors, gen, bracket_space,
              _graded_prime, _nongraded_prime, _semiprime, _irreducible, _total_prime,
              _complement_closed, _homogeneous_set):
        f.cache_clear()
