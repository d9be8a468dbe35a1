"""JSON presentations of algebras and ideals."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .algebra import AbelianGroup, GradedLieAlgebra, Violation, validate
from .linalg import FieldSpec


class FormatError(ValueError):
    """Malformed algebra or ideal document."""


class ValidationFailed(ValueError):
    def __init__(self, name: str, violations: list[Violation]):
        self.violations = violations
        lines = "\n".join(f"  {v}" for v in violations)
        super().__init__(f"algebra {name!r} violates the Lie algebra axioms:\n{lines}")


def _scalar(field: FieldSpec, raw, where: str):
    if field.is_finite:
        if isinstance(raw, bool) or not isinstance(raw, int):
            raise FormatError(f"{where}: prime-field scalar must be an integer, got {raw!r}")
        if not 0 <= raw < field.p:
            raise FormatError(f"{where}: scalar {raw} outside [0, {field.p})")
        return raw
    if isinstance(raw, int) and not isinstance(raw, bool):
        return Fraction(raw)
    if isinstance(raw, str):
        try:
            return Fraction(raw)
        except (ValueError, ZeroDivisionError):
            pass
    raise FormatError(f"{where}: rational scalar must be a 'num/den' string, got {raw!r}")


def _dump_scalar(field: FieldSpec, x):
    if field.is_finite:
        return int(x)
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def _loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"syntax error at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def _get(doc: dict, key: str, kind, where: str = "document"):
    if not isinstance(doc, dict) or key not in doc:
        raise FormatError(f"{where}: missing field {key!r}")
    val = doc[key]
    if not isinstance(val, kind):
        raise FormatError(f"{where}: field {key!r} has the wrong type")
    return val


def algebra_from_dict(doc: dict, allow_invalid: bool = False) -> GradedLieAlgebra:
    name = _get(doc, "name", str)
    fdoc = _get(doc, "field", dict)
    kind = _get(fdoc, "kind", str, "field")
    try:
        field = FieldSpec.prime(_get(fdoc, "p", int, "field")) if kind == "prime" else FieldSpec(kind)
    except ValueError as exc:
        raise FormatError(f"field: {exc}") from None
    gdoc = _get(doc, "group", dict)
    try:
        group = AbelianGroup(_get(gdoc, "free_rank", int, "group"), tuple(_get(gdoc, "torsion", list, "group")))
    except (TypeError, ValueError) as exc:
        raise FormatError(f"group: {exc}") from None

    names, degrees = [], []
    for k, b in enumerate(_get(doc, "basis", list)):
        bname = _get(b, "name", str, f"basis[{k}]")
        if bname in names:
            raise FormatError(f"basis[{k}]: duplicate basis name {bname!r}")
        try:
            degrees.append(group.normalize(_get(b, "degree", list, f"basis[{k}]")))
        except (TypeError, ValueError) as exc:
            raise FormatError(f"basis[{k}]: {exc}") from None
        names.append(bname)
    n = len(names)

    entries, seen = [], set()
    for k, br in enumerate(_get(doc, "brackets", list)):
        where = f"brackets[{k}]"
        i, j = _get(br, "i", int, where), _get(br, "j", int, where)
        if i == j:
            raise FormatError(f"{where}: diagonal bracket must be omitted")
        if not (0 <= i < n and 0 <= j < n):
            raise FormatError(f"{where}: index out of range")
        if i > j:
            raise FormatError(f"{where}: bracket entries require i < j")
        if (i, j) in seen:
            raise FormatError(f"{where}: duplicate bracket ({i}, {j})")
        seen.add((i, j))
        vec = [field.scalar(0)] * n
        for key, raw in _get(br, "coeffs", dict, where).items():
            try:
                idx = int(key)
            except ValueError:
                raise FormatError(f"{where}: coefficient index {key!r} is not an integer") from None
            if not 0 <= idx < n:
                raise FormatError(f"{where}: coefficient index {idx} out of range")
            vec[idx] = _scalar(field, raw, f"{where}.coeffs[{key}]")
        if any(vec):
            entries.append((i, j, tuple(vec)))
    entries.sort(key=lambda e: (e[0], e[1]))
    L = GradedLieAlgebra(field, group, tuple(names), tuple(degrees), tuple(entries), name)
    if not allow_invalid:
        violations = validate(L)
        if violations:
            raise ValidationFailed(name, violations)
    return L


def parse_algebra(text: str, allow_invalid: bool = False) -> GradedLieAlgebra:
    return algebra_from_dict(_loads(text), allow_invalid)


def algebra_to_dict(L: GradedLieAlgebra) -> dict:
    field = {"kind": "prime", "p": L.field.p} if L.field.is_finite else {"kind": "rational"}
    return {
        "name": L.name,
        "field": field,
        "group": {"free_rank": L.group.free_rank, "torsion": list(L.group.torsion)},
        "basis": [{"name": nm, "degree": list(d)} for nm, d in zip(L.basis_names, L.degrees)],
        "brackets": [
            {"i": i, "j": j, "coeffs": {str(k): _dump_scalar(L.field, c) for k, c in enumerate(v) if c != 0}}
            for i, j, v in L.brackets
        ],
    }


def serialize_algebra(L: GradedLieAlgebra) -> str:
    return json.dumps(algebra_to_dict(L), indent=2) + "\n"


PRESETS = ("zero", "full", "derived")


def parse_vector(L: GradedLieAlgebra, raw) -> tuple:
    """A vector from a JSON list, a comma-separated string, or a basis name."""
    if isinstance(raw, str):
        s = raw.strip()
        if s in L.basis_names:
            return L.basis_vector(L.basis_names.index(s))
        if s.startswith("["):
            raw = _loads(s)
        else:
            raw = [t.strip() for t in s.split(",") if t.strip()]
    if not isinstance(raw, list) or len(raw) != L.dim:
        raise FormatError(f"vector must have {L.dim} entries, got {raw!r}")
    try:
        return L.field.vector(raw)
    except (ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"bad scalar in vector {raw!r}: {exc}") from None


def parse_ideal_spec(L: GradedLieAlgebra, raw) -> str | list[tuple]:
    """Return a preset name or a list of generator vectors.

    Accepts a preset name, a JSON document ``{"generators": [[...], ...]}``
    or a bare JSON list of vectors.
    """
    if isinstance(raw, str):
        if raw.strip() in PRESETS:
            return raw.strip()
        raw = _loads(raw)
    if isinstance(raw, dict):
        raw = _get(raw, "generators", list, "ideal")
    if not isinstance(raw, list):
        raise FormatError("ideal must be a preset or a list of generators")
    return [parse_vector(L, g) for g in raw]


def ideal_to_dict(L: GradedLieAlgebra, rows) -> dict:
    return {"generators": [[_dump_scalar(L.field, c) for c in r] for r in rows]}
