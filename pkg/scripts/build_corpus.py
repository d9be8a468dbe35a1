"""Regenerate the JSON files of the built-in corpus."""

from pathlib import Path

from gradedlie.algebra import AbelianGroup, build_algebra
from gradedlie.formats import serialize_algebra
from gradedlie.linalg import FieldSpec

F2, F5, Q = FieldSpec.prime(2), FieldSpec.prime(5), FieldSpec.rational()
Z = AbelianGroup(1)

ALGEBRAS = [
    build_algebra("ab2_f2", F2, Z, [("a", [0]), ("b", [1])]),
    build_algebra("sol2_f2", F2, Z, [("e", [0]), ("f", [1])], {(0, 1): {1: 1}}),
    build_algebra("sol2_q", Q, Z, [("e", [0]), ("f", [1])], {(0, 1): {1: 1}}),
    build_algebra("heis3_f2", F2, Z, [("x", [1]), ("y", [1]), ("z", [2])], {(0, 1): {2: 1}}),
    # [e,f] = h, [h,e] = 2e, [h,f] = 3f
    build_algebra(
        "sl2_f5", F5, Z, [("e", [1]), ("h", [0]), ("f", [-1])],
        {(0, 2): {1: 1}, (0, 1): {0: -2}, (1, 2): {2: 3}},
    ),
    build_algebra(
        "dsum_f2", F2, Z, [("e", [0]), ("f", [1]), ("x", [1]), ("y", [1]), ("z", [2])],
        {(0, 1): {1: 1}, (2, 3): {4: 1}},
    ),
]

if __name__ == "__main__":
    out = Path(__file__).resolve().parents[1] / "src" / "gradedlie" / "corpus"
    out.mkdir(exist_ok=True)
    for L in ALGEBRAS:
        (out / f"{L.name}.json").write_text(serialize_algebra(L), encoding="utf-8")
        print("wrote", L.name)
