import itertools

import pytest

from gradedlie import corpus
from gradedlie.algebra import AbelianGroup, build_algebra
from gradedlie.linalg import FieldSpec

F2, F3, F5 = FieldSpec.prime(2), FieldSpec.prime(3), FieldSpec.prime(5)
Q = FieldSpec.rational()


@pytest.fixture(scope="session")
def alg():
    cache = {n: corpus.load(n) for n in corpus.NAMES}
    return cache.__getitem__


def sl2_f3():
    # [e,f] = h, [h,e] = 2e, [h,f] = -2f = f
    return build_algebra("sl2_f3", F3, AbelianGroup(1), [("e", [1]), ("h", [0]), ("f", [-1])],
                         {(0, 2): {1: 1}, (0, 1): {0: -2}, (1, 2): {2: 1}})


def z3_graded_f3():
    # Z/3-graded: a deg 0, b deg 1, c deg 2, [a,b] = b, [a,c] = -c, [b,c] = 0
    return build_algebra("z3_f3", F3, AbelianGroup(0, (3,)), [("a", [0]), ("b", [1]), ("c", [2])],
                         {(0, 1): {1: 1}, (0, 2): {2: -1}})


def extra_algebras():
    return [sl2_f3(), z3_graded_f3()]


def span_by_closure(field, vectors, n):
    """Set of all linear combinations, by brute force."""
    out = {tuple([0] * n)}
    for coeffs in itertools.product(range(field.p), repeat=len(vectors)):
        v = [0] * n
        for c, w in zip(coeffs, vectors):
            v = [(a + c * b) % field.p for a, b in zip(v, w)]
        out.add(tuple(v))
    return frozenset(out)


# filled by test_acceptance; echoed at the end of the run even without -s
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
