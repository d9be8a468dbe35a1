"""Exhaustive checks of the graded-prime theorems over a corpus of small algebras.

VERIFIED means no counterexample exists in the searched finite space; it is
never a proof.  Each check returns the number of hypothesis instances it
evaluated and the first violation in canonical order.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

from . import classify as C
from .algebra import GradedLieAlgebra, quotient
from .classify import QuantifierVariant, describe_witness
from .ideals import colon, is_graded_subspace, is_ideal
from .linalg import member

REPORT_VERSION = 1


@dataclass
class TheoremEntry:
    id: str
    statement: str
    variant: str
    status: str
    witness: dict | None
    instances: int
    millis: int

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "statement": self.statement,
            "variant": self.variant,
            "status": self.status,
            "witness": self.witness,
            "instances": self.instances,
            "millis": self.millis,
        }


@dataclass
class TheoremReport:
    variant: str
    corpus: list[str]
    skipped: list[str] = field(default_factory=list)
    entries: list[TheoremEntry] = field(default_factory=list)
    version: int = REPORT_VERSION

    def entry(self, tid: str) -> TheoremEntry:
        return next(e for e in self.entries if e.id == tid)


Found = tuple[int, dict | None]


def _w(L, **kw) -> dict:
    return {"algebra": L.name, **describe_witness(L, kw)}


def _graded(L):
    return [I.space for I in C.enumerate_graded_ideals(L)]


def _prime(L, P, v, method="definition"):
    return C.is_graded_prime(L, P, method, v).holds


def _outside(L, P):
    return [x for x in C.homogeneous(L) if not member(P, x)]


# individual checks; each returns (instances, first witness or None)


def check_t1(L, v) -> Found:
    n, found = 0, None
    for P in C.enumerate_ideals(L):
        n += 1
        d = C.is_prime_nongraded(L, P, "definition", v)
        e = C.is_prime_nongraded(L, P, "element", v)
        if d.holds != e.holds and found is None:
            found = _w(L, P=P.space, definition=d.holds, element=e.holds)
    return n, found


def check_t2(L, v) -> Found:
    n, found = 0, None
    for P in _graded(L):
        n += 1
        d, e = C.is_graded_prime(L, P, "definition", v), C.is_graded_prime(L, P, "element", v)
        if d.holds != e.holds and found is None:
            found = _w(L, P=P, definition=d.holds, element=e.holds)
    return n, found


def check_l3(L, v) -> Found:
    n, found = 0, None
    for P in _graded(L):
        for x in _outside(L, P):
            n += 1
            Cx = colon(L, P, x).space
            if not is_graded_subspace(L, Cx) and found is None:
                found = _w(L, P=P, x=x, colon=Cx)
    return n, found


def check_t4(L, v) -> Found:
    n, found = 0, None
    for P in _graded(L):
        n += 1
        d, c = C.is_graded_prime(L, P, "definition", v), C.is_graded_prime(L, P, "colon", v)
        if d.holds != c.holds and found is None:
            bad = c if d.holds else d
            found = _w(L, P=P, graded_prime=d.holds, colon_criterion=c.holds, **(bad.witness or {}))
    return n, found


def check_t5(L, v) -> Found:
    n, found = 0, None
    G = _graded(L)
    for I in G:
        Q, phi = quotient(L, I)
        C.require_epimorphism(phi)
        for P in G:
            if not (I <= P and _prime(L, P, v)):
                continue
            n += 1
            img = C.image_ideal(phi, P).space
            if not (is_ideal(Q, img) and is_graded_subspace(Q, img) and _prime(Q, img, v)) and found is None:
                found = _w(L, I=I, P=P, image=img)
    return n, found


def check_c6(L, v) -> Found:
    n, found = 0, None
    for I in _graded(L):
        Q, phi = quotient(L, I)
        C.require_epimorphism(phi)
        for Pq in _graded(Q):
            pre = C.preimage_ideal(phi, Pq).space
            if not _prime(L, pre, v):
                continue
            n += 1
            if not _prime(Q, Pq, v) and found is None:
                found = _w(L, I=I, preimage=pre, quotient_ideal=Pq)
    return n, found


def check_t7(L, v) -> Found:
    n, found = 0, None
    for P in _graded(L):
        if not _prime(L, P, v):
            continue
        n += 1
        Le, Pe = C.restrict_identity(L, P)
        ver = C.is_graded_prime(Le, Pe, "definition", v)
        if not ver.holds and found is None:
            found = {**_w(L, P=P), "L_e": _span_of_basis(Le),
                     "P_e": Le.format_subspace(Pe.space), **{f"{k}_e": val for k, val in ver.describe(Le).items()}}
    return n, found


def _span_of_basis(L) -> str:
    return "span{" + ", ".join(L.basis_names) + "}" if L.dim else "0"


def check_gpt(L, v) -> Found:
    n, found = 0, None
    for P in _graded(L):
        if not _prime(L, P, v):
            continue
        n += 1
        t = C.is_total_prime(L, P)
        if not t.holds and found is None:
            found = _w(L, P=P, **t.witness)
    return n, found


def check_ps(L, v) -> Found:
    n, found = 0, None
    for P in _graded(L):
        if not _prime(L, P, v):
            continue
        n += 1
        s = C.is_semiprime(L, P, "definition", v)
        if not s.holds and found is None:
            found = _w(L, P=P, **s.witness)
    return n, found


def check_sp(L, v) -> Found:
    n, found = 0, None
    for Q in _graded(L):
        n += 1
        d, e = C.is_semiprime(L, Q, "definition", v), C.is_semiprime(L, Q, "element", v)
        if d.holds != e.holds and found is None:
            found = _w(L, Q=Q, definition=d.holds, element=e.holds)
    return n, found


def check_ir(L, v) -> Found:
    n, found = 0, None
    for P in _graded(L):
        if not _prime(L, P, v):
            continue
        n += 1
        r = C.is_graded_irreducible(L, P, v)
        if not r.holds and found is None:
            found = _w(L, P=P, **r.witness)
    return n, found


def check_pr(L, v) -> Found:
    n, found = 0, None
    for P in _graded(L):
        n += 1
        p = _prime(L, P, v)
        irr = C.is_graded_irreducible(L, P, v).holds
        sp = C.is_semiprime(L, P, "definition", v).holds
        if p != (irr and sp) and found is None:
            found = _w(L, P=P, prime=p, irreducible=irr, semiprime=sp)
    return n, found


def check_tp1(L, v) -> Found:
    n, found = 0, None
    for P in _graded(L):
        n += 1
        d, g = C.is_total_prime(L, P, "definition"), C.is_total_prime(L, P, "generated")
        if d.holds != g.holds and found is None:
            found = _w(L, P=P, definition=d.holds, generated=g.holds)
    return n, found


def _total_primes(L):
    return [P for P in _graded(L) if C.is_total_prime(L, P).holds]


def check_tp2(L, v) -> Found:
    n, found = 0, None
    for P in _total_primes(L):
        PL = colon(L, P, C.full_ideal_space(L)).space
        for x in _outside(L, P):
            n += 1
            Px = colon(L, P, x).space
            if Px != PL and found is None:
                found = _w(L, P=P, x=x, colon_x=Px, colon_L=PL)
    return n, found


def _total_prime_ideal(L, S) -> bool:
    return is_ideal(L, S) and is_graded_subspace(L, S) and C.is_total_prime(L, S).holds


def check_tp3(L, v) -> Found:
    n, found = 0, None
    for P in _total_primes(L):
        n += 1
        PL = colon(L, P, C.full_ideal_space(L)).space
        if not _total_prime_ideal(L, PL) and found is None:
            found = _w(L, P=P, colon_L=PL)
    return n, found


def check_tp4(L, v) -> Found:
    n, found = 0, None
    for P in _total_primes(L):
        for x in _outside(L, P):
            n += 1
            Px = colon(L, P, x).space
            if not _total_prime_ideal(L, Px) and found is None:
                found = _w(L, P=P, x=x, colon_x=Px)
    return n, found


def check_mc(L, v) -> Found:
    n, found = 0, None
    for P in _graded(L):
        n += 1
        t, m = C.is_total_prime(L, P), C.complement_mult_closed(L, P)
        if t.holds != m.holds and found is None:
            found = _w(L, P=P, total_prime=t.holds, complement_closed=m.holds)
    return n, found


def check_tp5(L, v) -> Found:
    n, found = 0, None
    G = _graded(L)
    for I in G:
        Q, phi = quotient(L, I)
        C.require_epimorphism(phi)
        for P in G:
            if not (I <= P and C.is_total_prime(L, P).holds):
                continue
            n += 1
            img = C.image_ideal(phi, P).space
            if not _total_prime_ideal(Q, img) and found is None:
                found = _w(L, I=I, P=P, image=img)
    return n, found


def check_tc6(L, v) -> Found:
    n, found = 0, None
    for I in _graded(L):
        Q, phi = quotient(L, I)
        C.require_epimorphism(phi)
        for Pq in _graded(Q):
            pre = C.preimage_ideal(phi, Pq).space
            if not C.is_total_prime(L, pre).holds:
                continue
            n += 1
            if not C.is_total_prime(Q, Pq).holds and found is None:
                found = _w(L, I=I, preimage=pre, quotient_ideal=Pq)
    return n, found


@dataclass(frozen=True)
class Theorem:
    id: str
    statement: str
    check: Callable[[GradedLieAlgebra, QuantifierVariant], Found]


THEOREMS: tuple[Theorem, ...] = (
    Theorem("T1", "non-graded prime: ideal definition <=> [a,<b>] in P => a in P or b in P", check_t1),
    Theorem("T2", "graded prime: ideal definition <=> [x,<y>] in P => x in P or y in P (x,y homogeneous)", check_t2),
    Theorem("L3", "P graded, x homogeneous not in P => (P:x) is graded", check_l3),
    Theorem("T4", "P graded prime <=> (P:x) = P for every homogeneous x not in P", check_t4),
    Theorem("T5", "graded epimorphism phi, Ker phi in P graded prime => phi(P) graded prime", check_t5),
    Theorem("C6", "graded epimorphism phi, phi^-1(P') graded prime => P' graded prime", check_c6),
    Theorem("T7", "P graded prime => P_e graded prime in L_e", check_t7),
    Theorem("GPT", "graded prime => graded total prime", check_gpt),
    Theorem("PS", "graded prime => graded semiprime", check_ps),
    Theorem("SP", "graded semiprime: ideal definition <=> <x>' in Q => x in Q (x homogeneous)", check_sp),
    Theorem("IR", "graded prime => graded irreducible", check_ir),
    Theorem("PR", "graded prime <=> graded irreducible and graded semiprime", check_pr),
    Theorem("TP1", "graded total prime <=> (<[x,y]> in P => <x> in P or <y> in P)", check_tp1),
    Theorem("TP2", "P graded total prime => (P:x) = (P:L) for every homogeneous x not in P", check_tp2),
    Theorem("TP3", "P graded total prime => (P:L) graded total prime", check_tp3),
    Theorem("TP4", "P graded total prime => (P:x) graded total prime for homogeneous x not in P", check_tp4),
    Theorem("MC", "P graded total prime <=> h(L)-h(P) graded-multiplicatively closed (empty counts as closed)", check_mc),
    Theorem("TP5", "graded epimorphism phi, Ker phi in P graded total prime => phi(P) graded total prime", check_tp5),
    Theorem("TC6", "graded epimorphism phi, phi^-1(P') graded total prime => P' graded total prime", check_tc6),
)

_BY_ID = {t.id: t for t in THEOREMS}


def _run_cell(tid: str, L: GradedLieAlgebra, variant: QuantifierVariant) -> tuple[int, dict | None, float]:
    t0 = time.perf_counter()
    n, found = _BY_ID[tid].check(L, variant)
    return n, found, time.perf_counter() - t0


def theorem_suite(
    corpus: list[GradedLieAlgebra],
    variant: QuantifierVariant = C.LITERAL,
    jobs: int = 1,
    only: list[str] | None = None,
) -> TheoremReport:
    """Check every theorem on every finite-field algebra of ``corpus``.

    With ``jobs > 1`` the (theorem, algebra) cells run in worker processes;
    results are merged in corpus order so the report does not depend on
    scheduling.
    """
    from .algebra import validate

    for L in corpus:
        bad = validate(L)
        if bad:
            raise ValueError(f"corpus entry {L.name!r} is invalid: " + "; ".join(map(str, bad)))
    finite = [L for L in corpus if L.field.is_finite]
    report = TheoremReport(variant.name, [L.name for L in corpus], [L.name for L in corpus if not L.field.is_finite])
    theorems = [t for t in THEOREMS if only is None or t.id in only]
    cells = [(t.id, L) for t in theorems for L in finite]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(_run_cell, tid, L, variant) for tid, L in cells]
            results = [f.result() for f in futures]
    else:
        results = [_run_cell(tid, L, variant) for tid, L in cells]
    by_cell = dict(zip(((tid, L.name) for tid, L in cells), results))
    for t in theorems:
        n, witness, secs = 0, None, 0.0
        for L in finite:
            cn, cw, cs = by_cell[(t.id, L.name)]
            n += cn
            secs += cs
            if witness is None and cw is not None:
                witness = cw
        status = "VERIFIED" if witness is None else "COUNTEREXAMPLE"
        report.entries.append(TheoremEntry(t.id, t.statement, variant.name, status, witness, n, round(secs * 1000)))
    return report
