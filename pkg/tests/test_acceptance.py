"""Acceptance suite: one test (or small group) per criterion 1-10.

Each test records a one-line outcome through ``acceptance_log.record``; the
lines are printed in the terminal summary.  Values are checked against the
brute-force helpers in ``oracles`` wherever the inputs are small enough.
"""
import random
import subprocess
import sys
import time
from fractions import Fraction
from pathlib import Path

import pytest

import leibkit
from leibkit import cartan, enumeration, radicals
from leibkit.algebra import centralizer, ideal_closure, is_lie, left_mult, restrict, subalgebra_closure
from leibkit.cartan import find_cartan, is_cartan
from leibkit.constructions import (
    counterexample,
    heisenberg_example,
    heisenberg_H,
    heisenberg_K,
    heisenberg_V,
    sl2,
)
from leibkit.enumeration import complements, is_maximal_subalgebra, maximal_subalgebras
from leibkit.exactla import GF, QQ, Subspace, enumerate_subspaces, gaussian_binomial
from leibkit.guard import EnumerationGuard, get_guard
from leibkit.radicals import (
    abelian_socle,
    frattini,
    is_elementary,
    is_semisimple,
    nilradical,
    socle,
)
from leibkit.series import is_nilpotent, is_solvable, left_center, square
from leibkit.theorems import Status, archive_failure, format_subspace

import oracles
from acceptance_log import record

DATA = Path(leibkit.__file__).parent / "data"
FAILURES = Path(__file__).parent / "failures"
PRIME_FIELD_CORPUS = (2, 3)


def _clear():
    enumeration.clear_caches()
    radicals.clear_caches()
    cartan.cartan_subalgebras.cache_clear()


def _sc(A):
    return [[list(v) for v in row] for row in A.sc]


def _statuses(corpus, corpus_results, name):
    """[(algebra name, algebra, result)] for one check; failures are archived."""
    rows = []
    for algebra_name, A in corpus:
        r = next(x for x in corpus_results[algebra_name] if x.name == name)
        if r.status is Status.FAIL:
            archive_failure(A, r, FAILURES)
        rows.append((algebra_name, A, r))
    return rows


def _count(rows, status):
    return sum(1 for _, _, r in rows if r.status is status)


# -- 1 -----------------------------------------------------------------------

def test_criterion_1_counterexample_p2():
    _clear()
    t0 = time.perf_counter()
    A = counterexample(2)
    V, H = heisenberg_V(2), heisenberg_H(2)
    z = A.span([A.basis(4)])
    data = frattini(A)
    comps = complements(A, V)
    R = restrict(A, H)
    inner = {V + R.image(M) for M in maximal_subalgebras(R.algebra)}
    maxes = set(maximal_subalgebras(A))
    elapsed = time.perf_counter() - t0

    oracle_F, oracle_Phi = oracles.frattini(_sc(A), 2)
    parts = {
        "F(A) = span(z)": data.F == z and oracles.elements(data.F) == oracle_F,
        "F(A) not an ideal": not data.f_is_ideal,
        "Phi(A) = 0": data.Phi.is_zero() and len(oracle_Phi) == 1,
        "Z^l(A) = V": left_center(A) == V,
        "unique complement of V is H": comps == [H],
        "maximal subalgebras = {H} + {V + M}": maxes == {H} | inner
        and {oracles.elements(M) for M in maxes} == set(oracles.maximal_subalgebras(_sc(A), 2)),
        "under 5 s": elapsed < 5,
    }
    ok = all(parts.values())
    bad = [k for k, v in parts.items() if not v]
    record(1, ok, f"CounterEx(2): {len(maxes)} maximal subalgebras, {elapsed:.2f} s" + (f", failed: {bad}" if bad else ""))
    assert ok, bad


# -- 2 -----------------------------------------------------------------------

def test_criterion_2_counterexample_p3():
    _clear()
    assert not get_guard().force
    t0 = time.perf_counter()
    A = counterexample(3)
    data = frattini(A)
    elapsed = time.perf_counter() - t0
    z = A.span([A.basis(5)])
    swept = enumeration.estimated_sweep(A)
    ok = data.F == z and not data.f_is_ideal and elapsed < 600
    record(2, ok, f"CounterEx(3): F(A) = span(z), not an ideal; {swept} subspaces swept in {elapsed:.2f} s")
    assert data.F == z
    assert not data.f_is_ideal
    assert elapsed < 600


# -- 3 -----------------------------------------------------------------------

def test_criterion_3_heisenberg_p2():
    _clear()
    t0 = time.perf_counter()
    L = heisenberg_example(2)
    H, K = heisenberg_H(2), heisenberg_K(2)
    R = restrict(L, H)
    phi_L = frattini(L).Phi
    phi_H = R.image(frattini(R.algebra).Phi)
    z = L.span([L.basis(4)])
    h_max, k_max = is_maximal_subalgebra(L, H), is_maximal_subalgebra(L, K)
    elapsed = time.perf_counter() - t0
    oracle_max = set(oracles.maximal_subalgebras(_sc(L), 2))
    parts = {
        "Phi(L) = 0": phi_L.is_zero(),
        "Phi(H) = span(z)": phi_H == z,
        "H maximal": h_max and oracles.elements(H) in oracle_max,
        "K maximal": k_max and oracles.elements(K) in oracle_max,
        "under 5 s": elapsed < 5,
    }
    ok = all(parts.values())
    record(3, ok, f"HeisEx(2): Phi(L) = 0, Phi(H) = span(z), H and K maximal ({elapsed:.2f} s)")
    assert ok, [k for k, v in parts.items() if not v]


@pytest.mark.xfail(strict=True, raises=AssertionError, reason="H and K share the line through x + y when p = 2")
def test_criterion_3_trivial_intersection():
    H, K = heisenberg_H(2), heisenberg_K(2)
    meet = H & K
    L = heisenberg_example(2)
    ok = meet.is_zero()
    record(3, ok, f"H ∩ K = {format_subspace(L, meet)} (expected 0)")
    assert ok


# -- 4 -----------------------------------------------------------------------

def test_criterion_4_socle_relations(corpus, corpus_results):
    finite = [(n, A) for n, A in corpus if A.field.p in PRIME_FIELD_CORPUS]
    soc = _statuses(corpus, corpus_results, "socreln")
    trip = _statuses(corpus, corpus_results, "trip_eq")
    phi_zero = [n for n, A in corpus if frattini(A).Phi.is_zero()]
    trip_pass = {n for n, _, r in trip if r.status is Status.PASS}

    # the invariants again, from brute-force element sets
    mismatches = []
    checked = 0
    for n, A in corpus:
        p = A.field.p
        if p ** A.dim > 81:
            continue
        checked += 1
        sc = _sc(A)
        if oracles.elements(nilradical(A)) != oracles.nilradical(sc, p):
            mismatches.append((n, "Nil"))
        if oracles.elements(abelian_socle(A)) != oracles.abelian_socle(sc, p):
            mismatches.append((n, "Asoc"))
        if oracles.elements(centralizer(A, socle(A))) != oracles.centralizer(sc, p, oracles.socle(sc, p)):
            mismatches.append((n, "Z_A(Soc)"))

    ok = (
        len(finite) >= 50
        and all(A.dim <= 6 for _, A in corpus)
        and _count(soc, Status.FAIL) == 0
        and set(phi_zero) <= trip_pass
        and len(phi_zero) >= 10
        and not mismatches
    )
    record(4, ok, f"{len(finite)} GF(2)/GF(3) algebras, socreln fails {_count(soc, Status.FAIL)}, "
                  f"trip_eq passes on {len(trip_pass & set(phi_zero))}/{len(phi_zero)} with Phi = 0, "
                  f"oracle cross-check on {checked} algebras, mismatches {len(mismatches)}")
    assert len(finite) >= 50
    assert _count(soc, Status.FAIL) == 0
    assert len(phi_zero) >= 10 and set(phi_zero) <= trip_pass
    assert not mismatches, mismatches


# -- 5 -----------------------------------------------------------------------

def test_criterion_5_a2comp(corpus, corpus_results):
    rows = _statuses(corpus, corpus_results, "a2comp")
    applicable = [(n, A, r) for n, A, r in rows if is_nilpotent(restrict(A, square(A)).algebra)]
    bad = [n for n, _, r in applicable if r.status is not Status.PASS]
    ok = len(applicable) >= 10 and not bad
    record(5, ok, f"{len(applicable)} algebras with A^2 nilpotent, {len(bad)} without agreement")
    assert len(applicable) >= 10
    assert not bad, bad


# -- 6 -----------------------------------------------------------------------

BUILDER_PREFIXES = ("type1", "type2", "typestar")


def test_criterion_6_elementary_equivalence(corpus, corpus_results):
    rows = _statuses(corpus, corpus_results, "elementary_equiv")
    solvable = [(n, A, r) for n, A, r in rows if is_solvable(A)]
    bad = [n for n, _, r in solvable if r.status is not Status.PASS]
    built = [(n, A) for n, A in corpus if n.startswith(BUILDER_PREFIXES)]
    not_elementary = [n for n, A in built if not is_elementary(A)]
    ok = len(solvable) >= 20 and not bad and built and not not_elementary
    record(6, ok, f"{len(solvable)} solvable algebras, {len(bad)} counterexamples; "
                  f"{len(built)} builder outputs, {len(not_elementary)} not elementary")
    assert len(solvable) >= 20
    assert not bad, bad
    assert built and not not_elementary, not_elementary


# -- 7 -----------------------------------------------------------------------

SEVEN = ("minimal_ideal_dichotomy", "min_nilp", "nil_centralizes_minimal", "nil_mod_phi",
         "minimal_supplement", "quotient_frattini")


def test_criterion_7_lemma_suite(corpus, corpus_results):
    summary, ok = [], True
    for name in SEVEN:
        rows = _statuses(corpus, corpus_results, name)
        fails, passes = _count(rows, Status.FAIL), _count(rows, Status.PASS)
        ok = ok and fails == 0 and passes >= 5
        summary.append(f"{name} {passes} pass/{fails} fail")
    record(7, ok, ", ".join(summary))
    assert ok, summary


# -- 8 -----------------------------------------------------------------------

def test_criterion_8_sl2():
    _clear()
    t0 = time.perf_counter()
    s5 = sl2(GF(5))
    semisimple, lie, elementary = is_semisimple(s5), is_lie(s5), bool(is_elementary(s5))
    sq = sl2(QQ)
    H = find_cartan(sq)
    h = sq.span([sq.basis(1)])
    verified = H is not None and is_cartan(sq, H)
    elapsed = time.perf_counter() - t0
    ok = semisimple and lie and elementary and H == h and verified and elapsed < 5
    record(8, ok, f"sl2(GF(5)) semisimple={semisimple} lie={lie} elementary={elementary}; "
                  f"sl2(Q) heuristic Cartan = span(h) verified={verified} ({elapsed:.2f} s)")
    assert ok


# -- 9 -----------------------------------------------------------------------

def _field_case(rng):
    p = rng.choice([None, 2, 3, 5, 7, 11, 13, 101, 65537])
    if p is None:
        F = QQ
        draw = lambda: Fraction(rng.randint(-10**6, 10**6), rng.randint(1, 10**4))  # noqa: E731
    else:
        F = GF(p)
        draw = lambda: rng.randrange(p)  # noqa: E731
    return F, F(draw()), F(draw()), F(draw())


def _field_axioms_hold(F, a, b, c):
    p = F.p
    red = (lambda x: x) if p is None else (lambda x: x % p)
    add = lambda x, y: red(x + y)  # noqa: E731
    mul = lambda x, y: red(x * y)  # noqa: E731
    if add(add(a, b), c) != add(a, add(b, c)) or mul(mul(a, b), c) != mul(a, mul(b, c)):
        return False
    if add(a, b) != add(b, a) or mul(a, b) != mul(b, a):
        return False
    if mul(a, add(b, c)) != add(mul(a, b), mul(a, c)):
        return False
    if add(a, red(-a)) != 0 or mul(a, F(1)) != a:
        return False
    return a == 0 or mul(a, F.inv(a)) == 1


def _closure_laws_hold(A, S, T, closure):
    cS, cT = closure(A, S), closure(A, S + T)
    return S <= cS and cS <= cT and closure(A, cS) == cS


def test_criterion_9_oracle_cross_checks(corpus):
    t0 = time.perf_counter()
    counts_ok = True
    guard = EnumerationGuard(force=True)
    for q in (2, 3, 5):
        for n in range(0, 7):
            for k in range(n + 1):
                prev, total = None, 0
                for S in enumerate_subspaces(GF(q), n, k, guard=guard):
                    flat = S.flat()
                    if prev is not None and flat <= prev:
                        counts_ok = False
                    prev, total = flat, total + 1
                if total != oracles.gaussian_product(n, k, q) or total != gaussian_binomial(n, k, q):
                    counts_ok = False

    engel_ok = True
    for _, A in corpus:
        all_nil = all(left_mult(A, A.basis(i)).is_nilpotent() for i in range(A.dim))
        engel_ok = engel_ok and all_nil == is_nilpotent(A)

    rng = random.Random(20240601)
    field_cases = 10_000
    field_ok = all(_field_axioms_hold(*_field_case(rng)) for _ in range(field_cases))

    closure_cases = 10_000
    closure_ok = True
    for i in range(closure_cases):
        _, A = corpus[i % len(corpus)]
        p, n = A.field.p, A.dim
        vec = lambda: tuple(rng.randrange(p) for _ in range(n))  # noqa: E731
        S = Subspace.span(A.field, n, [vec() for _ in range(rng.randint(0, 2))])
        T = Subspace.span(A.field, n, [vec() for _ in range(rng.randint(0, 2))])
        closure = subalgebra_closure if i % 2 == 0 else ideal_closure
        closure_ok = closure_ok and _closure_laws_hold(A, S, T, closure)

    elapsed = time.perf_counter() - t0
    ok = counts_ok and engel_ok and field_ok and closure_ok
    record(9, ok, f"Gaussian counts q in (2, 3, 5), n <= 6: {counts_ok}; Engel on {len(corpus)} algebras: {engel_ok}; "
                  f"{field_cases} field-axiom cases: {field_ok}; {closure_cases} closure cases: {closure_ok} "
                  f"({elapsed:.1f} s)")
    assert counts_ok and engel_ok and field_ok and closure_ok


# -- 10 ----------------------------------------------------------------------

def _report(path, workers):
    cmd = [sys.executable, "-m", "leibkit.cli", "report", "--json", "--workers", str(workers), str(path)]
    return subprocess.run(cmd, capture_output=True, check=True).stdout


def test_criterion_10_determinism():
    ok, detail = True, []
    for name in ("counterex2.lz", "heis2.lz"):
        runs = [_report(DATA / name, 1) for _ in range(3)]
        eight = _report(DATA / name, 8)
        same = len(set(runs)) == 1 and eight == runs[0] and runs[0]
        ok = ok and bool(same)
        detail.append(f"{name}: {'identical' if same else 'differs'}")
    record(10, ok, "report --json over 3 runs and 1 vs 8 workers: " + ", ".join(detail))
    assert ok, detail
