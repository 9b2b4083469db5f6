"""Deterministic corpus of small Leibniz algebras, mostly over GF(2) and GF(3).

Three sources: the named builders, subalgebras and quotients of the builder
outputs, and seeded random semidirect sums V ∔ H with commuting diagonal or
nilpotent left actions.  Random structure tensors almost never satisfy the
Leibniz identity, so sampling is constructive and every candidate is still
filtered through :func:`check_leibniz`.
"""
from __future__ import annotations

import random

from .algebra import LeibnizAlgebra, check_leibniz, direct_sum, quotient, restrict, semidirect_sum
from .constructions import (
    NEGATE,
    ZERO,
    Type2Spec,
    counterexample,
    heisenberg_H,
    heisenberg_example,
    sl2,
    type1,
    type2,
    type_star,
)
from .enumeration import all_ideals, maximal_subalgebras
from .errors import LeibnizViolationError
from .exactla import GF, Matrix, Subspace

DEFAULT_SEED = 7
MAX_DIM = 6


def cross_product(field) -> LeibnizAlgebra:
    """Cross product on field^3: e1 e2 = e3 and cyclic, antisymmetric."""
    one = field(1)
    prods = {}
    for i in range(3):
        j, k = (i + 1) % 3, (i + 2) % 3
        v = [0, 0, 0]
        v[k] = one
        prods[(i, j)] = tuple(v)
        v = [0, 0, 0]
        v[k] = -one
        prods[(j, i)] = tuple(v)
    return LeibnizAlgebra.from_products(field, 3, prods)


def _builders():
    F2, F3 = GF(2), GF(3)
    yield "counter(2)", counterexample(2)
    yield "counter(3)", counterexample(3)
    yield "heis(2)", heisenberg_example(2)
    yield "heis(3)", heisenberg_example(3)
    yield "heis(2).H", restrict(heisenberg_example(2), heisenberg_H(2)).algebra
    yield "heis(3).H", restrict(heisenberg_example(3), heisenberg_H(3)).algebra
    yield "sl2(3)", sl2(F3)
    yield "sl2(3)+sl2(3)", direct_sum(sl2(F3), sl2(F3))
    yield "cross(2)", cross_product(F2)
    yield "cross(2)+cross(2)", direct_sum(cross_product(F2), cross_product(F2))
    yield "sl2(5)", sl2(GF(5))
    for n in (1, 2, 3):
        yield f"abelian(2,{n})", LeibnizAlgebra.abelian(F2, n)
    yield "type1(3,diag)", type1(F3, [[[1, 0], [0, 2]]])
    yield "type1(3,diag2)", type1(F3, [[[1, 0], [0, 1]], [[1, 0], [0, 2]]])
    yield "type1(3,scalar)", type1(F3, [[[1]], [[2]]])
    yield "type1(2,id)", type1(F2, [[[1, 0], [0, 1]]])
    # x^2 + x + 1 is irreducible over GF(2): a simple 2-dim module
    yield "type1(2,rot)", type1(F2, [[[0, 1], [1, 1]]])
    base = type1(F3, [[[1, 0], [0, 2]]])
    e1 = Subspace.coordinate(F3, 3, [0])
    e2 = Subspace.coordinate(F3, 3, [1])
    yield "typestar(3)", type_star(base, e1, e2)
    yield "typestar(3,swap)", type_star(base, e2, e1)
    for name, m, n, lam, modes in [
        ("1x1", 1, 1, ((1,),), NEGATE),
        ("1x1z", 1, 1, ((1,),), ZERO),
        ("1x2", 1, 2, ((1, 2),), NEGATE),
        ("1x2m", 1, 2, ((1, 1),), ((NEGATE, ZERO),)),
        ("2x2", 2, 2, ((1, 0), (0, 1)), NEGATE),
        ("2x2z", 2, 2, ((1, 0), (0, 1)), ZERO),
        ("1x3", 1, 3, ((1, 2, 1),), ((ZERO, NEGATE, ZERO),)),
    ]:
        yield f"type2(3,{name})", type2(Type2Spec(m, n, lam, modes), F3)
    yield "type2(2,1x2)", type2(Type2Spec(1, 2, ((1, 1),), ((NEGATE, ZERO),)), GF(2))


def _derived(name, A, limit):
    """Quotients by proper nonzero ideals and maximal subalgebras of A."""
    out = []
    for I in all_ideals(A):
        if not I.is_zero() and not I.is_full():
            out.append((f"{name}/{I.dim}:{len(out)}", quotient(A, I).algebra))
    for M in maximal_subalgebras(A):
        if not M.is_zero():
            out.append((f"{name}<{M.dim}:{len(out)}", restrict(A, M).algebra))
    return out[:limit]


def _nilpotent_upper(rng, F, m):
    rows = [[0] * m for _ in range(m)]
    for i in range(m):
        for j in range(i + 1, m):
            rows[i][j] = rng.randrange(F.p)
    return Matrix.from_rows(F, rows)


def _random_semidirect(rng):
    """One candidate V ∔ H with H abelian; None if it fails the identity."""
    F = GF(rng.choice((2, 3)))
    m = rng.randint(1, 3)
    k = rng.randint(1, min(2, MAX_DIM - m))
    if rng.random() < 0.5:
        # commuting diagonal actions
        lefts = [Matrix.from_rows(F, [[rng.randrange(F.p) if i == j else 0 for j in range(m)] for i in range(m)])
                 for _ in range(k)]
    else:
        # powers of one nilpotent matrix commute
        N = _nilpotent_upper(rng, F, m)
        lefts, P = [], Matrix.identity(F, m)
        for _ in range(k):
            P = P @ N
            lefts.append(P)
    mode = rng.choice((NEGATE, ZERO))
    rights = [-L if mode == NEGATE else Matrix.zeros(F, m, m) for L in lefts]
    H = LeibnizAlgebra.abelian(F, k)
    try:
        A = semidirect_sum(H, m, lefts, rights)
    except LeibnizViolationError:
        return None
    return A if check_leibniz(A.sc, F) is None else None


def build_corpus(seed: int = DEFAULT_SEED, random_count: int = 20, derived_limit: int = 3):
    """List of ``(name, algebra)``, deduplicated on structure constants."""
    seen, out = set(), []

    def add(name, A):
        if A.dim == 0 or A.dim > MAX_DIM or A.key in seen:
            return
        seen.add(A.key)
        out.append((name, A))

    base = list(_builders())
    for name, A in base:
        add(name, A)
    for name, A in base:
        if A.dim <= 5:
            for dname, D in _derived(name, A, derived_limit):
                add(dname, D)
    rng = random.Random(seed)
    made = tries = 0
    while made < random_count and tries < 50 * random_count:
        tries += 1
        A = _random_semidirect(rng)
        if A is not None and A.key not in seen:
            add(f"random:{made}", A)
            made += 1
    return out
