"""Exhaustive sweeps over GF(p): subalgebras, ideals, maximal and minimal ones.

Every list is in canonical order: dimension ascending (descending for
maximal subalgebras), lexicographic on the flattened RREF basis within a
dimension.  Results are memoised per structure tensor for the session.
"""
from __future__ import annotations

import itertools
from functools import lru_cache

from . import kernels
from .algebra import LeibnizAlgebra, is_ideal, subalgebra_closure
from .errors import NotAnIdealError, UnsupportedBackendError
from .exactla import Subspace, gaussian_binomial
from .guard import EnumerationGuard, get_guard, get_workers

__all__ = [
    "EnumerationGuard",
    "all_ideals",
    "all_subalgebras",
    "complements",
    "find_complement_subalgebra",
    "is_maximal_subalgebra",
    "maximal_subalgebras",
    "minimal_ideals",
    "subalgebras_of_dim",
]


def _require_finite(A: LeibnizAlgebra):
    if not A.field.is_finite:
        raise UnsupportedBackendError(f"exhaustive enumeration is unavailable over {A.field}")


def estimated_sweep(A: LeibnizAlgebra, dims=None) -> int:
    n, q = A.dim, A.field.p
    dims = range(n + 1) if dims is None else dims
    return sum(gaussian_binomial(n, k, q) for k in dims)


@lru_cache(maxsize=None)
def _sweep(A: LeibnizAlgebra, k: int, mode: int) -> tuple:
    rows = kernels.sweep_all(A.flat_residues(), A.field.p, A.dim, k, mode, workers=get_workers())
    return tuple(Subspace(A.field, A.dim, r) for r in rows)


def _guarded(A, dims, guard):
    _require_finite(A)
    (guard or get_guard()).check(estimated_sweep(A, dims))


def subalgebras_of_dim(A: LeibnizAlgebra, k: int, guard=None) -> tuple:
    _guarded(A, [k], guard)
    return _sweep(A, k, kernels.MODE_SUBALGEBRA)


def ideals_of_dim(A: LeibnizAlgebra, k: int, guard=None) -> tuple:
    _guarded(A, [k], guard)
    return _sweep(A, k, kernels.MODE_IDEAL)


def all_subalgebras(A: LeibnizAlgebra, guard=None) -> list:
    _guarded(A, None, guard)
    return [S for k in range(A.dim + 1) for S in _sweep(A, k, kernels.MODE_SUBALGEBRA)]


def all_ideals(A: LeibnizAlgebra, guard=None) -> list:
    _guarded(A, None, guard)
    return [S for k in range(A.dim + 1) for S in _sweep(A, k, kernels.MODE_IDEAL)]


@lru_cache(maxsize=None)
def _maximal(A: LeibnizAlgebra) -> tuple:
    found = []
    for k in range(A.dim - 1, -1, -1):
        for S in _sweep(A, k, kernels.MODE_SUBALGEBRA):
            if not any(S <= M for M in found):
                found.append(S)
    return tuple(found)


def maximal_subalgebras(A: LeibnizAlgebra, guard=None) -> list:
    """Proper subalgebras maximal under inclusion, largest dimension first."""
    _guarded(A, None, guard)
    return list(_maximal(A))


@lru_cache(maxsize=None)
def _minimal(A: LeibnizAlgebra) -> tuple:
    found = []
    for k in range(1, A.dim + 1):
        for I in _sweep(A, k, kernels.MODE_IDEAL):
            if not any(J <= I for J in found):
                found.append(I)
    return tuple(found)


def minimal_ideals(A: LeibnizAlgebra, guard=None) -> list:
    _guarded(A, None, guard)
    return list(_minimal(A))


def complements(A: LeibnizAlgebra, I: Subspace, guard=None) -> list:
    """All subalgebras C with C ∩ I = 0 and C + I = A."""
    k = A.dim - I.dim
    return [C for C in subalgebras_of_dim(A, k, guard) if (C & I).is_zero()]


def find_complement_subalgebra(A: LeibnizAlgebra, I: Subspace, guard=None) -> Subspace | None:
    if not is_ideal(A, I):
        raise NotAnIdealError("complement search needs an ideal")
    k = A.dim - I.dim
    for C in subalgebras_of_dim(A, k, guard):
        if (C & I).is_zero():
            return C
    return None


def is_maximal_subalgebra(A: LeibnizAlgebra, M: Subspace) -> bool:
    """M proper and closure(M + Kx) = A for every x outside M.

    Over an infinite field only codimension one is decidable here.
    """
    if M.dim >= A.dim or subalgebra_closure(A, M) != M:
        return False
    comp = M.complement_indices()
    if len(comp) == 1:
        return True
    _require_finite(A)
    F = A.field
    # x ranges over nonzero vectors supported off M's pivots, one per line
    for coeffs in itertools.product(F.elements(), repeat=len(comp)):
        lead = next((c for c in coeffs if c), 0)
        if lead != 1:
            continue
        x = [F(0)] * A.dim
        for idx, c in zip(comp, coeffs):
            x[idx] = c
        if subalgebra_closure(A, M + A.span([tuple(x)])) != A.full():
            return False
    return True


def clear_caches() -> None:
    for f in (_sweep, _maximal, _minimal):
        f.cache_clear()
