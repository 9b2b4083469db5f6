"""Cartan subalgebras: verification, exhaustive search and a Fitting heuristic."""
from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

from .algebra import LeibnizAlgebra, is_subalgebra, left_mult, normalizer, restrict, subalgebra_closure
from .enumeration import all_subalgebras
from .errors import NotASubalgebraError
from .exactla import Subspace, kernel
from .series import is_nilpotent, is_solvable

EXHAUSTIVE = "exhaustive"
FITTING = "fitting-heuristic"

# seed used by find_cartan when the caller gives none
DEFAULT_SEED = 20160401


@dataclass(frozen=True)
class CartanResult:
    cartans: tuple
    method: str
    # set when a solvable algebra has no Cartan subalgebra; reported, not raised
    anomaly: str | None = None


def is_cartan(A: LeibnizAlgebra, H: Subspace) -> bool:
    if not is_subalgebra(A, H):
        raise NotASubalgebraError("Cartan test needs a subalgebra")
    return normalizer(A, H) == H and is_nilpotent(restrict(A, H).algebra)


@lru_cache(maxsize=None)
def cartan_subalgebras(A: LeibnizAlgebra) -> CartanResult:
    found = tuple(S for S in all_subalgebras(A) if is_cartan(A, S))
    anomaly = None
    if not found and is_solvable(A):
        anomaly = "solvable algebra without a Cartan subalgebra"
    return CartanResult(found, EXHAUSTIVE, anomaly)


def fitting_null(A: LeibnizAlgebra, x) -> Subspace:
    """Generalised 0-eigenspace of left multiplication by x."""
    return kernel(left_mult(A, x).power(A.dim))


def _candidates(A, rng):
    for i in range(A.dim):
        yield A.basis(i)
    F = A.field
    hi = F.p - 1 if F.p else 9
    lo = 0 if F.p else -9
    while True:
        yield tuple(F(rng.randint(lo, hi)) for _ in range(A.dim))


def find_cartan(A: LeibnizAlgebra, attempts: int = 32, seed: int | None = None) -> Subspace | None:
    """Fitting null component of basis elements, then of seeded random elements,
    closed to a subalgebra; the first candidate passing is_cartan wins."""
    rng = random.Random(DEFAULT_SEED if seed is None else seed)
    gen = _candidates(A, rng)
    for _ in range(attempts):
        x = next(gen)
        H = subalgebra_closure(A, fitting_null(A, x))
        if is_cartan(A, H):
            return H
    return None
