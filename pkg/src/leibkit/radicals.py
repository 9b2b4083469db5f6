"""Nilradical, solvable radical, socles, Frattini subalgebra and ideal, elementarity.

Invariants that quantify over all ideals or all maximal subalgebras are
computed exhaustively over GF(p) only.  Over Q they are available through
fast paths (nilpotent, solvable or abelian inputs) or through caller-supplied
certificates; anything else raises :class:`UnsupportedBackendError`.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .algebra import (
    LeibnizAlgebra,
    is_ideal,
    is_subalgebra,
    largest_ideal_inside,
    restrict,
)
from .enumeration import (
    all_ideals,
    all_subalgebras,
    is_maximal_subalgebra,
    maximal_subalgebras,
    minimal_ideals,
)
from .errors import (
    CertificateError,
    NotAnIdealError,
    NotASubalgebraError,
    UnsupportedBackendError,
)
from .exactla import Subspace, intersect_all, sum_all
from .series import is_nilpotent, is_solvable, square

EXHAUSTIVE = "exhaustive"
CERTIFICATE = "certificate"


@dataclass(frozen=True)
class FrattiniData:
    maximal_subalgebras: tuple
    F: Subspace
    Phi: Subspace
    backend: str
    f_is_ideal: bool


@dataclass(frozen=True)
class ElementaryResult:
    elementary: bool
    witness: Subspace | None = None

    def __bool__(self):
        return self.elementary


def _require_finite(A, what):
    if not A.field.is_finite:
        raise UnsupportedBackendError(f"{what} over {A.field} needs a certificate or fast path")


def _is_abelian_subspace(A, S):
    from .algebra import product

    return all(not any(product(A, u, v)) for u in S.basis for v in S.basis)


@lru_cache(maxsize=None)
def nilradical(A: LeibnizAlgebra) -> Subspace:
    """Largest nilpotent ideal: the sum of every nilpotent ideal."""
    if is_nilpotent(A):
        return A.full()
    _require_finite(A, "the nilradical of a non-nilpotent algebra")
    nil = [I for I in all_ideals(A) if is_nilpotent(restrict(A, I).algebra)]
    N = sum_all(A.field, A.dim, nil)
    assert is_ideal(A, N) and is_nilpotent(restrict(A, N).algebra)
    return N


@lru_cache(maxsize=None)
def solvable_radical(A: LeibnizAlgebra) -> Subspace:
    if is_solvable(A):
        return A.full()
    _require_finite(A, "the radical of a non-solvable algebra")
    sol = [I for I in all_ideals(A) if is_solvable(restrict(A, I).algebra)]
    R = sum_all(A.field, A.dim, sol)
    assert is_ideal(A, R) and is_solvable(restrict(A, R).algebra)
    return R


def is_semisimple(A: LeibnizAlgebra) -> bool:
    return solvable_radical(A).is_zero()


@lru_cache(maxsize=None)
def socle(A: LeibnizAlgebra) -> Subspace:
    if A.is_abelian():
        return A.full()
    _require_finite(A, "the socle")
    return sum_all(A.field, A.dim, minimal_ideals(A))


@lru_cache(maxsize=None)
def abelian_socle(A: LeibnizAlgebra) -> Subspace:
    if A.is_abelian():
        return A.full()
    _require_finite(A, "the abelian socle")
    ab = [B for B in minimal_ideals(A) if _is_abelian_subspace(A, B)]
    return sum_all(A.field, A.dim, ab)


@lru_cache(maxsize=None)
def frattini(A: LeibnizAlgebra) -> FrattiniData:
    """F(A) = ∩ maximal subalgebras and Phi(A) = largest ideal inside F(A)."""
    _require_finite(A, "the Frattini subalgebra")
    maxes = tuple(maximal_subalgebras(A))
    F = intersect_all(A.field, A.dim, maxes)
    Phi = largest_ideal_inside(A, F)
    return FrattiniData(maxes, F, Phi, EXHAUSTIVE, is_ideal(A, F))


def frattini_ideal(A: LeibnizAlgebra) -> Subspace:
    return frattini(A).Phi


def frattini_upper_bound(A: LeibnizAlgebra, mlist) -> Subspace:
    """Intersection of certified maximal subalgebras; it contains F(A)."""
    for M in mlist:
        if M.is_full() or not is_subalgebra(A, M):
            raise NotASubalgebraError(f"{M} is not a proper subalgebra")
        if A.dim - M.dim == 1:
            continue
        if not A.field.is_finite:
            raise CertificateError(
                f"cannot certify maximality of a codimension-{A.dim - M.dim} subalgebra over {A.field}"
            )
        if not is_maximal_subalgebra(A, M):
            raise CertificateError(f"{M} is not maximal")
    return intersect_all(A.field, A.dim, mlist)


def phi_zero_certified(A: LeibnizAlgebra, mlist) -> bool:
    """True when the certificate proves Phi(A) = 0 (False means undecided)."""
    return largest_ideal_inside(A, frattini_upper_bound(A, mlist)).is_zero()


def phi_of_subalgebra(A: LeibnizAlgebra, S: Subspace) -> Subspace:
    """Phi of the subalgebra S, embedded back into A's coordinates."""
    R = restrict(A, S)
    return R.image(frattini(R.algebra).Phi)


def is_elementary(A: LeibnizAlgebra) -> ElementaryResult:
    _require_finite(A, "elementarity")
    for S in all_subalgebras(A):
        if not phi_of_subalgebra(A, S).is_zero():
            return ElementaryResult(False, S)
    return ElementaryResult(True)


def is_elementary_solvable_fast(A: LeibnizAlgebra, certificate=None) -> bool:
    """Phi(A) = 0 and A^2 nilpotent, for solvable A."""
    if not is_solvable(A):
        raise ValueError("the fast elementarity test needs a solvable algebra")
    if A.field.is_finite and certificate is None:
        phi_zero = frattini(A).Phi.is_zero()
    elif certificate is not None:
        phi_zero = phi_zero_certified(A, certificate)
        if not phi_zero:
            raise UnsupportedBackendError("certificate does not decide Phi(A) = 0")
    else:
        raise UnsupportedBackendError(f"Phi(A) over {A.field} needs a certificate")
    return phi_zero and is_nilpotent(restrict(A, square(A)).algebra)


def is_semisimple_module(A: LeibnizAlgebra, W: Subspace) -> bool:
    """W equals the sum of the minimal ideals of A that it contains."""
    if not is_ideal(A, W):
        raise NotAnIdealError("module test needs an ideal")
    if W.is_zero():
        return True
    _require_finite(A, "complete reducibility")
    inside = [B for B in minimal_ideals(A) if B <= W]
    return sum_all(A.field, A.dim, inside) == W


def clear_caches() -> None:
    for f in (nilradical, solvable_radical, socle, abelian_socle, frattini):
        f.cache_clear()
