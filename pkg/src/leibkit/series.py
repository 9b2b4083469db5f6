"""Derived, lower central and upper central series; centers."""
from __future__ import annotations

from dataclasses import dataclass

from .algebra import (
    LeibnizAlgebra,
    centralizer,
    left_centralizer,
    product,
    quotient,
)
from .exactla import Subspace


@dataclass(frozen=True)
class SeriesProfile:
    terms: tuple
    stabilized: bool = True

    @property
    def length(self) -> int:
        return len(self.terms)

    @property
    def last(self) -> Subspace:
        return self.terms[-1]

    def dims(self) -> list:
        return [t.dim for t in self.terms]


def _span_products(A, us, vs):
    return A.span([product(A, u, v) for u in us for v in vs])


def _descend(A, step):
    terms = [A.full()]
    for _ in range(A.dim + 1):
        nxt = step(terms[-1])
        if nxt == terms[-1]:
            break
        terms.append(nxt)
    return SeriesProfile(tuple(terms))


def lower_central_series(A: LeibnizAlgebra) -> SeriesProfile:
    """A^1 = A, A^{n+1} = A A^n, until the terms repeat."""
    full = A.full().basis
    return _descend(A, lambda T: _span_products(A, full, T.basis))


def derived_series(A: LeibnizAlgebra) -> SeriesProfile:
    return _descend(A, lambda T: _span_products(A, T.basis, T.basis))


def square(A: LeibnizAlgebra) -> Subspace:
    full = A.full().basis
    return _span_products(A, full, full)


def is_nilpotent(A: LeibnizAlgebra) -> bool:
    return lower_central_series(A).last.is_zero()


def nilpotency_class(A: LeibnizAlgebra) -> int | None:
    """c with A^{c+1} = 0 and A^c != 0 (0 for the zero algebra); None if not nilpotent."""
    s = lower_central_series(A)
    if not s.last.is_zero():
        return None
    return s.length - 1


def is_solvable(A: LeibnizAlgebra) -> bool:
    return derived_series(A).last.is_zero()


def derived_length(A: LeibnizAlgebra) -> int | None:
    s = derived_series(A)
    if not s.last.is_zero():
        return None
    return s.length - 1


def center(A: LeibnizAlgebra) -> Subspace:
    return centralizer(A, A.full())


def left_center(A: LeibnizAlgebra) -> Subspace:
    return left_centralizer(A, A.full())


def upper_central_series(A: LeibnizAlgebra) -> SeriesProfile:
    """Z_0 = 0, Z_{i+1} = preimage of Z(A/Z_i), until the terms repeat."""
    terms = [A.zero()]
    for _ in range(A.dim + 1):
        q = quotient(A, terms[-1])
        nxt = q.preimage(center(q.algebra))
        if nxt == terms[-1]:
            break
        terms.append(nxt)
    return SeriesProfile(tuple(terms))


def is_metabelian(A: LeibnizAlgebra) -> bool:
    sq = square(A).basis
    return all(not any(product(A, u, v)) for u in sq for v in sq)
