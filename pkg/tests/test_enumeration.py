import pytest

from leibkit.algebra import LeibnizAlgebra
from leibkit.constructions import heisenberg_H, heisenberg_V, sl2
from leibkit.enumeration import (
    all_ideals,
    all_subalgebras,
    complements,
    estimated_sweep,
    find_complement_subalgebra,
    is_maximal_subalgebra,
    maximal_subalgebras,
    minimal_ideals,
    subalgebras_of_dim,
)
from leibkit.errors import NotAnIdealError, ResourceGuardError, UnsupportedBackendError
from leibkit.exactla import GF, QQ, enumerate_subspaces
from leibkit.guard import EnumerationGuard

import oracles


def _sc(A):
    return [[list(v) for v in row] for row in A.sc]


def test_small_abelian_counts():
    assert len(all_subalgebras(LeibnizAlgebra.abelian(GF(2), 1))) == 2
    assert len(all_subalgebras(LeibnizAlgebra.abelian(GF(2), 2))) == 5
    one = LeibnizAlgebra.abelian(GF(3), 1)
    assert maximal_subalgebras(one) == [one.zero()]


def test_counterexample_recount(cex2):
    # every one of the 374 subspaces of GF(2)^5, filtered by brute force
    total = sum(1 for k in range(6) for _ in enumerate_subspaces(GF(2), 5, k))
    assert total == 374 == estimated_sweep(cex2)
    expected = set(oracles.subalgebras(_sc(cex2), 2))
    found = [oracles.elements(S) for S in all_subalgebras(cex2)]
    assert len(found) == len(set(found)) and set(found) == expected
    assert {oracles.elements(I) for I in all_ideals(cex2)} == set(oracles.ideals(_sc(cex2), 2))


def test_maximal_subalgebras_of_counterexample(cex2):
    V, H = heisenberg_V(2), heisenberg_H(2)
    maxes = maximal_subalgebras(cex2)
    assert {oracles.elements(M) for M in maxes} == set(oracles.maximal_subalgebras(_sc(cex2), 2))
    assert H in maxes
    # the others are V plus a maximal subalgebra of H
    others = [M for M in maxes if M != H]
    assert others and all(V <= M and M.dim == 4 for M in others)
    assert [M.dim for M in maxes] == sorted((M.dim for M in maxes), reverse=True)
    for M in maxes:
        assert is_maximal_subalgebra(cex2, M)
    assert not is_maximal_subalgebra(cex2, V)
    assert not is_maximal_subalgebra(cex2, cex2.full())


def test_minimal_ideals(cex2):
    assert minimal_ideals(cex2) == [heisenberg_V(2)]
    s = sl2(GF(5))
    assert minimal_ideals(s) == [s.full()]


def test_complements(cex2):
    V = heisenberg_V(2)
    assert find_complement_subalgebra(cex2, cex2.zero()) == cex2.full()
    assert find_complement_subalgebra(cex2, cex2.full()).is_zero()
    assert complements(cex2, V) == [heisenberg_H(2)]
    with pytest.raises(NotAnIdealError):
        find_complement_subalgebra(cex2, cex2.span([cex2.basis(4)]))


def test_canonical_order(cex2):
    subs = all_subalgebras(cex2)
    keys = [(S.dim, S.flat()) for S in subs]
    assert keys == sorted(keys)
    assert subalgebras_of_dim(cex2, 3) == tuple(S for S in subs if S.dim == 3)


def test_guard_and_field_errors(cex2):
    with pytest.raises(ResourceGuardError):
        all_subalgebras(cex2, guard=EnumerationGuard(100))
    assert len(all_subalgebras(cex2, guard=EnumerationGuard(100, force=True))) == len(all_subalgebras(cex2))
    with pytest.raises(UnsupportedBackendError):
        all_subalgebras(sl2(QQ))
