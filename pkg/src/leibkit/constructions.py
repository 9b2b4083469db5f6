"""Builders for the named algebras: the Heisenberg example and its Leibniz
counterexample, sl2, type I algebras and their starred variants, and the
two-family normal form ``e_i f_j = lambda_ij f_j``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .algebra import (
    LeibnizAlgebra,
    is_ideal,
    product,
    semidirect_sum,
)
from .errors import DimensionMismatchError
from .exactla import GF, FieldSpec, Matrix, Subspace, express, is_prime, lincomb

NEGATE = "negate"
ZERO = "zero"


def _check_prime(p):
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"p must be prime, got {p!r}")


def _heisenberg_H(F: FieldSpec) -> LeibnizAlgebra:
    # basis x, y, z with yx = z = -xy
    return LeibnizAlgebra.from_products(
        F, 3, {(1, 0): (0, 0, 1), (0, 1): (0, 0, -1)}, labels=("x", "y", "z")
    )


def _heisenberg_actions(p):
    """Left actions of x, y, z on V = span(e_1..e_p), subscripts mod p."""
    F = GF(p)
    X = [[0] * p for _ in range(p)]
    Y = [[0] * p for _ in range(p)]
    for j in range(1, p + 1):
        col = j - 1
        X[j % p][col] = 1  # x e_j = e_{j+1}
        Y[(j - 2) % p][col] = (j + 1) % p  # y e_j = (j+1) e_{j-1}
    return [Matrix.from_rows(F, X), Matrix.from_rows(F, Y), Matrix.identity(F, p)]


def _labels(p):
    return tuple(f"e{j}" for j in range(1, p + 1)) + ("x", "y", "z")


def heisenberg_example(p: int) -> LeibnizAlgebra:
    """The solvable Lie algebra V ∔ H over GF(p), dimension p + 3."""
    _check_prime(p)
    acts = _heisenberg_actions(p)
    return semidirect_sum(_heisenberg_H(GF(p)), p, acts, [-a for a in acts], labels=_labels(p))


def counterexample(p: int) -> LeibnizAlgebra:
    """Same left action of H on V as the Heisenberg example but VH = 0."""
    _check_prime(p)
    acts = _heisenberg_actions(p)
    zero = Matrix.zeros(GF(p), p, p)
    return semidirect_sum(_heisenberg_H(GF(p)), p, acts, [zero] * 3, labels=_labels(p))


def heisenberg_V(p: int) -> Subspace:
    return Subspace.coordinate(GF(p), p + 3, range(p))


def heisenberg_H(p: int) -> Subspace:
    return Subspace.coordinate(GF(p), p + 3, range(p, p + 3))


def heisenberg_K(p: int) -> Subspace:
    """(I + R_{e_2}) H inside the Heisenberg example."""
    L = heisenberg_example(p)
    F = L.field
    e2 = L.basis(1)
    images = []
    for i in range(p, p + 3):
        h = L.basis(i)
        images.append(tuple((a + b) % p for a, b in zip(h, product(L, h, e2))))
    return Subspace.span(F, L.dim, images)


def sl2(field: FieldSpec) -> LeibnizAlgebra:
    """Basis (e, h, f) with he = 2e, hf = -2f, ef = h."""
    if field.characteristic == 2:
        raise ValueError("sl2 is not simple in characteristic 2")
    prods = {
        (1, 0): (2, 0, 0),
        (0, 1): (-2, 0, 0),
        (1, 2): (0, 0, -2),
        (2, 1): (0, 0, 2),
        (0, 2): (0, 1, 0),
        (2, 0): (0, -1, 0),
    }
    return LeibnizAlgebra.from_products(field, 3, prods, labels=("e", "h", "f"))


def _commute(a: Matrix, b: Matrix) -> bool:
    return a @ b == b @ a


def type1(field: FieldSpec, actions, verify: bool = True) -> LeibnizAlgebra:
    """Semidirect sum of an abelian module with an abelian algebra acting on it.

    ``actions`` are commuting m x m matrices, one per basis element of the
    acting algebra; the right action is the negated left action.  Over a
    finite field complete reducibility is verified unless ``verify=False``.
    """
    actions = [a if isinstance(a, Matrix) else Matrix.from_rows(field, a) for a in actions]
    if not actions:
        raise ValueError("type I needs at least one acting element")
    m = actions[0].nrows
    for a in actions:
        if a.nrows != m or a.ncols != m:
            raise DimensionMismatchError("action matrices must be square and equal-sized")
    for i, a in enumerate(actions):
        for b in actions[i + 1:]:
            if not _commute(a, b):
                raise ValueError("acting matrices must commute")
    H = LeibnizAlgebra.abelian(field, len(actions))
    labels = tuple(f"a{i + 1}" for i in range(m)) + tuple(f"b{i + 1}" for i in range(len(actions)))
    L = semidirect_sum(H, m, actions, [-a for a in actions], labels=labels)
    if verify and field.is_finite:
        from .radicals import is_semisimple_module

        if not is_semisimple_module(L, Subspace.coordinate(field, L.dim, range(m))):
            raise ValueError("the action is not completely reducible")
    return L


def type_star(L: LeibnizAlgebra, A1: Subspace, A2: Subspace) -> LeibnizAlgebra:
    """Zero the right action of the acting part on the summand A2.

    ``A1 ⊕ A2`` must be the module, i.e. the first dim(A1) + dim(A2)
    coordinates of a :func:`type1` output, and both summands ideals of L.
    """
    F = L.field
    m = A1.dim + A2.dim
    module = Subspace.coordinate(F, L.dim, range(m))
    if not (A1 & A2).is_zero() or A1 + A2 != module:
        raise ValueError("A1 and A2 must split the module part")
    if not (is_ideal(L, A1) and is_ideal(L, A2)):
        raise ValueError("both summands must be ideals")
    basis = list(A1.basis) + list(A2.basis)
    sc = [list(row) for row in L.sc]
    for i in range(m):
        c = express(F, basis, L.basis(i))
        a1 = lincomb(F, c[: A1.dim], A1.basis, L.dim)
        for j in range(m, L.dim):
            sc[i][j] = product(L, a1, L.basis(j))
    return LeibnizAlgebra(F, tuple(map(tuple, sc)), L.labels)


@dataclass(frozen=True)
class Type2Spec:
    """Shape of the normal form: ``lam[i][j]`` and per-pair right-product modes."""

    m: int
    n: int
    lam: tuple
    modes: tuple | str = NEGATE

    def mode(self, i, j) -> str:
        return self.modes if isinstance(self.modes, str) else self.modes[i][j]


def type2(spec: Type2Spec, field: FieldSpec) -> LeibnizAlgebra:
    """Basis e_1..e_m, f_1..f_n with e_i f_j = lam_ij f_j and
    f_j e_i = -lam_ij f_j (NEGATE) or 0 (ZERO); all other products 0."""
    m, n = spec.m, spec.n
    if len(spec.lam) != m or any(len(r) != n for r in spec.lam):
        raise DimensionMismatchError("lambda must be m x n")
    dim = m + n
    prods = {}
    for i in range(m):
        for j in range(n):
            lam = field(spec.lam[i][j])
            if not lam:
                continue
            v = [0] * dim
            v[m + j] = lam
            prods[(i, m + j)] = tuple(v)
            mode = spec.mode(i, j)
            if mode == NEGATE:
                v = [0] * dim
                v[m + j] = -lam
                prods[(m + j, i)] = tuple(v)
            elif mode != ZERO:
                raise ValueError(f"unknown right mode {mode!r}")
    labels = tuple(f"e{i + 1}" for i in range(m)) + tuple(f"f{j + 1}" for j in range(n))
    return LeibnizAlgebra.from_products(field, dim, prods, labels=labels)
