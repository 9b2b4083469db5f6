"""Leibniz algebras given by structure constants.

``sc[i][j]`` is the coordinate vector of ``b_i b_j``.  Left multiplication
is a derivation: ``x(yz) = (xy)z + y(xz)``.  Operator matrices act on column
vectors, so ``left_mult(A, x).apply(v) == product(A, x, v)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cached_property

from .errors import (
    DimensionMismatchError,
    FieldMismatchError,
    LeibnizViolationError,
    NotAnIdealError,
    NotASubalgebraError,
)
from .exactla import FieldSpec, Matrix, Subspace, is_zero, kernel, vaxpy, vsub


def _product(F, sc, n, x, y):
    out = F.zero_vector(n)
    for i, xi in enumerate(x):
        if xi:
            row = sc[i]
            for j, yj in enumerate(y):
                if yj:
                    out = vaxpy(F, out, xi * yj, row[j])
    return out


def check_leibniz(sc, field: FieldSpec):
    """First basis triple (i, j, k), 0-based, where the identity fails, or None."""
    n = len(sc)
    F = field
    basis = [F.basis_vector(n, i) for i in range(n)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                lhs = _product(F, sc, n, basis[i], sc[j][k])
                rhs = vaxpy(
                    F,
                    _product(F, sc, n, sc[i][j], basis[k]),
                    F(1),
                    _product(F, sc, n, basis[j], sc[i][k]),
                )
                if lhs != rhs:
                    return (i, j, k)
    return None


@dataclass(frozen=True)
class LeibnizAlgebra:
    """Structure constants over Q or GF(p), validated on construction.

    Pass ``check=False`` only to represent tensors that may violate the
    identity (census generation); every other operation assumes validity.
    """

    field: FieldSpec
    sc: tuple
    labels: tuple | None = dc_field(default=None, compare=False)
    check: bool = dc_field(default=True, compare=False, repr=False)

    def __post_init__(self):
        F = self.field
        n = len(self.sc)
        for i in range(n):
            if len(self.sc[i]) != n or any(len(v) != n for v in self.sc[i]):
                raise DimensionMismatchError("structure tensor must be n x n x n")
        sc = tuple(
            tuple(tuple(F(c) for c in self.sc[i][j]) for j in range(n)) for i in range(n)
        )
        object.__setattr__(self, "sc", sc)
        if self.labels is not None:
            labels = tuple(self.labels)
            if len(labels) != n:
                raise DimensionMismatchError("one label per basis element")
            object.__setattr__(self, "labels", labels)
        if self.check:
            witness = check_leibniz(sc, F)
            if witness is not None:
                raise LeibnizViolationError(witness)

    @classmethod
    def from_products(cls, field, n, products, labels=None, check=True):
        """Build from a sparse ``{(i, j): vector}`` mapping."""
        zero = field.zero_vector(n)
        sc = [[zero] * n for _ in range(n)]
        for (i, j), v in products.items():
            sc[i][j] = tuple(field(x) for x in v)
        return cls(field, tuple(map(tuple, sc)), labels, check)

    @classmethod
    def abelian(cls, field, n):
        zero = field.zero_vector(n)
        return cls(field, tuple(tuple(zero for _ in range(n)) for _ in range(n)))

    @property
    def dim(self) -> int:
        return len(self.sc)

    @cached_property
    def key(self):
        return (self.field, self.sc)

    @cached_property
    def basis_labels(self) -> tuple:
        return self.labels or tuple(f"b{i}" for i in range(self.dim))

    def basis(self, i):
        return self.field.basis_vector(self.dim, i)

    def zero(self) -> Subspace:
        return Subspace.zero(self.field, self.dim)

    def full(self) -> Subspace:
        return Subspace.full(self.field, self.dim)

    def span(self, vectors) -> Subspace:
        return Subspace.span(self.field, self.dim, vectors)

    def vector(self, coeffs: dict | list) -> tuple:
        """Coordinate vector from a list or a ``{label: coefficient}`` dict."""
        F = self.field
        if isinstance(coeffs, dict):
            out = [F(0)] * self.dim
            for name, c in coeffs.items():
                out[self.basis_labels.index(name)] = F(c)
            return tuple(out)
        return tuple(F(c) for c in coeffs)

    def is_abelian(self) -> bool:
        return all(is_zero(v) for row in self.sc for v in row)

    def flat_residues(self):
        """Structure tensor flattened for the sweep kernel (GF(p) only)."""
        return [c for row in self.sc for v in row for c in v]

    def __repr__(self):
        return f"LeibnizAlgebra({self.field}, dim={self.dim})"


@dataclass(frozen=True)
class AlgebraWithMap:
    """An algebra with the coordinate map that relates it to its parent.

    ``kind == "quotient"``: ``map`` is the (dim B) x (dim A) projection and
    ``ideal`` the kernel.  ``kind == "sub"``: ``map`` is the (dim A) x (dim B)
    embedding of the subalgebra ``sub``.
    """

    algebra: LeibnizAlgebra
    map: Matrix
    kind: str
    parent_dim: int
    ideal: Subspace | None = None
    sub: Subspace | None = None

    def image(self, S: Subspace) -> Subspace:
        """Image of a parent subspace (quotient) or sub subspace (embedding)."""
        if self.map.nrows == 0:
            return Subspace.zero(self.map.field, 0)
        return Subspace.span(self.map.field, self.map.nrows, [self.map.apply(b) for b in S.basis])

    def preimage(self, T: Subspace) -> Subspace:
        """Full preimage in the parent (quotient) or T ∩ sub in sub-coordinates."""
        F = self.map.field
        if self.kind == "quotient":
            lifts = [_lift(F, self.parent_dim, self.ideal, b) for b in T.basis]
            return Subspace.span(F, self.parent_dim, lifts) + self.ideal
        inside = T & self.sub
        return Subspace.span(F, self.algebra.dim, [self.sub.coords(b) for b in inside.basis])


def _lift(F, n, ideal: Subspace, coords):
    v = [F(0)] * n
    for idx, c in zip(ideal.complement_indices(), coords):
        v[idx] = c
    return tuple(v)


def _check_vec(A: LeibnizAlgebra, v):
    if len(v) != A.dim:
        raise DimensionMismatchError(f"vector of length {len(v)} for a {A.dim}-dim algebra")


def product(A: LeibnizAlgebra, x, y):
    _check_vec(A, x)
    _check_vec(A, y)
    F = A.field
    return _product(F, A.sc, A.dim, tuple(F(c) for c in x), tuple(F(c) for c in y))


def left_mult(A: LeibnizAlgebra, x) -> Matrix:
    """Matrix of a -> x a."""
    cols = [product(A, x, A.basis(j)) for j in range(A.dim)]
    return Matrix.from_columns(A.field, cols, A.dim)


def right_mult(A: LeibnizAlgebra, x) -> Matrix:
    """Matrix of a -> a x."""
    cols = [product(A, A.basis(j), x) for j in range(A.dim)]
    return Matrix.from_columns(A.field, cols, A.dim)


def is_lie(A: LeibnizAlgebra) -> bool:
    F = A.field
    n = A.dim
    for i in range(n):
        if not is_zero(A.sc[i][i]):
            return False
        for j in range(i + 1, n):
            if not is_zero(vaxpy(F, A.sc[i][j], F(1), A.sc[j][i])):
                return False
    return True


def _products(A, us, vs):
    return [product(A, u, v) for u in us for v in vs]


def is_subalgebra(A: LeibnizAlgebra, S: Subspace) -> bool:
    return all(S.contains(w) for w in _products(A, S.basis, S.basis))


def is_ideal(A: LeibnizAlgebra, S: Subspace) -> bool:
    full = [A.basis(i) for i in range(A.dim)]
    return all(S.contains(w) for w in _products(A, full, S.basis) + _products(A, S.basis, full))


def subalgebra_closure(A: LeibnizAlgebra, S: Subspace) -> Subspace:
    while True:
        T = S + A.span(_products(A, S.basis, S.basis))
        if T == S:
            return S
        S = T


def ideal_closure(A: LeibnizAlgebra, S: Subspace) -> Subspace:
    full = [A.basis(i) for i in range(A.dim)]
    while True:
        T = S + A.span(_products(A, full, S.basis) + _products(A, S.basis, full))
        if T == S:
            return S
        S = T


def _solve(A: LeibnizAlgebra, domain, images_of, target: Subspace) -> Subspace:
    """{x in span(domain) : every image of x lies in target}.

    ``images_of(v)`` returns the list of vectors whose membership in
    ``target`` is required; it must be linear in ``v``.
    """
    F = A.field
    domain = list(domain)
    if not domain:
        return A.zero()
    cols = []
    for d in domain:
        col = []
        for w in images_of(d):
            col.extend(target.residue(w))
        cols.append(tuple(col))
    if not cols[0]:
        return A.span(domain)
    M = Matrix.from_columns(F, cols, len(cols[0]))
    null = kernel(M)
    n = A.dim
    out = []
    for c in null.basis:
        v = F.zero_vector(n)
        for coef, d in zip(c, domain):
            if coef:
                v = vaxpy(F, v, coef, d)
        out.append(v)
    return A.span(out)


def largest_ideal_inside(A: LeibnizAlgebra, S: Subspace) -> Subspace:
    """The largest two-sided ideal of A contained in the subspace S."""
    full = [A.basis(i) for i in range(A.dim)]
    I = S
    while True:
        nxt = _solve(
            A,
            I.basis,
            lambda x: [product(A, a, x) for a in full] + [product(A, x, a) for a in full],
            I,
        )
        if nxt == I:
            return I
        I = nxt


def normalizer(A: LeibnizAlgebra, S: Subspace) -> Subspace:
    if not is_subalgebra(A, S):
        raise NotASubalgebraError("normalizer needs a subalgebra")
    full = [A.basis(i) for i in range(A.dim)]
    return _solve(
        A,
        full,
        lambda x: [product(A, x, s) for s in S.basis] + [product(A, s, x) for s in S.basis],
        S,
    )


def centralizer(A: LeibnizAlgebra, W: Subspace) -> Subspace:
    """Z_A(W) = {x : xW = Wx = 0}."""
    full = [A.basis(i) for i in range(A.dim)]
    return _solve(
        A,
        full,
        lambda x: [product(A, x, w) for w in W.basis] + [product(A, w, x) for w in W.basis],
        A.zero(),
    )


def left_centralizer(A: LeibnizAlgebra, W: Subspace) -> Subspace:
    """Z^l_A(W) = {x : xW = 0}."""
    full = [A.basis(i) for i in range(A.dim)]
    return _solve(A, full, lambda x: [product(A, x, w) for w in W.basis], A.zero())


def quotient(A: LeibnizAlgebra, I: Subspace) -> AlgebraWithMap:
    """A/I on the standard coordinates that are not pivots of I."""
    if not is_ideal(A, I):
        raise NotAnIdealError("quotient needs a two-sided ideal")
    F = A.field
    keep = I.complement_indices()
    m = len(keep)

    def project(v):
        r = I.residue(v)
        return tuple(r[i] for i in keep)

    sc = tuple(
        tuple(project(A.sc[a][b]) for b in keep) for a in keep
    )
    labels = tuple(A.basis_labels[i] for i in keep) if A.labels else None
    Q = LeibnizAlgebra(F, sc, labels)
    proj = Matrix.from_columns(F, [project(A.basis(j)) for j in range(A.dim)], m)
    return AlgebraWithMap(Q, proj, "quotient", A.dim, ideal=I)


def restrict(A: LeibnizAlgebra, S: Subspace) -> AlgebraWithMap:
    """S as an algebra in its canonical RREF basis."""
    if not is_subalgebra(A, S):
        raise NotASubalgebraError("restrict needs a subalgebra")
    F = A.field
    sc = tuple(
        tuple(S.coords(product(A, u, v)) for v in S.basis) for u in S.basis
    )
    B = LeibnizAlgebra(F, sc, check=False)
    emb = Matrix.from_columns(F, S.basis, A.dim)
    return AlgebraWithMap(B, emb, "sub", A.dim, sub=S)


def direct_sum(A: LeibnizAlgebra, B: LeibnizAlgebra) -> LeibnizAlgebra:
    if A.field != B.field:
        raise FieldMismatchError(f"{A.field} vs {B.field}")
    F = A.field
    n, m = A.dim, B.dim
    zero = F.zero_vector(n + m)
    sc = [[zero] * (n + m) for _ in range(n + m)]
    for i in range(n):
        for j in range(n):
            sc[i][j] = A.sc[i][j] + F.zero_vector(m)
    for i in range(m):
        for j in range(m):
            sc[n + i][n + j] = F.zero_vector(n) + B.sc[i][j]
    labels = None
    if A.labels or B.labels:
        labels = list(A.basis_labels)
        for name in B.basis_labels:
            while name in labels:  # keep names distinct: h, h', h''
                name += "'"
            labels.append(name)
        labels = tuple(labels)
    return LeibnizAlgebra(F, tuple(map(tuple, sc)), labels)


def semidirect_sum(H: LeibnizAlgebra, module_dim: int, left_action, right_action, labels=None):
    """V ∔ H on coordinates (v_0..v_{m-1}, h_0..h_{k-1}), V abelian.

    ``left_action[i]`` / ``right_action[i]`` are m x m matrices giving
    h_i v and v h_i.  Raises LeibnizViolationError if the data is inconsistent.
    """
    F = H.field
    m, k = module_dim, H.dim
    n = m + k
    if len(left_action) != k or len(right_action) != k:
        raise DimensionMismatchError("one action matrix per basis element of H")
    zero = F.zero_vector(n)
    sc = [[zero] * n for _ in range(n)]
    for i in range(k):
        for j in range(k):
            sc[m + i][m + j] = F.zero_vector(m) + H.sc[i][j]
        L, R = left_action[i], right_action[i]
        for a in range(m):
            sc[m + i][a] = tuple(L.rows[c][a] for c in range(m)) + F.zero_vector(k)
            sc[a][m + i] = tuple(R.rows[c][a] for c in range(m)) + F.zero_vector(k)
    return LeibnizAlgebra(F, tuple(map(tuple, sc)), labels)


def is_derivation(A: LeibnizAlgebra, D: Matrix) -> bool:
    n = A.dim
    for i in range(n):
        for j in range(n):
            lhs = D.apply(A.sc[i][j])
            rhs = vaxpy(
                A.field,
                product(A, D.apply(A.basis(i)), A.basis(j)),
                A.field(1),
                product(A, A.basis(i), D.apply(A.basis(j))),
            )
            if vsub(A.field, lhs, rhs) != A.field.zero_vector(n):
                return False
    return True
