"""Exact scalars over Q and GF(p), and canonical subspace linear algebra.

Scalars are plain Python objects: :class:`fractions.Fraction` over Q and
``int`` residues in ``range(p)`` over GF(p).  Vectors are tuples.  A
:class:`Subspace` always stores its basis in reduced row echelon form, so two
subspaces are equal exactly when their stored bases are equal.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterator, Sequence

from .errors import DimensionMismatchError, FieldMismatchError, UnsupportedBackendError
from .guard import EnumerationGuard, get_guard
from . import kernels

Vector = tuple


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Ground field descriptor: ``FieldSpec("Q")`` or ``FieldSpec("GF", p)``."""

    kind: str
    p: int | None = None

    def __post_init__(self):
        if self.kind == "Q":
            if self.p is not None:
                raise ValueError("the rational field takes no modulus")
        elif self.kind == "GF":
            if not isinstance(self.p, int) or not is_prime(self.p):
                raise ValueError(f"GF(p) needs a prime modulus, got {self.p!r}")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @property
    def is_finite(self) -> bool:
        return self.kind == "GF"

    @property
    def characteristic(self) -> int:
        return self.p or 0

    def __call__(self, x):
        """Coerce ``x`` (int, Fraction or numeric string) into this field."""
        if isinstance(x, bool) or isinstance(x, float):
            raise TypeError(f"refusing inexact scalar {x!r}")
        if isinstance(x, str):
            x = Fraction(x)
        if self.p is None:
            return Fraction(x)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"{x} has no image in GF({self.p})")
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.p is None:
            return 1 / a
        return pow(a, -1, self.p)

    def zero_vector(self, n: int) -> Vector:
        return (self(0),) * n

    def basis_vector(self, n: int, i: int) -> Vector:
        v = [self(0)] * n
        v[i] = self(1)
        return tuple(v)

    def elements(self):
        if self.p is None:
            raise ValueError("Q has no finite element list")
        return range(self.p)

    def __str__(self):
        return "Q" if self.p is None else f"GF({self.p})"


QQ = FieldSpec("Q")


def GF(p: int) -> FieldSpec:
    return FieldSpec("GF", p)


# -- vector helpers ---------------------------------------------------------

def vadd(F: FieldSpec, u: Vector, v: Vector) -> Vector:
    if F.p:
        p = F.p
        return tuple((a + b) % p for a, b in zip(u, v))
    return tuple(a + b for a, b in zip(u, v))


def vsub(F: FieldSpec, u: Vector, v: Vector) -> Vector:
    if F.p:
        p = F.p
        return tuple((a - b) % p for a, b in zip(u, v))
    return tuple(a - b for a, b in zip(u, v))


def vscale(F: FieldSpec, c, v: Vector) -> Vector:
    if F.p:
        p = F.p
        return tuple(c * a % p for a in v)
    return tuple(c * a for a in v)


def vaxpy(F: FieldSpec, y: Vector, c, x: Vector) -> Vector:
    """Return ``y + c*x``."""
    if F.p:
        p = F.p
        return tuple((a + c * b) % p for a, b in zip(y, x))
    return tuple(a + c * b for a, b in zip(y, x))


def is_zero(v: Vector) -> bool:
    return not any(v)


def lincomb(F: FieldSpec, coeffs: Sequence, vectors: Sequence[Vector], n: int) -> Vector:
    out = F.zero_vector(n)
    for c, v in zip(coeffs, vectors):
        if c:
            out = vaxpy(F, out, c, v)
    return out


def _rref_rows(F: FieldSpec, rows, ncols: int):
    """Row-reduce ``rows``; return (nonzero canonical rows, pivot columns)."""
    p = F.p
    m = [list(r) for r in rows]
    pivots = []
    r = 0
    nrows = len(m)
    for c in range(ncols):
        if r == nrows:
            break
        piv = None
        for i in range(r, nrows):
            if m[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = F.inv(m[r][c])
        if p:
            row = [x * inv % p for x in m[r]]
        else:
            row = [x * inv for x in m[r]]
        m[r] = row
        for i in range(nrows):
            if i != r:
                f = m[i][c]
                if f != 0:
                    if p:
                        m[i] = [(a - f * b) % p for a, b in zip(m[i], row)]
                    else:
                        m[i] = [a - f * b for a, b in zip(m[i], row)]
        pivots.append(c)
        r += 1
    return [tuple(x) for x in m[:r]], pivots


# -- matrices ---------------------------------------------------------------

@dataclass(frozen=True)
class Matrix:
    """A dense matrix over ``field``; acts on column vectors."""

    field: FieldSpec
    rows: tuple

    @classmethod
    def from_rows(cls, field: FieldSpec, rows) -> "Matrix":
        rows = tuple(tuple(field(x) for x in r) for r in rows)
        if len({len(r) for r in rows}) > 1:
            raise DimensionMismatchError("ragged matrix rows")
        return cls(field, rows)

    @classmethod
    def zeros(cls, field: FieldSpec, nrows: int, ncols: int) -> "Matrix":
        return cls(field, tuple(field.zero_vector(ncols) for _ in range(nrows)))

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "Matrix":
        return cls(field, tuple(field.basis_vector(n, i) for i in range(n)))

    @classmethod
    def from_columns(cls, field: FieldSpec, cols, nrows: int) -> "Matrix":
        return cls(field, tuple(tuple(c[i] for c in cols) for i in range(nrows)))

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @property
    def columns(self) -> tuple:
        return tuple(zip(*self.rows)) if self.rows else ()

    def apply(self, v: Vector) -> Vector:
        if len(v) != self.ncols:
            raise DimensionMismatchError(f"vector of length {len(v)} for {self.ncols} columns")
        F = self.field
        if F.p:
            p = F.p
            return tuple(sum(a * b for a, b in zip(r, v)) % p for r in self.rows)
        return tuple(sum((a * b for a, b in zip(r, v)), Fraction(0)) for r in self.rows)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if other.field != self.field:
            raise FieldMismatchError(f"{self.field} vs {other.field}")
        if self.ncols != other.nrows:
            raise DimensionMismatchError("inner dimensions differ")
        cols = [self.apply(c) for c in other.columns]
        return Matrix.from_columns(self.field, cols, self.nrows)

    def __add__(self, other: "Matrix") -> "Matrix":
        if other.field != self.field:
            raise FieldMismatchError(f"{self.field} vs {other.field}")
        return Matrix(self.field, tuple(vadd(self.field, a, b) for a, b in zip(self.rows, other.rows)))

    def __neg__(self) -> "Matrix":
        F = self.field
        return Matrix(F, tuple(vscale(F, F(-1), r) for r in self.rows))

    def transpose(self) -> "Matrix":
        return Matrix(self.field, self.columns)

    def power(self, k: int) -> "Matrix":
        out = Matrix.identity(self.field, self.nrows)
        base = self
        while k:
            if k & 1:
                out = out @ base
            base = base @ base
            k >>= 1
        return out

    def is_zero(self) -> bool:
        return all(is_zero(r) for r in self.rows)

    def is_nilpotent(self) -> bool:
        return self.power(self.nrows).is_zero()

    def rank(self) -> int:
        return len(_rref_rows(self.field, self.rows, self.ncols)[0])


def rref(m: Matrix) -> Matrix:
    """Reduced row echelon form of ``m``, zero rows kept at the bottom."""
    rows, _ = _rref_rows(m.field, m.rows, m.ncols)
    pad = m.nrows - len(rows)
    return Matrix(m.field, tuple(rows) + tuple(m.field.zero_vector(m.ncols) for _ in range(pad)))


def kernel(m: Matrix) -> "Subspace":
    """Null space {v : m v = 0} as a canonical subspace of the column space."""
    F = m.field
    n = m.ncols
    rows, pivots = _rref_rows(F, m.rows, n)
    pivset = set(pivots)
    vecs = []
    for f in range(n):
        if f in pivset:
            continue
        v = [F(0)] * n
        v[f] = F(1)
        for r, c in zip(rows, pivots):
            v[c] = F(-r[f]) if F.p else -r[f]
        vecs.append(tuple(v))
    return Subspace.span(F, n, vecs)


# -- subspaces --------------------------------------------------------------

@dataclass(frozen=True)
class Subspace:
    """Subspace of ``field^ambient_dim`` held by its RREF basis.

    Build with :meth:`span`; the raw constructor trusts its input.
    """

    field: FieldSpec
    ambient_dim: int
    basis: tuple

    @classmethod
    def span(cls, field: FieldSpec, ambient_dim: int, vectors=()) -> "Subspace":
        vecs = []
        for v in vectors:
            if len(v) != ambient_dim:
                raise DimensionMismatchError(
                    f"vector of length {len(v)} in ambient dimension {ambient_dim}"
                )
            vecs.append(tuple(field(x) for x in v))
        rows, _ = _rref_rows(field, vecs, ambient_dim)
        return cls(field, ambient_dim, tuple(rows))

    @classmethod
    def zero(cls, field: FieldSpec, n: int) -> "Subspace":
        return cls(field, n, ())

    @classmethod
    def full(cls, field: FieldSpec, n: int) -> "Subspace":
        return cls(field, n, tuple(field.basis_vector(n, i) for i in range(n)))

    @classmethod
    def coordinate(cls, field: FieldSpec, n: int, indices) -> "Subspace":
        return cls.span(field, n, [field.basis_vector(n, i) for i in indices])

    @property
    def dim(self) -> int:
        return len(self.basis)

    @cached_property
    def pivots(self) -> tuple:
        return tuple(next(i for i, x in enumerate(r) if x != 0) for r in self.basis)

    @cached_property
    def element_mask(self) -> int:
        """Bit set of the elements (as base-p integers); GF(p) only.

        Two subspaces of one ambient space satisfy ``S <= T`` iff
        ``S.element_mask & ~T.element_mask == 0``.
        """
        p = self.field.p
        if p is None:
            raise UnsupportedBackendError("element masks exist only over GF(p)")
        n = self.ambient_dim
        weights = [p ** (n - 1 - i) for i in range(n)]
        elems = [tuple([0] * n)]
        for b in self.basis:
            elems = [vaxpy(self.field, e, c, b) for c in range(p) for e in elems]
        mask = 0
        for e in elems:
            mask |= 1 << sum(x * w for x, w in zip(e, weights))
        return mask

    def _compatible(self, other: "Subspace"):
        if self.field != other.field:
            raise FieldMismatchError(f"{self.field} vs {other.field}")
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatchError(
                f"ambient dimensions {self.ambient_dim} and {other.ambient_dim}"
            )

    def residue(self, v: Vector) -> Vector:
        """Reduce ``v`` modulo this subspace; zero iff ``v`` lies in it."""
        F = self.field
        for r, c in zip(self.basis, self.pivots):
            f = v[c]
            if f != 0:
                v = vaxpy(F, v, -f if F.p is None else F.p - f, r)
        return v

    def contains(self, v: Vector) -> bool:
        if len(v) != self.ambient_dim:
            raise DimensionMismatchError(f"vector of length {len(v)}")
        return is_zero(self.residue(tuple(self.field(x) for x in v)))

    __contains__ = contains

    def coords(self, v: Vector) -> tuple:
        """Coordinates of ``v`` (assumed inside) w.r.t. the canonical basis."""
        return tuple(v[c] for c in self.pivots)

    def from_coords(self, c) -> Vector:
        return lincomb(self.field, c, self.basis, self.ambient_dim)

    def __add__(self, other: "Subspace") -> "Subspace":
        self._compatible(other)
        if not other.basis:
            return self
        if not self.basis:
            return other
        return Subspace.span(self.field, self.ambient_dim, self.basis + other.basis)

    def __and__(self, other: "Subspace") -> "Subspace":
        self._compatible(other)
        F, n = self.field, self.ambient_dim
        if not self.basis or not other.basis:
            return Subspace.zero(F, n)
        zero = F.zero_vector(n)
        block = [a + a for a in self.basis] + [b + zero for b in other.basis]
        rows, _ = _rref_rows(F, block, 2 * n)
        inter = [r[n:] for r in rows if is_zero(r[:n])]
        return Subspace.span(F, n, inter)

    def __le__(self, other: "Subspace") -> bool:
        self._compatible(other)
        if self.dim > other.dim:
            return False
        return all(is_zero(other.residue(b)) for b in self.basis)

    def __lt__(self, other: "Subspace") -> bool:
        return self.dim < other.dim and self <= other

    def is_zero(self) -> bool:
        return not self.basis

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def complement_indices(self) -> tuple:
        piv = set(self.pivots)
        return tuple(i for i in range(self.ambient_dim) if i not in piv)

    def flat(self) -> tuple:
        return tuple(x for r in self.basis for x in r)

    def __repr__(self):
        return f"Subspace({self.field}, {self.ambient_dim}, {[list(r) for r in self.basis]})"


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    return a + b


def subspace_intersect(a: Subspace, b: Subspace) -> Subspace:
    return a & b


def contains(a: Subspace, v: Vector) -> bool:
    return a.contains(v)


def sum_all(field: FieldSpec, n: int, spaces) -> Subspace:
    vecs = [b for s in spaces for b in s.basis]
    return Subspace.span(field, n, vecs)


def intersect_all(field: FieldSpec, n: int, spaces) -> Subspace:
    """Intersection of ``spaces``; the empty intersection is the whole space."""
    out = Subspace.full(field, n)
    for s in spaces:
        out = out & s
    return out


# -- enumeration ------------------------------------------------------------

def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of ``k``-dimensional subspaces of GF(q)^n (q-Pascal recursion)."""
    if k < 0 or k > n:
        return 0
    row = [1]
    for m in range(1, n + 1):
        new = [1] * (m + 1)
        for j in range(1, m):
            new[j] = row[j - 1] + q ** j * row[j]
        row = new
    return row[k]


def enumerate_subspaces(
    field: FieldSpec,
    ambient_dim: int,
    dim: int,
    guard: EnumerationGuard | None = None,
) -> Iterator[Subspace]:
    """Yield every ``dim``-dimensional subspace of ``field^ambient_dim``.

    Order is lexicographic on the flattened RREF matrix.
    """
    if not field.is_finite:
        raise UnsupportedBackendError("subspace enumeration needs a finite field")
    guard = guard or get_guard()
    guard.check(gaussian_binomial(ambient_dim, dim, field.p))
    for rows in kernels.iter_sweep(None, field.p, ambient_dim, dim, kernels.MODE_ALL):
        yield Subspace(field, ambient_dim, rows)


def express(field: FieldSpec, vectors, v: Vector):
    """Coefficients c with sum c_i vectors_i = v, or None if v is outside the span.

    The vectors are assumed linearly independent.
    """
    k = len(vectors)
    n = len(v)
    aug = [tuple(vec[r] for vec in vectors) + (v[r],) for r in range(n)]
    rows, pivots = _rref_rows(field, aug, k + 1)
    if k in pivots:
        return None
    c = [field(0)] * k
    for r, col in zip(rows, pivots):
        c[col] = r[k]
    return tuple(c)
