"""One executable predicate per structural statement, plus the full report.

Each ``check_*`` returns a :class:`CheckResult`.  ``NOT_APPLICABLE`` records
the hypothesis that failed; ``UNSUPPORTED`` means an exhaustive backend was
refused (infinite field or resource guard).  A ``FAIL`` on a valid algebra
over a finite field is a falsification event and always carries a witness.
"""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field as dc_field
from enum import Enum
from pathlib import Path

from .algebra import (
    LeibnizAlgebra,
    centralizer,
    is_lie,
    left_centralizer,
    left_mult,
    product,
    quotient,
    restrict,
)
from .cartan import cartan_subalgebras, find_cartan, is_cartan
from .enumeration import (
    all_ideals,
    all_subalgebras,
    complements,
    find_complement_subalgebra,
    maximal_subalgebras,
    minimal_ideals,
)
from .errors import CertificateError, ResourceGuardError, UnsupportedBackendError
from .exactla import Subspace, is_zero, vadd
from .io import dumps
from .radicals import (
    abelian_socle,
    frattini,
    frattini_upper_bound,
    is_elementary,
    is_semisimple,
    is_semisimple_module,
    nilradical,
    phi_of_subalgebra,
    socle,
    solvable_radical,
)
from .series import (
    center,
    is_metabelian,
    is_nilpotent,
    is_solvable,
    lower_central_series,
    derived_length,
    derived_series,
    left_center,
    nilpotency_class,
    square,
    upper_central_series,
)


class Status(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    NOT_APPLICABLE = "not-applicable"
    UNSUPPORTED = "unsupported"


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: Status
    witness: object = None
    hypotheses: tuple = ()
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.status is Status.PASS

    def line(self, A: LeibnizAlgebra | None = None) -> str:
        out = f"{self.name}: {self.status.value}"
        if self.detail:
            out += f" ({self.detail})"
        if self.witness is not None:
            w = self.witness
            if isinstance(w, Subspace) and A is not None:
                w = format_subspace(A, w)
            out += f" witness={w}"
        return out


def _tf(b) -> str:
    return "true" if b else "false"


def _ok(name, hyps=(), detail=""):
    return CheckResult(name, Status.PASS, None, tuple(hyps), detail)


def _fail(name, witness, detail, hyps=()):
    return CheckResult(name, Status.FAIL, witness, tuple(hyps), detail)


def _na(name, hypothesis, hyps=()):
    return CheckResult(name, Status.NOT_APPLICABLE, None, tuple(hyps) + ((hypothesis, False),),
                       f"needs {hypothesis}")


def _finite_only(name, A):
    if not A.field.is_finite:
        return CheckResult(name, Status.UNSUPPORTED, None, (), f"exhaustive backend refuses {A.field}")
    return None


def _is_abelian(A, S):
    return all(not any(product(A, u, v)) for u in S.basis for v in S.basis)


def _is_nilpotent_sub(A, S):
    return is_nilpotent(restrict(A, S).algebra)


def _phi_zero(A):
    return frattini(A).Phi.is_zero()


# -- checks -------------------------------------------------------------------

def check_minimal_ideal_dichotomy(A: LeibnizAlgebra) -> CheckResult:
    """Every minimal ideal B has BA = 0 or ba = -ab throughout."""
    name = "minimal_ideal_dichotomy"
    if (r := _finite_only(name, A)):
        return r
    F = A.field
    basis = [A.basis(i) for i in range(A.dim)]
    for B in minimal_ideals(A):
        pairs = [(b, a) for b in B.basis for a in basis]
        if all(is_zero(product(A, b, a)) for b, a in pairs):
            continue
        if not all(is_zero(vadd(F, product(A, b, a), product(A, a, b))) for b, a in pairs):
            return _fail(name, B, "minimal ideal with BA != 0 and ba != -ab")
    return _ok(name)


def check_min_nilp(A: LeibnizAlgebra) -> CheckResult:
    """In a nilpotent algebra every minimal ideal meets and lies in the center."""
    name = "min_nilp"
    if (r := _finite_only(name, A)):
        return r
    if not is_nilpotent(A):
        return _na(name, "A nilpotent")
    Z = center(A)
    for B in minimal_ideals(A):
        if (B & Z).is_zero() or not B <= Z:
            return _fail(name, B, "minimal ideal not central", [("A nilpotent", True)])
    return _ok(name, [("A nilpotent", True)])


def check_nil_centralizes_minimal(A: LeibnizAlgebra) -> CheckResult:
    """Nil(A) lies in Z_A(B) for every minimal ideal B."""
    name = "nil_centralizes_minimal"
    if (r := _finite_only(name, A)):
        return r
    N = nilradical(A)
    for B in minimal_ideals(A):
        if not N <= centralizer(A, B):
            return _fail(name, B, "Nil(A) does not centralize this minimal ideal")
    return _ok(name)


def check_socreln(A: LeibnizAlgebra) -> CheckResult:
    """Asoc(A) ⊆ Nil(A) ⊆ Z_A(Soc(A))."""
    name = "socreln"
    if (r := _finite_only(name, A)):
        return r
    asoc, nil = abelian_socle(A), nilradical(A)
    zsoc = centralizer(A, socle(A))
    if not asoc <= nil:
        return _fail(name, asoc, "Asoc(A) not inside Nil(A)")
    if not nil <= zsoc:
        return _fail(name, nil, "Nil(A) not inside Z_A(Soc(A))")
    return _ok(name)


def check_trip_eq(A: LeibnizAlgebra) -> CheckResult:
    """Phi(A) = 0 forces Asoc(A) = Nil(A) = Z_A(Soc(A))."""
    name = "trip_eq"
    if (r := _finite_only(name, A)):
        return r
    if not _phi_zero(A):
        return _na(name, "Phi(A) = 0")
    hyps = [("Phi(A) = 0", True)]
    asoc, nil = abelian_socle(A), nilradical(A)
    zsoc = centralizer(A, socle(A))
    if not asoc == nil == zsoc:
        return _fail(name, (asoc, nil, zsoc), "Asoc, Nil and Z_A(Soc) differ", hyps)
    return _ok(name, hyps)


def check_asoc_comp(A: LeibnizAlgebra) -> CheckResult:
    """Phi(A) = 0 gives a complement of Asoc(A) that is a Lie algebra."""
    name = "asoc_comp"
    if (r := _finite_only(name, A)):
        return r
    if not _phi_zero(A):
        return _na(name, "Phi(A) = 0")
    hyps = [("Phi(A) = 0", True)]
    asoc = abelian_socle(A)
    C = find_complement_subalgebra(A, asoc)
    if C is None:
        return _fail(name, asoc, "Asoc(A) has no complementary subalgebra", hyps)
    if not is_lie(restrict(A, C).algebra):
        return _fail(name, C, "complement of Asoc(A) is not Lie", hyps)
    return _ok(name, hyps)


def check_nil_mod_phi(A: LeibnizAlgebra) -> CheckResult:
    """Nil(A)/Phi(A) maps onto Asoc(A/Phi(A))."""
    name = "nil_mod_phi"
    if (r := _finite_only(name, A)):
        return r
    phi = frattini(A).Phi
    nil = nilradical(A)
    q = quotient(A, phi)
    asoc_q = abelian_socle(q.algebra)
    if nil.dim - phi.dim != asoc_q.dim:
        return _fail(name, nil, f"dim Nil - dim Phi = {nil.dim - phi.dim} but dim Asoc(A/Phi) = {asoc_q.dim}")
    if q.image(nil) != asoc_q:
        return _fail(name, nil, "image of Nil(A) differs from Asoc(A/Phi)")
    return _ok(name)


def check_a2comp(A: LeibnizAlgebra) -> CheckResult:
    """With A^2 nilpotent the three conditions agree, and then the complements
    of A^2 are exactly the Cartan subalgebras."""
    name = "a2comp"
    if (r := _finite_only(name, A)):
        return r
    A2 = square(A)
    if not _is_nilpotent_sub(A, A2):
        return _na(name, "A^2 nilpotent")
    hyps = [("A^2 nilpotent", True)]
    c1 = _phi_zero(A)
    nil = nilradical(A)
    c2 = nil == socle(A) and find_complement_subalgebra(A, nil) is not None
    c3 = (
        _is_abelian(A, A2)
        and is_semisimple_module(A, A2)
        and find_complement_subalgebra(A, A2) is not None
    )
    if not c1 == c2 == c3:
        return _fail(name, (c1, c2, c3), "conditions 1/2/3 disagree", hyps)
    if c1:
        comps = set(complements(A, A2))
        carts = set(cartan_subalgebras(A).cartans)
        if comps != carts:
            return _fail(name, (sorted(comps, key=Subspace.flat), sorted(carts, key=Subspace.flat)),
                         "complements of A^2 differ from Cartan subalgebras", hyps)
    return _ok(name, hyps, f"conditions hold: {_tf(c1)}")


def _faithful_abelian_complement(E, K):
    for C in complements(E, K):
        if _is_abelian(E, C) and (C & left_centralizer(E, K)).is_zero():
            return C
    return None


def _type_one(E: LeibnizAlgebra) -> bool:
    """E = K ∔ C with K an abelian completely reducible ideal and C an abelian
    subalgebra acting faithfully on the left of K."""
    for K in all_ideals(E):
        if K.is_zero() or not _is_abelian(E, K) or not is_semisimple_module(E, K):
            continue
        if _faithful_abelian_complement(E, K) is not None:
            return True
    return False


def find_type_one_split(A: LeibnizAlgebra):
    """(B, E): A = B ⊕ E with B abelian, E of type I; None if there is none."""
    ideals = all_ideals(A)
    abelian_by_dim = {}
    for B in ideals:
        if _is_abelian(A, B):
            abelian_by_dim.setdefault(B.dim, []).append(B)
    for E in ideals:
        if E.is_zero():
            continue
        candidates = [
            B for B in abelian_by_dim.get(A.dim - E.dim, ())
            if (B & E).is_zero()
            and not any(any(product(A, b, e)) or any(product(A, e, b)) for b in B.basis for e in E.basis)
        ]
        if candidates and _type_one(restrict(A, E).algebra):
            return candidates[0], E
    return None


# exhaustive search for the type I decomposition is attempted up to this dimension
TYPE_ONE_MAX_DIM = 5


def check_elementary_equiv(A: LeibnizAlgebra) -> CheckResult:
    """For solvable A: elementary ⇔ (Phi = 0, A^2 nilpotent) ⇔ (Phi = 0,
    metabelian) ⇔ Asoc(A) has an abelian complement; a type I split forces
    elementarity."""
    name = "elementary_equiv"
    if (r := _finite_only(name, A)):
        return r
    if not is_solvable(A):
        return _na(name, "A solvable")
    hyps = [("A solvable", True)]
    phi0 = _phi_zero(A)
    p1 = bool(is_elementary(A))
    p2 = phi0 and _is_nilpotent_sub(A, square(A))
    p3 = phi0 and is_metabelian(A)
    asoc = abelian_socle(A)
    p4 = any(_is_abelian(A, C) for C in complements(A, asoc))
    if not p1 == p2 == p3 == p4:
        return _fail(name, (p1, p2, p3, p4), "conditions 1-4 disagree", hyps)
    detail = f"elementary: {_tf(p1)}"
    if A.dim <= TYPE_ONE_MAX_DIM:
        split = find_type_one_split(A)
        if split is not None and not p1:
            return _fail(name, split, "type I split found on a non-elementary algebra", hyps)
        detail += f", type I split: {_tf(split is not None)}"
    return _ok(name, hyps, detail)


def check_frattini_subset(A: LeibnizAlgebra) -> CheckResult:
    """With A^2 nilpotent, Phi(M) ⊆ Phi(A) for every subalgebra M."""
    name = "frattini_subset"
    if (r := _finite_only(name, A)):
        return r
    if not _is_nilpotent_sub(A, square(A)):
        return _na(name, "A^2 nilpotent")
    hyps = [("A^2 nilpotent", True)]
    phi = frattini(A).Phi
    for M in all_subalgebras(A):
        if not phi_of_subalgebra(A, M) <= phi:
            return _fail(name, M, "Phi(M) not inside Phi(A)", hyps)
    return _ok(name, hyps)


def _maximal_in(A, U):
    R = restrict(A, U)
    return [R.image(M) for M in maximal_subalgebras(R.algebra)]


def check_minimal_supplement(A: LeibnizAlgebra) -> CheckResult:
    """U minimal with A = B + U gives B ∩ U ⊆ Phi(U)."""
    name = "minimal_supplement"
    if (r := _finite_only(name, A)):
        return r
    p, n = A.field.p, A.dim
    subs = [(U, U.element_mask) for U in all_subalgebras(A)]
    phis = {}
    for B in all_ideals(A):
        mB = B.element_mask
        # B + U = A iff |B ∩ U| = p^(dim B + dim U - n)
        sups = [
            (U, mU) for U, mU in subs
            if B.dim + U.dim >= n and (mB & mU).bit_count() == p ** (B.dim + U.dim - n)
        ]
        # subs is sorted by dimension: any supplement strictly inside U has
        # already been seen, and then so has a minimal one below it
        minimal, masks = [], []
        for U, mU in sups:
            if not any(not mV & ~mU for mV in masks):
                minimal.append(U)
                masks.append(mU)
        for U in minimal:
            if U not in phis:
                phis[U] = phi_of_subalgebra(A, U)
            if (B & U).element_mask & ~phis[U].element_mask:
                return _fail(name, (B, U), "B ∩ U not inside Phi(U)")
    return _ok(name)


def check_quotient_frattini(A: LeibnizAlgebra) -> CheckResult:
    """F(A/B) = F(A)/B for every ideal B inside F(A)."""
    name = "quotient_frattini"
    if (r := _finite_only(name, A)):
        return r
    FA = frattini(A).F
    for B in all_ideals(A):
        if not B <= FA:
            continue
        q = quotient(A, B)
        if frattini(q.algebra).F != q.image(FA):
            return _fail(name, B, "F(A/B) differs from the image of F(A)")
    return _ok(name)


def check_f_ideal_char0(A: LeibnizAlgebra, certificate=None) -> CheckResult:
    """Over Q, F(A) is an ideal; decided only from a maximal-subalgebra certificate."""
    name = "f_ideal_char0"
    if A.field.is_finite:
        return _na(name, "characteristic 0")
    hyps = [("characteristic 0", True)]
    if certificate is None:
        return CheckResult(name, Status.UNSUPPORTED, None, tuple(hyps), "no maximal-subalgebra certificate")
    try:
        bound = frattini_upper_bound(A, certificate)
    except CertificateError as exc:
        return CheckResult(name, Status.UNSUPPORTED, None, tuple(hyps), str(exc))
    if not bound.is_zero():
        return CheckResult(name, Status.UNSUPPORTED, bound, tuple(hyps),
                           "certificate bounds F(A) by a nonzero subspace; F(A) undetermined")
    return _ok(name, hyps, "certificate forces F(A) = 0")


def check_semisimple_is_lie(A: LeibnizAlgebra) -> CheckResult:
    name = "semisimple_is_lie"
    if (r := _finite_only(name, A)):
        return r
    if not is_semisimple(A):
        return _na(name, "A semisimple")
    if not is_lie(A):
        return _fail(name, A.full(), "semisimple but not Lie")
    return _ok(name, [("A semisimple", True)])


def check_nested_cartan(A: LeibnizAlgebra) -> CheckResult:
    """W ⊆ U, U/W Cartan in A/W and H Cartan in U give H Cartan in A."""
    name = "nested_cartan"
    if (r := _finite_only(name, A)):
        return r
    subs = all_subalgebras(A)
    triples = 0
    for W in all_ideals(A):
        q = quotient(A, W)
        for U in subs:
            if not W <= U or not is_cartan(q.algebra, q.image(U)):
                continue
            R = restrict(A, U)
            for Hc in cartan_subalgebras(R.algebra).cartans:
                H = R.image(Hc)
                triples += 1
                if not is_cartan(A, H):
                    return _fail(name, (W, U, H), "nested Cartan is not Cartan in A")
    return _ok(name, detail=f"{triples} triples")


def check_nilpotent_center(A: LeibnizAlgebra) -> CheckResult:
    """Nilpotent of class c: A^c ⊆ Z(A) and Z(A) != 0; the upper central
    series reaches A exactly when A is nilpotent."""
    name = "nilpotent_center"
    nil = is_nilpotent(A)
    ucs = upper_central_series(A)
    if nil != ucs.last.is_full():
        return _fail(name, ucs.last, "upper central series disagrees with nilpotency")
    if not nil or A.dim == 0:
        return _ok(name, detail="not nilpotent" if not nil else "zero algebra")
    c = nilpotency_class(A)
    Ac = lower_central_series(A).terms[c - 1]
    Z = center(A)
    if Z.is_zero() or not Ac <= Z:
        return _fail(name, Ac, "A^c not central")
    return _ok(name, [("A nilpotent", True)])


def check_engel(A: LeibnizAlgebra) -> CheckResult:
    """A nilpotent ⇔ left multiplication by each basis element is nilpotent."""
    name = "engel"
    basis_nil = all(left_mult(A, A.basis(i)).is_nilpotent() for i in range(A.dim))
    if basis_nil != is_nilpotent(A):
        return _fail(name, basis_nil, "basis Engel test disagrees with the lower central series")
    return _ok(name)


CHECKS = {
    "minimal_ideal_dichotomy": check_minimal_ideal_dichotomy,
    "min_nilp": check_min_nilp,
    "nil_centralizes_minimal": check_nil_centralizes_minimal,
    "socreln": check_socreln,
    "trip_eq": check_trip_eq,
    "asoc_comp": check_asoc_comp,
    "nil_mod_phi": check_nil_mod_phi,
    "a2comp": check_a2comp,
    "elementary_equiv": check_elementary_equiv,
    "frattini_subset": check_frattini_subset,
    "minimal_supplement": check_minimal_supplement,
    "quotient_frattini": check_quotient_frattini,
    "f_ideal_char0": check_f_ideal_char0,
    "semisimple_is_lie": check_semisimple_is_lie,
    "nested_cartan": check_nested_cartan,
    "nilpotent_center": check_nilpotent_center,
    "engel": check_engel,
}


def run_check(name: str, A: LeibnizAlgebra) -> CheckResult:
    """Run one check, mapping refused backends to UNSUPPORTED."""
    try:
        return CHECKS[name](A)
    except (UnsupportedBackendError, ResourceGuardError) as exc:
        return CheckResult(name, Status.UNSUPPORTED, None, (), str(exc))


def run_all(A: LeibnizAlgebra) -> list:
    return [run_check(name, A) for name in CHECKS]


# -- report -------------------------------------------------------------------

def format_scalar(c) -> str:
    return str(c)


def format_vector(A: LeibnizAlgebra, v) -> str:
    terms = []
    for name, c in zip(A.basis_labels, v):
        if not c:
            continue
        terms.append(name if c == 1 else f"{format_scalar(c)}*{name}")
    return " + ".join(terms) if terms else "0"


def format_subspace(A: LeibnizAlgebra, S: Subspace) -> str:
    return "[" + ", ".join(format_vector(A, b) for b in S.basis) + "]"


def _sub_json(A, S: Subspace):
    return {
        "dim": S.dim,
        "span": format_subspace(A, S),
        "basis": [" ".join(format_scalar(c) for c in b) for b in S.basis],
    }


@dataclass
class StructureReport:
    """Invariant profile of one algebra; ``values`` holds Subspaces, numbers,
    booleans, or ``Unsupported`` markers, in a fixed key order."""

    algebra: LeibnizAlgebra
    values: dict = dc_field(default_factory=dict)

    def to_json(self) -> dict:
        A = self.algebra
        out = {"field": str(A.field), "dim": A.dim, "basis": list(A.basis_labels)}
        for k, v in self.values.items():
            out[k] = _jsonable(A, v)
        return out

    def to_text(self) -> str:
        A = self.algebra
        lines = [f"algebra over {A.field}, dim {A.dim}, basis {' '.join(A.basis_labels)}"]
        for k, v in self.values.items():
            sep = " = " if isinstance(v, (Subspace, list)) or k.endswith(")") else ": "
            lines.append(f"{k}{sep}{_texty(A, v)}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class Unsupported:
    reason: str

    def __str__(self):
        return f"unsupported({self.reason})"


def _jsonable(A, v):
    if isinstance(v, Subspace):
        return _sub_json(A, v)
    if isinstance(v, Unsupported):
        return str(v)
    if isinstance(v, (list, tuple)):
        return [_jsonable(A, x) for x in v]
    return v


def _texty(A, v):
    if isinstance(v, Subspace):
        return format_subspace(A, v)
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "none"
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_texty(A, x) for x in v) + "]"
    return str(v)


def _attempt(fn, *args):
    try:
        return fn(*args)
    except UnsupportedBackendError:
        return Unsupported("infinite field")
    except ResourceGuardError as exc:
        return Unsupported(f"guard: ~{exc.estimated} subspaces")


def report(A: LeibnizAlgebra, seed: int | None = None) -> StructureReport:
    """Every invariant of A; exhaustive over GF(p), fast paths over Q.

    ``seed`` drives the randomized Cartan search used over Q.
    """
    v = {}
    v["lie"] = is_lie(A)
    v["nilpotent"] = is_nilpotent(A)
    v["nilpotency_class"] = nilpotency_class(A)
    v["solvable"] = is_solvable(A)
    v["derived_length"] = derived_length(A)
    v["metabelian"] = is_metabelian(A)
    v["A^2"] = square(A)
    v["derived_series"] = list(derived_series(A).terms)
    v["lower_central_series"] = list(lower_central_series(A).terms)
    v["upper_central_series"] = list(upper_central_series(A).terms)
    v["Z(A)"] = center(A)
    v["Z^l(A)"] = left_center(A)
    v["Nil(A)"] = _attempt(nilradical, A)
    v["Rad(A)"] = _attempt(solvable_radical, A)
    v["Soc(A)"] = _attempt(socle, A)
    v["Asoc(A)"] = _attempt(abelian_socle, A)
    fd = _attempt(frattini, A)
    if isinstance(fd, Unsupported):
        for k in ("F(A)", "Phi(A)", "F is ideal", "maximal subalgebras"):
            v[k] = fd
    else:
        v["F(A)"] = fd.F
        v["Phi(A)"] = fd.Phi
        v["F is ideal"] = fd.f_is_ideal
        v["maximal subalgebras"] = len(fd.maximal_subalgebras)
    carts = _attempt(cartan_subalgebras, A)
    v["Cartan subalgebras"] = carts if isinstance(carts, Unsupported) else len(carts.cartans)
    if not A.field.is_finite:
        H = find_cartan(A, seed=seed)
        v["Cartan subalgebra (heuristic)"] = H if H is not None else Unsupported("no candidate verified")
    rad = v["Rad(A)"]
    v["semisimple"] = rad if isinstance(rad, Unsupported) else rad.is_zero()
    elem = _attempt(is_elementary, A)
    v["elementary"] = elem if isinstance(elem, Unsupported) else bool(elem)
    return StructureReport(A, v)


def archive_failure(A: LeibnizAlgebra, result: CheckResult, directory) -> Path:
    """Write the structure tensor and the witness of a failed check to disk."""
    text = dumps(A)
    d = Path(directory)
    d.mkdir(parents=True, exist_ok=True)
    stem = f"{result.name}-{hashlib.sha1(text.encode()).hexdigest()[:10]}"
    (d / f"{stem}.lz").write_text(text, encoding="utf-8")
    (d / f"{stem}.json").write_text(
        json.dumps({"check": result.name, "detail": result.detail, "witness": result.line(A)}, indent=2),
        encoding="utf-8",
    )
    return d / f"{stem}.lz"
