"""Exact structure theory of finite-dimensional Leibniz algebras."""
from .algebra import (
    LeibnizAlgebra,
    check_leibniz,
    direct_sum,
    is_ideal,
    is_lie,
    is_subalgebra,
    product,
    quotient,
    restrict,
    semidirect_sum,
)
from .cartan import cartan_subalgebras, find_cartan, is_cartan
from .constructions import (
    Type2Spec,
    counterexample,
    heisenberg_example,
    sl2,
    type1,
    type2,
    type_star,
)
from .errors import (
    LeibkitError,
    LeibnizViolationError,
    ParseError,
    ResourceGuardError,
    UnsupportedBackendError,
)
from .exactla import GF, QQ, FieldSpec, Matrix, Subspace
from .guard import EnumerationGuard
from .io import dump, dumps, load, loads
from .radicals import abelian_socle, frattini, is_elementary, nilradical, socle, solvable_radical
from .series import center, derived_series, is_nilpotent, is_solvable, lower_central_series
from .theorems import CHECKS, CheckResult, Status, report, run_all, run_check

__version__ = "0.1.0"

__all__ = [
    "CHECKS",
    "CheckResult",
    "EnumerationGuard",
    "FieldSpec",
    "GF",
    "LeibkitError",
    "LeibnizAlgebra",
    "LeibnizViolationError",
    "Matrix",
    "ParseError",
    "QQ",
    "ResourceGuardError",
    "Status",
    "Subspace",
    "Type2Spec",
    "UnsupportedBackendError",
    "abelian_socle",
    "cartan_subalgebras",
    "center",
    "check_leibniz",
    "counterexample",
    "derived_series",
    "direct_sum",
    "dump",
    "dumps",
    "find_cartan",
    "frattini",
    "heisenberg_example",
    "is_cartan",
    "is_elementary",
    "is_ideal",
    "is_lie",
    "is_nilpotent",
    "is_solvable",
    "is_subalgebra",
    "load",
    "loads",
    "lower_central_series",
    "nilradical",
    "product",
    "quotient",
    "report",
    "restrict",
    "run_all",
    "run_check",
    "semidirect_sum",
    "sl2",
    "socle",
    "solvable_radical",
    "type1",
    "type2",
    "type_star",
]
