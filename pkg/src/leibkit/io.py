"""Text format for structure constants.

::

    leibniz-sc 1
    field GF 2
    dim 3
    basis x y z
    p 1 0 : 2*1
    p 0 1 : 2*1

Product lines give ``b_i b_j`` as a sum of ``k*coef`` terms with 0-based
indices; omitted pairs multiply to zero and ``#`` starts a comment.
"""
from __future__ import annotations

from fractions import Fraction
from pathlib import Path

from .algebra import LeibnizAlgebra
from .errors import ParseError
from .exactla import GF, QQ, FieldSpec, is_prime

MAGIC = "leibniz-sc"
VERSION = 1


def _int(tok, lineno, what):
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected an integer for {what}, got {tok!r}", lineno) from None


def _coef(F: FieldSpec, tok: str, lineno: int):
    if F.p is not None:
        c = _int(tok, lineno, "a coefficient")
        if not 0 <= c < F.p:
            raise ParseError(f"coefficient {c} outside 0..{F.p - 1}", lineno)
        return c
    num, _, den = tok.partition("/")
    try:
        return Fraction(int(num), int(den) if den else 1)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad rational coefficient {tok!r}", lineno) from None


def _parse_field(words, lineno) -> FieldSpec:
    if words == ["Q"]:
        return QQ
    if len(words) == 2 and words[0] == "GF":
        p = _int(words[1], lineno, "the characteristic")
        if not is_prime(p):
            raise ParseError(f"GF({p}): {p} is not prime", lineno)
        return GF(p)
    raise ParseError("expected 'field Q' or 'field GF <p>'", lineno)


def loads(text: str, check: bool = True) -> LeibnizAlgebra:
    """Parse a file body; ``check=False`` skips Leibniz validation."""
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].strip()
        if body:
            lines.append((lineno, body.split()))
    if not lines:
        raise ParseError("empty file")
    it = iter(lines)

    lineno, words = next(it)
    if words != [MAGIC, str(VERSION)]:
        raise ParseError(f"expected header '{MAGIC} {VERSION}'", lineno)
    lineno, words = next(it, (lineno, None))
    if not words or words[0] != "field":
        raise ParseError("expected a 'field' line", lineno)
    F = _parse_field(words[1:], lineno)
    lineno, words = next(it, (lineno, None))
    if not words or words[0] != "dim" or len(words) != 2:
        raise ParseError("expected 'dim <n>'", lineno)
    n = _int(words[1], lineno, "dim")
    if n < 0:
        raise ParseError("dim must be non-negative", lineno)

    labels = None
    products = {}
    for lineno, words in it:
        if words[0] == "basis":
            if labels is not None or products:
                raise ParseError("'basis' must come right after 'dim'", lineno)
            labels = tuple(words[1:])
            if len(labels) != n or len(set(labels)) != n:
                raise ParseError(f"basis needs {n} distinct names", lineno)
            continue
        if words[0] != "p" or len(words) < 4 or words[3] != ":":
            raise ParseError("expected 'p <i> <j> : <k>*<coef> [+ ...]'", lineno)
        i, j = (_int(w, lineno, "an index") for w in words[1:3])
        if not (0 <= i < n and 0 <= j < n):
            raise ParseError(f"index pair ({i}, {j}) outside 0..{n - 1}", lineno)
        if (i, j) in products:
            raise ParseError(f"product ({i}, {j}) given twice", lineno)
        terms = words[4:]
        if not terms or terms[1::2] != ["+"] * (len(terms) // 2) or len(terms) % 2 == 0:
            raise ParseError("terms must be '<k>*<coef>' joined by ' + '", lineno)
        vec = [F(0)] * n
        seen = set()
        for term in terms[::2]:
            k, star, c = term.partition("*")
            if not star:
                raise ParseError(f"term {term!r} lacks '*'", lineno)
            k = _int(k, lineno, "an index")
            if not 0 <= k < n or k in seen:
                raise ParseError(f"bad or repeated target index {k}", lineno)
            seen.add(k)
            vec[k] = F(_coef(F, c, lineno))
        products[(i, j)] = tuple(vec)
    return LeibnizAlgebra.from_products(F, n, products, labels=labels, check=check)


def dumps(A: LeibnizAlgebra) -> str:
    """Canonical emission: product lines in (i, j) order, zero terms dropped."""
    F = A.field
    out = [f"{MAGIC} {VERSION}", "field Q" if F.p is None else f"field GF {F.p}", f"dim {A.dim}"]
    if A.labels is not None:
        out.append("basis " + " ".join(A.labels))
    for i in range(A.dim):
        for j in range(A.dim):
            terms = [f"{k}*{c}" for k, c in enumerate(A.sc[i][j]) if c]
            if terms:
                out.append(f"p {i} {j} : " + " + ".join(terms))
    return "\n".join(out) + "\n"


def load(path, check: bool = True) -> LeibnizAlgebra:
    return loads(Path(path).read_text(encoding="utf-8"), check=check)


def dump(A: LeibnizAlgebra, path) -> None:
    Path(path).write_text(dumps(A), encoding="utf-8")
