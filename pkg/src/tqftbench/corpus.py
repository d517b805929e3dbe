"""Algebra text files and the built-in algebra corpora.

File format (indices are 0-based, ``#`` starts a comment)::

    name Q[Z/2]
    field Q
    dim 2
    mult 0 0 -> (0:1)
    mult 0 1 -> (1:1)
    mult 1 0 -> (1:1)
    mult 1 1 -> (0:1)
    unit (1, 0)
    counit (1, 0)
    trace (1, 0)

Missing ``mult`` pairs multiply to zero.  ``counit`` is the Frobenius form
for the commutative evaluator; ``trace`` optionally fixes the symmetric form
for the once-extended one.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable

from . import algebras as alg
from .algebras import Algebra
from .exactlin import GF, QQ, Field, field_from_name
from .frob import FrobeniusAlgebra, frobenius


class AlgebraParseError(ValueError):
    def __init__(self, msg: str, line: int | None = None, path: str | None = None):
        self.msg = msg
        self.line = line
        self.path = path
        where = ":".join(str(x) for x in (path, line) if x is not None)
        super().__init__(f"{where}: {msg}" if where else msg)


@dataclass
class AlgebraFile:
    algebra: Algebra
    counit: tuple | None = None
    trace: tuple | None = None

    @property
    def name(self) -> str:
        return self.algebra.name

    def frobenius(self) -> FrobeniusAlgebra:
        return frobenius(self.algebra, self.counit)


_MULT = re.compile(r"^mult\s+(\d+)\s+(\d+)\s*->\s*\((.*)\)$")
_VEC = re.compile(r"^\((.*)\)$")


def _coeff(field: Field, tok: str, lineno: int):
    try:
        return field(Fraction(tok.strip()))
    except (ValueError, ZeroDivisionError, TypeError):
        raise AlgebraParseError(f"bad coefficient {tok.strip()!r}", lineno) from None


def _vector(field: Field, body: str, dim: int, lineno: int, what: str) -> tuple:
    m = _VEC.match(body.strip())
    if not m:
        raise AlgebraParseError(f"{what} must be written as (c_0, ..., c_n-1)", lineno)
    toks = [t for t in m.group(1).split(",") if t.strip()]
    if len(toks) != dim:
        raise AlgebraParseError(f"{what} has {len(toks)} entries, expected {dim}", lineno)
    return tuple(_coeff(field, t, lineno) for t in toks)


def parse_algebra(text: str, name: str = "A", path: str | None = None) -> AlgebraFile:
    field = None
    dim = None
    products: dict = {}
    unit = counit = trace = None
    try:
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            head, _, rest = line.partition(" ")
            rest = rest.strip()
            if head == "name":
                name = rest
            elif head == "field":
                try:
                    field = field_from_name(rest)
                except ValueError:
                    raise AlgebraParseError(f"unknown field {rest!r}", lineno) from None
            elif head == "dim":
                if not rest.isdigit() or int(rest) < 1:
                    raise AlgebraParseError(f"bad dimension {rest!r}", lineno)
                dim = int(rest)
            elif head in ("mult", "unit", "counit", "trace"):
                if field is None or dim is None:
                    raise AlgebraParseError("'field' and 'dim' must come first", lineno)
                if head == "mult":
                    m = _MULT.match(line)
                    if not m:
                        raise AlgebraParseError("expected 'mult i j -> (k:coeff, ...)'", lineno)
                    i, j = int(m.group(1)), int(m.group(2))
                    if i >= dim or j >= dim:
                        raise AlgebraParseError(f"index out of range for dim {dim}", lineno)
                    entry = {}
                    for term in m.group(3).split(","):
                        if not term.strip():
                            continue
                        k, sep, c = term.partition(":")
                        if not sep or not k.strip().isdigit() or int(k) >= dim:
                            raise AlgebraParseError(f"bad term {term.strip()!r}", lineno)
                        entry[int(k)] = entry.get(int(k), field.zero) + _coeff(field, c, lineno)
                    products[(i, j)] = entry
                else:
                    vec = _vector(field, rest, dim, lineno, head)
                    if head == "unit":
                        unit = vec
                    elif head == "counit":
                        counit = vec
                    else:
                        trace = vec
            else:
                raise AlgebraParseError(f"unknown directive {head!r}", lineno)
        if field is None or dim is None:
            raise AlgebraParseError("missing 'field' or 'dim' line")
        if unit is None:
            raise AlgebraParseError("missing 'unit' line")
    except AlgebraParseError as exc:
        if path and exc.path is None:
            raise AlgebraParseError(exc.msg, exc.line, path) from None
        raise
    a = Algebra.from_constants(field, dim, products, unit, name=name)
    return AlgebraFile(a, counit, trace)


def load_algebra(path) -> AlgebraFile:
    p = Path(path)
    return parse_algebra(p.read_text(), name=p.stem, path=str(p))


def format_algebra(a: Algebra, counit=None, trace=None) -> str:
    lines = [f"name {a.name}", f"field {a.field.name}", f"dim {a.dim}"]
    for i in range(a.dim):
        for j in range(a.dim):
            terms = a.table[i][j]
            if terms:
                lines.append(f"mult {i} {j} -> (" + ", ".join(f"{k}:{c}" for k, c in terms) + ")")
    lines.append("unit (" + ", ".join(str(u) for u in a.unit) + ")")
    if counit is not None:
        lines.append("counit (" + ", ".join(str(c) for c in counit) + ")")
    if trace is not None:
        lines.append("trace (" + ", ".join(str(c) for c in trace) + ")")
    return "\n".join(lines) + "\n"


def load_corpus(paths: Iterable) -> list[AlgebraFile]:
    """Every ``*.alg`` file in the given files or directories, in sorted order."""
    files = []
    for p in paths:
        p = Path(p)
        files.extend(sorted(p.glob("*.alg")) if p.is_dir() else [p])
    return [load_algebra(f) for f in files]


# -- built-in corpora ----------------------------------------------------------------

FIELDS = {"Q": QQ, "F2": GF(2), "F3": GF(3), "F5": GF(5)}


def frobenius_corpus(fields=("Q", "F2", "F3", "F5")) -> dict[str, FrobeniusAlgebra]:
    """Commutative Frobenius algebras: k, k[Z/n] for n <= 6, k x k and k x k x k."""
    out = {}
    for fname in fields:
        k = FIELDS[fname] if isinstance(fname, str) else fname
        # group algebras use the coefficient of the identity, products the sum of coordinates
        items = [frobenius(alg.base_field(k))]
        items += [frobenius(alg.cyclic_group_algebra(n, k)) for n in range(2, 7)]
        items += [frobenius(alg.field_power(m, k), [1] * m) for m in (2, 3)]
        for a in items:
            out[a.name] = a
    return out


def _eligible_group(order: int, k: Field) -> bool:
    p = getattr(k, "p", 0)
    return p == 0 or order % p != 0


def azumaya_corpus(fields=("Q", "F3", "F5"), include_f2: bool = True) -> dict[str, Algebra]:
    """Possibly noncommutative algebras for the once-extended harness.

    Group algebras are only included when the characteristic does not divide
    the group order; the F2 entries add one ineligible algebra on purpose.
    """
    out = {}
    for fname in fields:
        k = FIELDS[fname]
        items = [alg.base_field(k)]
        items += [alg.matrix_algebra(n, k) for n in (2, 3)]
        items += [alg.cyclic_group_algebra(n, k) for n in range(2, 7) if _eligible_group(n, k)]
        if _eligible_group(6, k):
            items.append(alg.symmetric_group_algebra(k))
        if _eligible_group(8, k):
            items.append(alg.quaternion_group_algebra(k))
        m2 = alg.matrix_algebra(2, k)
        items.append(alg.product(m2, alg.base_field(k)))
        items.append(alg.product(m2, m2))
        for a in items:
            out[a.name] = a
    if include_f2:
        f2 = FIELDS["F2"]
        for a in (alg.matrix_algebra(2, f2), alg.cyclic_group_algebra(2, f2), alg.cyclic_group_algebra(3, f2)):
            out[a.name] = a
    return out
