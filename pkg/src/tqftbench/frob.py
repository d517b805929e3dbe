"""Non-extended 2D TQFTs from commutative Frobenius algebras.

The circle goes to ``A``; cup, cap, pants and copants go to the unit, the
counit, multiplication and the comultiplication ``x -> sum x b_i (x) b^i``
built from the pairing-dual basis.  A bordism is evaluated by multiplying
the matrices of its pants decomposition, with ``A^{(x)m}`` ordered so that
the first circle is the slowest index.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from . import bord2
from .algebras import Algebra, apply_form, dual_basis, pairing_matrix
from .exactlin import Matrix, rank


class DegeneratePairing(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class FrobeniusAlgebra:
    algebra: Algebra
    counit: tuple

    @property
    def field(self):
        return self.algebra.field

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def name(self) -> str:
        return self.algebra.name

    @property
    def unit(self) -> list:
        return self.algebra.unit_vector()

    def pairing(self) -> Matrix:
        return pairing_matrix(self.algebra, self.counit)

    @functools.cached_property
    def dual(self) -> list[list]:
        try:
            return dual_basis(self.algebra, self.counit)
        except ZeroDivisionError as exc:
            raise DegeneratePairing(f"{self.name}: pairing is degenerate") from exc

    def __repr__(self):
        return f"FrobeniusAlgebra({self.name}, dim={self.dim}, field={self.field})"


def frobenius(algebra: Algebra, counit: Sequence | None = None) -> FrobeniusAlgebra:
    """Attach a counit; the default is the coefficient of the first basis vector."""
    if counit is None:
        counit = [1] + [0] * (algebra.dim - 1)
    return FrobeniusAlgebra(algebra, tuple(algebra.field(c) for c in counit))


@dataclass
class ValidationReport:
    name: str
    violations: list[str]

    @property
    def ok(self) -> bool:
        return not self.violations

    def __str__(self):
        if self.ok:
            return f"{self.name}: valid"
        return f"{self.name}: " + "; ".join(self.violations)


def validate(a: FrobeniusAlgebra) -> ValidationReport:
    alg = a.algebra
    problems = []
    assoc = alg.associativity_violations(limit=3)
    if assoc:
        problems.append(f"associativity fails on basis triples {assoc}")
    if not alg.is_commutative():
        problems.append("not commutative")
    units = alg.unit_violations()
    if units:
        problems.append(f"unit fails on basis elements {units}")
    r = rank(a.pairing())
    if r < a.dim:
        problems.append(f"pairing degenerate (rank {r} < {a.dim})")
    return ValidationReport(a.name, problems)


def _require_pairing(a: FrobeniusAlgebra):
    a.dual  # raises DegeneratePairing


def handle_element(a: FrobeniusAlgebra) -> list:
    """``sum_i b_i b^i``; the handle operator is multiplication by it."""
    _require_pairing(a)
    alg = a.algebra
    out = alg.zero_vector()
    for i, d in enumerate(a.dual):
        prod = alg.mul(alg.basis_vector(i), d)
        out = [x + y for x, y in zip(out, prod)]
    return out


def handle_operator(a: FrobeniusAlgebra) -> Matrix:
    return a.algebra.left_matrix(handle_element(a))


# -- generator matrices -------------------------------------------------------


def unit_matrix(a: FrobeniusAlgebra) -> Matrix:
    return Matrix.from_columns(a.field, [a.unit], a.dim)


def counit_matrix(a: FrobeniusAlgebra) -> Matrix:
    return Matrix(a.field, [a.counit], a.dim)


def comultiplication_matrix(a: FrobeniusAlgebra) -> Matrix:
    """``dim^2 x dim`` matrix of ``x -> sum_i x b_i (x) b^i``."""
    _require_pairing(a)
    alg = a.algebra
    n = a.dim
    entries = []
    for col in range(n):
        for i, d in enumerate(a.dual):
            left = alg.mul_basis(col, i)
            for p, lp in enumerate(left):
                if lp == 0:
                    continue
                for q, dq in enumerate(d):
                    if dq != 0:
                        entries.append((p * n + q, col, lp * dq))
    return Matrix.from_sparse(a.field, n * n, n, entries)


def swap_matrix(field, n: int) -> Matrix:
    return Matrix.from_sparse(field, n * n, n * n, [(j * n + i, i * n + j, field.one) for i in range(n) for j in range(n)])


def piece_matrix(a: FrobeniusAlgebra, piece: str) -> Matrix:
    if piece == "cup":
        return unit_matrix(a)
    if piece == "cap":
        return counit_matrix(a)
    if piece == "pants":
        return a.algebra.multiplication_matrix()
    if piece == "copants":
        return comultiplication_matrix(a)
    if piece == "cylinder":
        return Matrix.identity(a.field, a.dim)
    if piece == "swap":
        return swap_matrix(a.field, a.dim)
    raise ValueError(f"unknown piece {piece!r}")


def _identity_power(a: FrobeniusAlgebra, k: int) -> Matrix:
    return Matrix.identity(a.field, a.dim**k)


def layer_matrix(a: FrobeniusAlgebra, layer: bord2.Layer) -> Matrix:
    m = piece_matrix(a, layer.piece)
    if layer.left:
        m = _identity_power(a, layer.left).kron(m)
    if layer.right:
        m = m.kron(_identity_power(a, layer.right))
    return m


def _piece_table(a: FrobeniusAlgebra, piece: str) -> tuple[int, dict]:
    """Sparse columns of a piece: input index tuple -> [(output tuple, coeff)]."""
    m = piece_matrix(a, piece)
    n = a.dim
    src, tgt = bord2.PIECES[piece]
    table = {}
    for col, ins in enumerate(itertools.product(range(n), repeat=src)):
        outs = []
        for row, val in enumerate(m.column(col)):
            if val != 0:
                outs.append((_digits(row, n, tgt), val))
        table[ins] = outs
    return src, table


def _digits(x: int, n: int, width: int) -> tuple:
    out = []
    for _ in range(width):
        x, r = divmod(x, n)
        out.append(r)
    return tuple(reversed(out))


def evaluate_layers(a: FrobeniusAlgebra, layers: Sequence[bord2.Layer], source: int = 0) -> Matrix:
    """Apply the layers one at a time as sparse tensor contractions.

    Each column of the result is carried as a dict from index tuples (first
    circle slowest) to coefficients, so only the slots a piece touches are
    rewritten.
    """
    n = a.dim
    width = source if not layers else layers[0].source
    cols = [{ins: a.field.one} for ins in itertools.product(range(n), repeat=width)]
    tables = {}
    for layer in layers:
        if layer.piece not in tables:
            tables[layer.piece] = _piece_table(a, layer.piece)
        k, table = tables[layer.piece]
        lo, hi = layer.left, layer.left + k
        new_cols = []
        for vec in cols:
            out: dict = {}
            for idx, c in vec.items():
                head, mid, tail = idx[:lo], idx[lo:hi], idx[hi:]
                for o, v in table[mid]:
                    key = head + o + tail
                    out[key] = out.get(key, 0) + c * v
            new_cols.append({key: v for key, v in out.items() if v != 0})
        cols = new_cols
        width = layer.target
    entries = []
    for j, vec in enumerate(cols):
        for idx, v in vec.items():
            row = 0
            for d in idx:
                row = row * n + d
            entries.append((row, j, v))
    return Matrix.from_sparse(a.field, n**width, len(cols), entries)


def closed_surface_value(a: FrobeniusAlgebra, genus: int):
    """``Z(Sigma_g) = counit(h^g(1))``."""
    h = handle_operator(a)
    v = a.unit
    for _ in range(genus):
        v = h.apply(v)
    return a.field(apply_form(a.counit, v))


def evaluate(a: FrobeniusAlgebra, b: bord2.Bordism) -> Matrix:
    """The linear map ``A^{(x)source} -> A^{(x)target}``.

    Closed components are scalar factors computed from the handle operator;
    the rest goes through the pants decomposition.
    """
    _require_pairing(a)
    open_part = bord2.Bordism(b.source, b.target, b.components, ())
    m = evaluate_layers(a, bord2.pants_decompose(open_part), b.source)
    scalar = a.field.one
    for g in b.closed:
        scalar = scalar * closed_surface_value(a, g)
    return m if scalar == 1 else m.scale(scalar)


def torus_value(a: FrobeniusAlgebra):
    return closed_surface_value(a, 1)


@dataclass
class Verdict:
    invertible: bool
    witness: str

    def __bool__(self):
        return self.invertible


def is_invertible_theory(a: FrobeniusAlgebra) -> Verdict:
    """Invertible iff ``Z(S^1) = A`` is one-dimensional with nonzero counit on the unit."""
    if a.dim != 1:
        return Verdict(False, f"Z(S^1) = {a.name} has dimension {a.dim}")
    lam = apply_form(a.counit, a.unit)
    if a.field.is_zero(lam):
        return Verdict(False, "Z(S^2) = counit(1) = 0")
    return Verdict(True, f"one-dimensional with counit(1) = {lam}")


@dataclass
class ExhibitEntry:
    name: str
    dim: int
    field: str
    torus: object
    torus_invertible: bool
    theory_invertible: bool

    @property
    def counterexample(self) -> bool:
        return self.torus_invertible and not self.theory_invertible

    def __str__(self):
        return (
            f"{self.name} field={self.field} dim={self.dim} Z(T2)={self.torus} "
            f"torus_scalar_invertible={self.torus_invertible} theory_invertible={self.theory_invertible}"
        )


def torus_counterexample_exhibit(corpus: Mapping[str, FrobeniusAlgebra] | Iterable[FrobeniusAlgebra]) -> list[ExhibitEntry]:
    """Algebras whose torus scalar is invertible although the theory is not."""
    items = corpus.items() if isinstance(corpus, Mapping) else ((a.name, a) for a in corpus)
    out = []
    for name, a in items:
        t = torus_value(a)
        entry = ExhibitEntry(name, a.dim, a.field.name, t, not a.field.is_zero(t), bool(is_invertible_theory(a)))
        if entry.counterexample:
            out.append(entry)
    return out
