"""Finite-dimensional unital algebras given by structure constants.

``table[i][j]`` is a tuple of ``(k, c)`` pairs meaning
``b_i * b_j = sum c * b_k``.  Vectors are plain lists of field elements in
the basis ``b_0, ..., b_{n-1}``.  The constructors at the bottom build the
algebras used throughout the workbench (matrix algebras, group algebras,
products and tensor products).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .exactlin import Field, Matrix, QQ


@dataclass(frozen=True, eq=False)
class Algebra:
    field: Field
    dim: int
    table: tuple
    unit: tuple
    name: str = "A"
    basis_names: tuple = dc_field(default=())

    @classmethod
    def from_constants(cls, field: Field, dim: int, products: dict, unit: Sequence, name="A", basis_names=()):
        """``products`` maps ``(i, j)`` to ``{k: coeff}``; missing pairs multiply to zero."""
        table = []
        for i in range(dim):
            row = []
            for j in range(dim):
                entry = products.get((i, j), {})
                terms = tuple((k, field(c)) for k, c in sorted(entry.items()) if field(c) != 0)
                row.append(terms)
            table.append(tuple(row))
        return cls(field, dim, tuple(table), tuple(field(u) for u in unit), name, tuple(basis_names))

    # -- vectors ---------------------------------------------------------

    def zero_vector(self) -> list:
        return [self.field.zero] * self.dim

    def basis_vector(self, i: int) -> list:
        v = self.zero_vector()
        v[i] = self.field.one
        return v

    def unit_vector(self) -> list:
        return list(self.unit)

    def mul(self, x: Sequence, y: Sequence) -> list:
        out = self.zero_vector()
        table = self.table
        for i, a in enumerate(x):
            if a == 0:
                continue
            row = table[i]
            for j, b in enumerate(y):
                if b == 0:
                    continue
                ab = a * b
                for k, c in row[j]:
                    out[k] = out[k] + ab * c
        return out

    def mul_basis(self, i: int, j: int) -> list:
        out = self.zero_vector()
        for k, c in self.table[i][j]:
            out[k] = c
        return out

    def left_matrix(self, x: Sequence) -> Matrix:
        """Matrix of ``y -> x y``."""
        cols = [self.mul(x, self.basis_vector(j)) for j in range(self.dim)]
        return Matrix.from_columns(self.field, cols, self.dim)

    def right_matrix(self, x: Sequence) -> Matrix:
        """Matrix of ``y -> y x``."""
        cols = [self.mul(self.basis_vector(j), x) for j in range(self.dim)]
        return Matrix.from_columns(self.field, cols, self.dim)

    def multiplication_matrix(self) -> Matrix:
        """The ``dim x dim^2`` matrix of ``A (x) A -> A``; column ``i*dim + j`` is ``b_i b_j``."""
        n = self.dim
        entries = []
        for i in range(n):
            for j in range(n):
                for k, c in self.table[i][j]:
                    entries.append((k, i * n + j, c))
        return Matrix.from_sparse(self.field, n, n * n, entries)

    # -- axioms ----------------------------------------------------------

    def associativity_violations(self, limit: int | None = None) -> list[tuple[int, int, int]]:
        bad = []
        n = self.dim
        for i, j, k in itertools.product(range(n), repeat=3):
            lhs = self.mul(self.mul_basis(i, j), self.basis_vector(k))
            rhs = self.mul(self.basis_vector(i), self.mul_basis(j, k))
            if lhs != rhs:
                bad.append((i, j, k))
                if limit is not None and len(bad) >= limit:
                    break
        return bad

    def unit_violations(self) -> list[int]:
        u = self.unit_vector()
        bad = []
        for i in range(self.dim):
            b = self.basis_vector(i)
            if self.mul(u, b) != b or self.mul(b, u) != b:
                bad.append(i)
        return bad

    def is_commutative(self) -> bool:
        n = self.dim
        return all(self.table[i][j] == self.table[j][i] for i in range(n) for j in range(i + 1, n))

    def is_valid(self) -> bool:
        return not self.associativity_violations(limit=1) and not self.unit_violations()

    # -- derived algebras ------------------------------------------------

    def opposite(self) -> "Algebra":
        n = self.dim
        table = tuple(tuple(self.table[j][i] for j in range(n)) for i in range(n))
        return Algebra(self.field, n, table, self.unit, self.name + "^op", self.basis_names)

    def over(self, field: Field) -> "Algebra":
        """Reduce the structure constants into another field (e.g. Q to F_p)."""
        n = self.dim
        table = tuple(
            tuple(tuple((k, field(c)) for k, c in self.table[i][j] if field(c) != 0) for j in range(n)) for i in range(n)
        )
        return Algebra(field, n, table, tuple(field(u) for u in self.unit), self.name, self.basis_names)

    def __repr__(self):
        return f"Algebra({self.name}, dim={self.dim}, field={self.field})"


def tensor(a: Algebra, b: Algebra, name: str | None = None) -> Algebra:
    """``a (x) b`` with basis ``a_i (x) b_j`` at index ``i * dim(b) + j``."""
    if a.field != b.field:
        raise ValueError("tensor factors live over different fields")
    m = b.dim
    products = {}
    for i, k in itertools.product(range(a.dim), repeat=2):
        for j, l in itertools.product(range(m), repeat=2):
            out = {}
            for p, c in a.table[i][k]:
                for q, d in b.table[j][l]:
                    idx = p * m + q
                    out[idx] = out.get(idx, 0) + c * d
            if out:
                products[(i * m + j, k * m + l)] = out
    unit = [x * y for x in a.unit for y in b.unit]
    names = tuple(f"{x}*{y}" for x in (a.basis_names or range(a.dim)) for y in (b.basis_names or range(m)))
    return Algebra.from_constants(a.field, a.dim * m, products, unit, name or f"{a.name}(x){b.name}", names)


def enveloping(a: Algebra) -> Algebra:
    """``A^e = A (x) A^op``."""
    return tensor(a, a.opposite(), name=f"{a.name}^e")


def product(a: Algebra, b: Algebra, name: str | None = None) -> Algebra:
    """Direct product ``a x b``; basis of ``a`` first."""
    if a.field != b.field:
        raise ValueError("product factors live over different fields")
    n = a.dim
    products = {}
    for i, j in itertools.product(range(n), repeat=2):
        if a.table[i][j]:
            products[(i, j)] = dict(a.table[i][j])
    for i, j in itertools.product(range(b.dim), repeat=2):
        if b.table[i][j]:
            products[(n + i, n + j)] = {n + k: c for k, c in b.table[i][j]}
    names = tuple(a.basis_names or (f"a{i}" for i in range(n))) + tuple(b.basis_names or (f"b{i}" for i in range(b.dim)))
    return Algebra.from_constants(a.field, n + b.dim, products, list(a.unit) + list(b.unit), name or f"{a.name}x{b.name}", names)


# ---------------------------------------------------------------------------
# standard algebras


def base_field(field: Field = QQ) -> Algebra:
    return Algebra.from_constants(field, 1, {(0, 0): {0: 1}}, [1], name=f"{field.name}", basis_names=("1",))


def matrix_algebra(n: int, field: Field = QQ) -> Algebra:
    """M_n with matrix units ``E_pq`` at index ``p*n + q``."""
    products = {}
    for p, q, r in itertools.product(range(n), repeat=3):
        products[(p * n + q, q * n + r)] = {p * n + r: 1}
    unit = [1 if p == q else 0 for p in range(n) for q in range(n)]
    names = tuple(f"E{p}{q}" for p in range(n) for q in range(n))
    return Algebra.from_constants(field, n * n, products, unit, name=f"M{n}({field.name})", basis_names=names)


def upper_triangular(n: int, field: Field = QQ) -> Algebra:
    idx = [(p, q) for p in range(n) for q in range(n) if p <= q]
    pos = {pq: i for i, pq in enumerate(idx)}
    products = {}
    for (p, q), (q2, r) in itertools.product(idx, repeat=2):
        if q == q2:
            products[(pos[(p, q)], pos[(q2, r)])] = {pos[(p, r)]: 1}
    unit = [1 if p == q else 0 for p, q in idx]
    return Algebra.from_constants(field, len(idx), products, unit, name=f"T{n}({field.name})", basis_names=tuple(f"E{p}{q}" for p, q in idx))


def group_algebra(elements: Sequence, multiply, field: Field = QQ, name="k[G]") -> Algebra:
    """Group algebra from an explicit element list; ``elements[0]`` must be the identity."""
    pos = {g: i for i, g in enumerate(elements)}
    products = {}
    for g, h in itertools.product(elements, repeat=2):
        products[(pos[g], pos[h])] = {pos[multiply(g, h)]: 1}
    unit = [1] + [0] * (len(elements) - 1)
    return Algebra.from_constants(field, len(elements), products, unit, name=name, basis_names=tuple(str(g) for g in elements))


def cyclic_group_algebra(n: int, field: Field = QQ) -> Algebra:
    return group_algebra(list(range(n)), lambda a, b: (a + b) % n, field, name=f"{field.name}[Z/{n}]")


def _s3():
    perms = list(itertools.permutations(range(3)))
    perms.sort(key=lambda p: (p != (0, 1, 2), p))
    return perms, lambda a, b: tuple(a[b[i]] for i in range(3))


def symmetric_group_algebra(field: Field = QQ) -> Algebra:
    elements, mult = _s3()
    return group_algebra(elements, mult, field, name=f"{field.name}[S3]")


def _q8():
    # quaternion units as (sign, letter) with letter in 1, i, j, k
    letters = ["1", "i", "j", "k"]
    table = {
        ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
        ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
        ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
    }
    elements = [(s, l) for s in (1, -1) for l in letters]

    def mult(a, b):
        s, l = table[(a[1], b[1])]
        return (a[0] * b[0] * s, l)

    return elements, mult


def quaternion_group_algebra(field: Field = QQ) -> Algebra:
    elements, mult = _q8()
    return group_algebra(elements, mult, field, name=f"{field.name}[Q8]")


def field_power(k: int, field: Field = QQ) -> Algebra:
    """``field^k`` with the idempotent basis."""
    products = {(i, i): {i: 1} for i in range(k)}
    return Algebra.from_constants(field, k, products, [1] * k, name="x".join([field.name] * k), basis_names=tuple(f"e{i}" for i in range(k)))


def pairing_matrix(a: Algebra, form: Sequence) -> Matrix:
    """``g_ij = form(b_i b_j)``."""
    n = a.dim
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = a.field.zero
            for k, c in a.table[i][j]:
                acc = acc + c * form[k]
            row.append(acc)
        rows.append(row)
    return Matrix(a.field, rows, n)


def dual_basis(a: Algebra, form: Sequence) -> list[list]:
    """Vectors ``b^j`` with ``form(b_i b^j) = delta_ij``; raises ZeroDivisionError if degenerate."""
    ginv = pairing_matrix(a, form).inverse()
    n = a.dim
    return [[ginv[k, j] for k in range(n)] for j in range(n)]


def casimir(a: Algebra, form: Sequence) -> list[tuple[list, list]]:
    """The pairs ``(b_i, b^i)`` making up ``sum_i b_i (x) b^i``."""
    return [(a.basis_vector(i), d) for i, d in enumerate(dual_basis(a, form))]


def apply_form(form: Sequence, vec: Sequence):
    acc = 0
    for f, v in zip(form, vec):
        if f != 0 and v != 0:
            acc = acc + f * v
    return acc
