"""Exact linear algebra over Q and prime fields, plus tolerance-based complex matrices.

Field elements are plain Python objects with arithmetic operators:
:class:`fractions.Fraction` for Q, :class:`FpElement` subclasses for F_p
(one class per prime, built by :func:`GF`) and :class:`complex` for C.
A :class:`Field` object supplies coercion and the zero test, which is the
only place where the complex tolerance enters.

Elimination works on sparse rows (dicts keyed by column), which keeps the
large but very sparse relation systems produced by bimodule tensor
products cheap.
"""

from __future__ import annotations

import functools
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

DEFAULT_TOLERANCE = 1e-9


class FieldMismatch(TypeError):
    pass


# ---------------------------------------------------------------------------
# prime field elements


class FpElement:
    """Element of F_p; ``v`` is always reduced into ``range(p)``."""

    __slots__ = ("v",)
    p: int = 0

    def __init__(self, value=0):
        p = self.p
        if isinstance(value, FpElement):
            if value.p != p:
                raise FieldMismatch(f"cannot coerce F_{value.p} element into F_{p}")
            self.v = value.v
        elif isinstance(value, Fraction):
            if value.denominator % p == 0:
                raise ZeroDivisionError(f"{value} has no image in F_{p}")
            self.v = value.numerator * pow(value.denominator, -1, p) % p
        else:
            self.v = int(value) % p

    def _other(self, other):
        if isinstance(other, FpElement):
            if other.p != self.p:
                raise FieldMismatch(f"F_{self.p} vs F_{other.p}")
            return other.v
        if isinstance(other, int):
            return other % self.p
        if isinstance(other, Fraction):
            return type(self)(other).v
        return NotImplemented

    def _new(self, v):
        e = object.__new__(type(self))
        e.v = v % self.p
        return e

    def __add__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._new(self.v + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._new(self.v - o)

    def __rsub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._new(o - self.v)

    def __mul__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._new(self.v * o)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        if o == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return self._new(self.v * pow(o, -1, self.p))

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        return self._new(o) / self

    def __neg__(self):
        return self._new(-self.v)

    def __pos__(self):
        return self

    def __pow__(self, n: int):
        if n < 0:
            if self.v == 0:
                raise ZeroDivisionError(f"0 has no inverse in F_{self.p}")
            return self._new(pow(pow(self.v, -1, self.p), -n, self.p))
        return self._new(pow(self.v, n, self.p))

    def __eq__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        return self.v == o

    def __hash__(self):
        return hash((self.p, self.v))

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"{self.v} (mod {self.p})"

    def __str__(self):
        return str(self.v)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


# ---------------------------------------------------------------------------
# fields


class Field:
    name = "?"
    characteristic = 0
    exact = True

    def __call__(self, x):
        raise NotImplementedError

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def is_zero(self, x) -> bool:
        return x == 0

    def eq(self, a, b) -> bool:
        return self.is_zero(a - b)

    def sqrt(self, x):
        """A square root of ``x`` in the field, or None."""
        return None

    def elements(self):
        raise TypeError(f"{self.name} is infinite")

    def __repr__(self):
        return self.name


class RationalField(Field):
    name = "Q"

    def __call__(self, x):
        if isinstance(x, FpElement):
            raise FieldMismatch("cannot lift an F_p element to Q")
        if isinstance(x, complex):
            raise FieldMismatch("cannot coerce a complex number into Q")
        if isinstance(x, float):
            return Fraction(x).limit_denominator(10**12)
        return Fraction(x)

    def sqrt(self, x):
        x = Fraction(x)
        if x < 0:
            return None
        n, d = x.numerator, x.denominator
        rn, rd = _isqrt_exact(n), _isqrt_exact(d)
        if rn is None or rd is None:
            return None
        return Fraction(rn, rd)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")


def _isqrt_exact(n: int):
    import math

    r = math.isqrt(n)
    return r if r * r == n else None


class PrimeField(Field):
    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.name = f"F{p}"
        self.element_type = type(f"F{p}Element", (FpElement,), {"__slots__": (), "p": p})

    def __call__(self, x):
        return self.element_type(x)

    def sqrt(self, x):
        x = self(x)
        for r in range(self.p):
            if (r * r - x.v) % self.p == 0:
                return self(r)
        return None

    def elements(self):
        return [self(i) for i in range(self.p)]

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("F", self.p))


class ComplexField(Field):
    exact = False

    def __init__(self, tolerance: float = DEFAULT_TOLERANCE):
        if tolerance < 0:
            raise ValueError("tolerance must be non-negative")
        self.tolerance = tolerance
        self.name = "C"

    def __call__(self, x):
        if isinstance(x, FpElement):
            raise FieldMismatch("cannot coerce an F_p element into C")
        return complex(x)

    def is_zero(self, x) -> bool:
        return abs(x) <= self.tolerance

    def sqrt(self, x):
        return complex(x) ** 0.5

    def __eq__(self, other):
        return isinstance(other, ComplexField) and other.tolerance == self.tolerance

    def __hash__(self):
        return hash(("C", self.tolerance))


QQ = RationalField()


@functools.lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    """The prime field F_p (cached, so ``GF(5) is GF(5)``)."""
    return PrimeField(p)


def CC(tolerance: float = DEFAULT_TOLERANCE) -> ComplexField:
    return ComplexField(tolerance)


def field_from_name(name: str) -> Field:
    """Parse ``Q``, ``F5``, ``Fp5``, ``GF(5)`` or ``C``."""
    s = name.strip()
    if s in ("Q", "QQ"):
        return QQ
    if s in ("C", "CC"):
        return CC()
    for prefix in ("GF(", "Fp", "F"):
        if s.startswith(prefix):
            digits = s[len(prefix):].rstrip(")")
            if digits.isdigit():
                return GF(int(digits))
    raise ValueError(f"unknown field {name!r}")


# ---------------------------------------------------------------------------
# matrices


class Matrix:
    """Immutable dense matrix over a single field."""

    __slots__ = ("field", "rows", "cols", "_data")

    def __init__(self, field: Field, rows: Sequence[Sequence], cols: int | None = None):
        data = tuple(tuple(field(x) for x in r) for r in rows)
        if cols is None:
            cols = len(data[0]) if data else 0
        if any(len(r) != cols for r in data):
            raise ValueError("matrix rows have unequal lengths")
        self.field = field
        self.rows = len(data)
        self.cols = cols
        self._data = data

    @classmethod
    def _raw(cls, field, data, cols):
        m = object.__new__(cls)
        m.field = field
        m.rows = len(data)
        m.cols = cols
        m._data = data
        return m

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int) -> "Matrix":
        z = field.zero
        return cls._raw(field, tuple((z,) * cols for _ in range(rows)), cols)

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        z, o = field.zero, field.one
        return cls._raw(field, tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)), n)

    @classmethod
    def from_columns(cls, field: Field, columns: Sequence[Sequence], rows: int | None = None) -> "Matrix":
        if not columns:
            return cls.zeros(field, rows or 0, 0)
        return cls(field, list(zip(*columns)), len(columns))

    @classmethod
    def from_sparse(cls, field: Field, rows: int, cols: int, entries) -> "Matrix":
        """Build from an iterable of ``(i, j, value)``; repeated positions add up."""
        grid = [[field.zero] * cols for _ in range(rows)]
        for i, j, v in entries:
            grid[i][j] = grid[i][j] + v
        return cls._raw(field, tuple(tuple(r) for r in grid), cols)

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        return self._data[i][j]

    def row(self, i: int) -> tuple:
        return self._data[i]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self._data)

    def tolists(self) -> list[list]:
        return [list(r) for r in self._data]

    def transpose(self) -> "Matrix":
        return Matrix._raw(self.field, tuple(zip(*self._data)) if self.rows else (), self.rows) if self.cols else Matrix.zeros(self.field, 0, self.rows)

    T = property(transpose)

    def _check(self, other: "Matrix"):
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        z = self.field.zero
        ocols = other.cols
        odata = other._data
        out = []
        for r in self._data:
            acc = [z] * ocols
            for k, a in enumerate(r):
                if a == 0:
                    continue
                orow = odata[k]
                for j in range(ocols):
                    b = orow[j]
                    if b != 0:
                        acc[j] = acc[j] + a * b
            out.append(tuple(acc))
        return Matrix._raw(self.field, tuple(out), ocols)

    def apply(self, vec: Sequence) -> list:
        if len(vec) != self.cols:
            raise ValueError(f"vector of length {len(vec)} for {self.shape} matrix")
        z = self.field.zero
        out = []
        for r in self._data:
            acc = z
            for a, b in zip(r, vec):
                if a != 0 and b != 0:
                    acc = acc + a * b
            out.append(acc)
        return out

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Matrix._raw(self.field, tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self._data, other._data)), self.cols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c) -> "Matrix":
        c = self.field(c)
        return Matrix._raw(self.field, tuple(tuple(c * a for a in r) for r in self._data), self.cols)

    def kron(self, other: "Matrix") -> "Matrix":
        """Kronecker product; the left factor indexes the slow coordinate."""
        self._check(other)
        out = []
        for r in self._data:
            for s in other._data:
                out.append(tuple(a * b for a in r for b in s))
        return Matrix._raw(self.field, tuple(out), self.cols * other.cols)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.shape != other.shape or self.field != other.field:
            return False
        if self.field.exact:
            return self._data == other._data
        iz = self.field.is_zero
        return all(iz(a - b) for r, s in zip(self._data, other._data) for a, b in zip(r, s))

    def __hash__(self):
        if not self.field.exact:
            raise TypeError("complex matrices are unhashable")
        return hash((self.shape, self._data))

    def is_zero(self) -> bool:
        iz = self.field.is_zero
        return all(iz(a) for r in self._data for a in r)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def rank(self) -> int:
        return rank(self)

    def is_invertible(self) -> bool:
        return self.is_square() and rank(self) == self.rows

    def inverse(self) -> "Matrix":
        return inverse(self)

    def __repr__(self):
        return f"Matrix({self.field}, {self.rows}x{self.cols})"

    def __str__(self):
        if not self.rows:
            return f"[{self.rows}x{self.cols} matrix]"
        cells = [[str(a) for a in r] for r in self._data]
        w = max(len(c) for r in cells for c in r) if self.cols else 0
        return "\n".join("[" + " ".join(c.rjust(w) for c in r) + "]" for r in cells)


def block_diagonal(blocks: Sequence[Matrix]) -> Matrix:
    field = blocks[0].field
    rows = sum(b.rows for b in blocks)
    cols = sum(b.cols for b in blocks)
    entries = []
    r0 = c0 = 0
    for b in blocks:
        for i in range(b.rows):
            for j in range(b.cols):
                if b[i, j] != 0:
                    entries.append((r0 + i, c0 + j, b[i, j]))
        r0 += b.rows
        c0 += b.cols
    return Matrix.from_sparse(field, rows, cols, entries)


# ---------------------------------------------------------------------------
# elimination


class _Echelon:
    """Incremental reduced row echelon form over sparse rows.

    Stored rows have a 1 in their pivot column and zeros in every other
    pivot column, so reducing a new row is one subtraction per pivot hit.
    """

    def __init__(self, field: Field):
        self.field = field
        self.pivots: dict[int, dict] = {}

    def _axpy(self, row: dict, f, other: dict):
        iz = self.field.is_zero
        for k, v in other.items():
            nv = row.get(k, 0) - f * v
            if iz(nv):
                row.pop(k, None)
            else:
                row[k] = nv

    def reduce(self, row: dict) -> dict:
        iz = self.field.is_zero
        row = {c: v for c, v in row.items() if not iz(v)}
        pivots = self.pivots
        for c in [c for c in row if c in pivots]:
            f = row.get(c)
            if f is not None:
                self._axpy(row, f, pivots[c])
                row.pop(c, None)
        return row

    def add(self, row: dict) -> bool:
        """Insert a row; return True iff it was independent of the stored ones."""
        row = self.reduce(row)
        if not row:
            return False
        if self.field.exact:
            c = min(row)
        else:
            # largest remaining entry as pivot keeps the float elimination tame
            c = max(row, key=lambda k: abs(row[k]))
        inv = 1 / row[c]
        new = {k: v * inv for k, v in row.items()}
        new[c] = self.field.one
        for r in self.pivots.values():
            f = r.get(c)
            if f is not None:
                self._axpy(r, f, new)
                r.pop(c, None)
        self.pivots[c] = new
        return True

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def rref(self) -> dict[int, dict]:
        """Reduced rows keyed by pivot column (copies)."""
        return {c: dict(r) for c, r in self.pivots.items()}


def _sparse(vec: Sequence) -> dict:
    return {i: v for i, v in enumerate(vec) if v != 0}


def _echelon_of_rows(field: Field, rows: Iterable[Sequence]) -> _Echelon:
    ech = _Echelon(field)
    for r in rows:
        ech.add(_sparse(r))
    return ech


def rank(m: Matrix) -> int:
    return _echelon_of_rows(m.field, m._data).rank


def kernel_basis(m: Matrix) -> list[list]:
    """Basis of ``{v : m v = 0}``, one vector per free column of the RREF."""
    field = m.field
    rr = _echelon_of_rows(field, m._data).rref()
    free = [j for j in range(m.cols) if j not in rr]
    basis = []
    for f in free:
        v = [field.zero] * m.cols
        v[f] = field.one
        for p, r in rr.items():
            if f in r:
                v[p] = -r[f]
        basis.append(v)
    return basis


class Quotient(NamedTuple):
    """``V / span(relations)`` with coordinates on a complement of the relations.

    ``projection`` is dim x ambient and kills every relation; ``section`` is
    ambient x dim with ``projection @ section == identity``.
    """

    dim: int
    projection: Matrix
    section: Matrix


def quotient_space(ambient_dim: int, relations: Iterable[Sequence | dict], field: Field = QQ) -> Quotient:
    ech = _Echelon(field)
    for r in relations:
        if isinstance(r, dict):
            ech.add(r)
        else:
            if len(r) != ambient_dim:
                raise ValueError(f"relation of length {len(r)} in ambient dimension {ambient_dim}")
            ech.add(_sparse(r))
    return _quotient_from_echelon(field, ambient_dim, ech)


def _quotient_from_echelon(field: Field, ambient_dim: int, ech: _Echelon) -> Quotient:
    rr = ech.rref()
    free = [j for j in range(ambient_dim) if j not in rr]
    pos = {f: i for i, f in enumerate(free)}
    entries = [(i, f, field.one) for i, f in enumerate(free)]
    for p, r in rr.items():
        for k, v in r.items():
            if k != p:
                entries.append((pos[k], p, -v))
    projection = Matrix.from_sparse(field, len(free), ambient_dim, entries)
    section = Matrix.from_sparse(field, ambient_dim, len(free), [(f, i, field.one) for i, f in enumerate(free)])
    return Quotient(len(free), projection, section)


def solve(m: Matrix, rhs: Sequence):
    """One solution of ``m x = rhs`` (free variables set to zero), or None."""
    if len(rhs) != m.rows:
        raise ValueError("right-hand side has the wrong length")
    field = m.field
    n = m.cols
    ech = _Echelon(field)
    for r, b in zip(m._data, rhs):
        row = _sparse(r)
        if b != 0:
            row[n] = field(b)
        ech.add(row)
    if n in ech.pivots:
        return None
    rr = ech.rref()
    x = [field.zero] * n
    for p, r in rr.items():
        x[p] = r.get(n, field.zero)
    return x


def inverse(m: Matrix) -> Matrix:
    if not m.is_square():
        raise ValueError("only square matrices are invertible")
    n = m.rows
    field = m.field
    ech = _Echelon(field)
    for i, r in enumerate(m._data):
        row = _sparse(r)
        row[n + i] = field.one
        ech.add(row)
    rr = ech.rref()
    if any(p not in rr for p in range(n)):
        raise ZeroDivisionError("matrix is singular")
    return Matrix(field, [[rr[p].get(n + j, field.zero) for j in range(n)] for p in range(n)], n)


def span_contains(field: Field, basis: Iterable[Sequence], vec: Sequence) -> bool:
    ech = _echelon_of_rows(field, basis)
    return not ech.reduce(_sparse(vec))


def is_invertible_scalar(x, field: Field) -> bool:
    return not field.is_zero(x)
