"""Invertible theories: the Euler theory and Crane-Yetter from modular data.

Crane-Yetter is evaluated as ``D^chi * kappa^sigma`` with ``D`` the positive
global dimension and ``kappa = p_+ / D``; the Pontryagin number enters via
``p_1 = 3 sigma``.  Signatures are computed exactly by congruence
diagonalisation over Q.  Modular data are complex floats compared with a
tolerance.
"""

from __future__ import annotations

import cmath
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import bord2
from .exactlin import DEFAULT_TOLERANCE


class NonSymmetricForm(ValueError):
    pass


class AnomalousData(ValueError):
    """Raised when ``p_+ = 0``."""


class DataInconsistency(ValueError):
    """The transparency count and the rank of S disagree: bad input, not a theorem failure."""


class InvParseError(ValueError):
    def __init__(self, msg: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {msg}" if line is not None else msg)


# -- signature -----------------------------------------------------------------


def _check_symmetric(q: Sequence[Sequence[int]]) -> list[list[Fraction]]:
    n = len(q)
    m = [[Fraction(x) for x in row] for row in q]
    if any(len(row) != n for row in m):
        raise NonSymmetricForm("form is not square")
    for i in range(n):
        for j in range(i + 1, n):
            if m[i][j] != m[j][i]:
                raise NonSymmetricForm(f"entries ({i},{j}) and ({j},{i}) differ")
    return m


def congruence_diagonal(q: Sequence[Sequence[int]]) -> list[Fraction]:
    """Diagonal entries of ``P^T q P`` for some invertible rational ``P``."""
    m = _check_symmetric(q)
    n = len(m)
    diag = []
    k = 0
    while k < n:
        size = n - k
        # find a nonzero pivot on the diagonal, or make one from an off-diagonal entry
        piv = next((i for i in range(k, n) if m[i][i] != 0), None)
        if piv is None:
            pair = next(((i, j) for i in range(k, n) for j in range(i + 1, n) if m[i][j] != 0), None)
            if pair is None:
                diag.extend([Fraction(0)] * size)
                break
            i, j = pair
            # row/column op e_i <- e_i + e_j gives q_ii + 2 q_ij + q_jj = 2 q_ij != 0
            for r in range(n):
                m[i][r] += m[j][r]
            for r in range(n):
                m[r][i] += m[r][j]
            piv = i
        m[k], m[piv] = m[piv], m[k]
        for row in m:
            row[k], row[piv] = row[piv], row[k]
        p = m[k][k]
        for i in range(k + 1, n):
            f = m[i][k] / p
            if f:
                for r in range(k, n):
                    m[i][r] -= f * m[k][r]
                for r in range(k, n):
                    m[r][i] -= f * m[r][k]
        diag.append(p)
        k += 1
    return diag


def signature(q: Sequence[Sequence[int]]) -> int:
    d = congruence_diagonal(q)
    return sum(1 for x in d if x > 0) - sum(1 for x in d if x < 0)


def is_unimodular(q: Sequence[Sequence[int]]) -> bool:
    d = congruence_diagonal(q)
    det = Fraction(1)
    for x in d:
        det *= x
    return det in (1, -1)


def direct_sum(q1: Sequence[Sequence[int]], q2: Sequence[Sequence[int]]) -> list[list[int]]:
    n1, n2 = len(q1), len(q2)
    out = [[0] * (n1 + n2) for _ in range(n1 + n2)]
    for i in range(n1):
        out[i][:n1] = list(q1[i])
    for i in range(n2):
        out[n1 + i][n1:] = list(q2[i])
    return out


# -- four-manifolds --------------------------------------------------------------


@dataclass(frozen=True)
class FourManifold:
    name: str
    chi: int
    intersection_form: tuple = ()

    def __post_init__(self):
        form = tuple(tuple(int(x) for x in row) for row in self.intersection_form)
        object.__setattr__(self, "intersection_form", form)
        _check_symmetric(form)
        if form and not is_unimodular(form):
            warnings.warn(f"{self.name}: intersection form is not unimodular", stacklevel=2)

    @property
    def signature(self) -> int:
        return signature(self.intersection_form)

    @property
    def p1(self) -> int:
        return 3 * self.signature

    def disjoint_union(self, other: "FourManifold") -> "FourManifold":
        return FourManifold(f"{self.name}+{other.name}", self.chi + other.chi, direct_sum(self.intersection_form, other.intersection_form))


E8_FORM = (
    (2, -1, 0, 0, 0, 0, 0, 0),
    (-1, 2, -1, 0, 0, 0, 0, 0),
    (0, -1, 2, -1, 0, 0, 0, 0),
    (0, 0, -1, 2, -1, 0, 0, 0),
    (0, 0, 0, -1, 2, -1, 0, -1),
    (0, 0, 0, 0, -1, 2, -1, 0),
    (0, 0, 0, 0, 0, -1, 2, 0),
    (0, 0, 0, 0, -1, 0, 0, 2),
)
HYPERBOLIC = ((0, 1), (1, 0))


def _k3_form():
    neg_e8 = [[-x for x in row] for row in E8_FORM]
    q = direct_sum(neg_e8, neg_e8)
    for _ in range(3):
        q = direct_sum(q, HYPERBOLIC)
    return q


MANIFOLDS = {
    m.name: m
    for m in (
        FourManifold("S4", 2, ()),
        FourManifold("CP2", 3, ((1,),)),
        FourManifold("CP2bar", 3, ((-1,),)),
        FourManifold("S2xS2", 4, HYPERBOLIC),
        # E8 manifold descriptor: the topological 4-manifold with form E8, chi = 2 + 8
        FourManifold("E8", 10, E8_FORM),
        FourManifold("K3", 24, _k3_form()),
        FourManifold("T4", 0, direct_sum(direct_sum(HYPERBOLIC, HYPERBOLIC), HYPERBOLIC)),
    )
}


# -- modular data -------------------------------------------------------------------


@dataclass(frozen=True)
class MTCData:
    name: str
    labels: tuple
    dims: tuple
    twists: tuple
    S_tilde: tuple | None = None

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "dims", tuple(complex(x) for x in self.dims))
        object.__setattr__(self, "twists", tuple(complex(x) for x in self.twists))
        if self.S_tilde is not None:
            object.__setattr__(self, "S_tilde", tuple(tuple(complex(x) for x in row) for row in self.S_tilde))
        if not (len(self.labels) == len(self.dims) == len(self.twists)):
            raise ValueError(f"{self.name}: labels, dims and twists differ in length")

    @property
    def rank(self) -> int:
        return len(self.labels)

    def violations(self, tol: float = DEFAULT_TOLERANCE) -> list[str]:
        bad = []
        if not self.labels:
            return ["no labels"]
        if abs(self.dims[0] - 1) > tol or abs(self.twists[0] - 1) > tol:
            bad.append("label 0 is not a unit (d_0 = theta_0 = 1)")
        for lab, t in zip(self.labels, self.twists):
            if abs(abs(t) - 1) > 1e-6:
                bad.append(f"|theta_{lab}| != 1")
        if self.S_tilde is not None:
            s = np.array(self.S_tilde)
            if s.shape != (self.rank, self.rank):
                bad.append("S has the wrong shape")
            else:
                if not np.allclose(s, s.T, atol=tol):
                    bad.append("S is not symmetric")
                if not np.allclose(s[0], np.array(self.dims), atol=tol):
                    bad.append("S_0j != d_j")
        return bad


def _mtc(name, labels, dims, twists, s=None):
    return MTCData(name, tuple(labels), tuple(dims), tuple(twists), None if s is None else tuple(map(tuple, s)))


_PHI = (1 + 5**0.5) / 2

MTCS = {
    m.name: m
    for m in (
        _mtc("trivial", ["1"], [1], [1], [[1]]),
        _mtc("semion", ["1", "s"], [1, 1], [1, 1j], [[1, 1], [1, -1]]),
        _mtc(
            "toric_code",
            ["1", "e", "m", "f"],
            [1, 1, 1, 1],
            [1, 1, 1, -1],
            [[1, 1, 1, 1], [1, 1, -1, -1], [1, -1, 1, -1], [1, -1, -1, 1]],
        ),
        _mtc("rep_z2", ["1", "x"], [1, 1], [1, 1], [[1, 1], [1, 1]]),
        _mtc(
            "fibonacci",
            ["1", "tau"],
            [1, _PHI],
            [1, cmath.exp(4j * cmath.pi / 5)],
            [[1, _PHI], [_PHI, -1]],
        ),
    )
}


@dataclass(frozen=True)
class GaussSums:
    D: float
    p_plus: complex
    p_minus: complex

    @property
    def kappa(self) -> complex:
        return self.p_plus / self.D


def gauss_sums(m: MTCData) -> GaussSums:
    sq = [d * d for d in m.dims]
    D2 = sum(sq)
    D = abs(D2) ** 0.5
    p_plus = sum(t * s for t, s in zip(m.twists, sq))
    p_minus = sum(s / t for t, s in zip(m.twists, sq))
    return GaussSums(D, complex(p_plus), complex(p_minus))


@dataclass(frozen=True)
class CYValue:
    value: complex
    chi: int
    sigma: int
    p1: int
    D: float
    kappa: complex

    def __str__(self):
        v = self.value
        return f"CY={v.real:.12g}{v.imag:+.12g}i chi={self.chi} sigma={self.sigma} p1={self.p1} D={self.D:.12g} kappa={self.kappa.real:.12g}{self.kappa.imag:+.12g}i"


def crane_yetter(m: MTCData, w: FourManifold, tol: float = DEFAULT_TOLERANCE) -> CYValue:
    g = gauss_sums(m)
    if abs(g.p_plus) < tol:
        raise AnomalousData(f"{m.name}: p_+ = 0")
    sigma = w.signature
    kappa = g.kappa
    # integer powers only, so no branch choices
    value = complex(g.D) ** w.chi * kappa**sigma
    return CYValue(value, w.chi, sigma, 3 * sigma, g.D, kappa)


def transparent_objects(m: MTCData, tol: float = DEFAULT_TOLERANCE) -> list:
    """Labels ``i`` with ``S_ij = d_i d_j`` for every ``j``."""
    if m.S_tilde is None:
        raise ValueError(f"{m.name}: S matrix required for transparency")
    out = []
    for i, lab in enumerate(m.labels):
        row = m.S_tilde[i]
        if all(abs(row[j] - m.dims[i] * m.dims[j]) <= tol for j in range(m.rank)):
            out.append(lab)
    return out


@dataclass(frozen=True)
class ModularVerdict:
    name: str
    modular: bool
    transparent: tuple
    s_rank: int
    dim_torus3: int
    warnings: tuple = ()

    @property
    def cy_invertible(self) -> bool:
        # modular input gives an invertible Crane-Yetter theory
        return self.modular

    def __str__(self):
        tail = "".join(f" warning={w}" for w in self.warnings)
        return (
            f"{self.name} modular={'yes' if self.modular else 'no'} transparent={','.join(map(str, self.transparent))} "
            f"rank(S)={self.s_rank} dim_Z(T3)={self.dim_torus3} CY_invertible={'yes' if self.cy_invertible else 'unknown'}{tail}"
        )


def _numeric_rank(s: np.ndarray, tol: float) -> int:
    if s.size == 0:
        return 0
    sv = np.linalg.svd(s, compute_uv=False)
    return int(np.sum(sv > tol * max(1.0, sv[0])))


def is_modular(m: MTCData, tol: float = DEFAULT_TOLERANCE) -> ModularVerdict:
    trans = transparent_objects(m, tol)
    r = _numeric_rank(np.array(m.S_tilde), tol)
    modular = len(trans) == 1
    if modular != (r == m.rank):
        raise DataInconsistency(f"{m.name}: {len(trans)} transparent objects but rank(S) = {r} of {m.rank}")
    notes = []
    if modular:
        g = gauss_sums(m)
        if abs(g.p_plus * g.p_minus - g.D**2) > 1e-6 * max(1.0, g.D**2):
            notes.append("p+p- != D^2")
    return ModularVerdict(m.name, modular, tuple(trans), r, len(trans), tuple(notes))


# -- Euler theory ---------------------------------------------------------------------


def euler_theory(lam, b: bord2.Bordism):
    """``lam ** chi(W, source)``; circles have chi 0, so this is ``lam ** chi(W)``.

    Exact for ints and Fractions.
    """
    if lam == 0:
        raise ZeroDivisionError("the Euler theory needs lambda != 0")
    if isinstance(lam, int):
        lam = Fraction(lam)
    return lam ** b.chi


# -- text formats -----------------------------------------------------------------------


def _parse_complex(tok: str, lineno: int) -> complex:
    try:
        if "," in tok:
            re_, im = tok.split(",", 1)
            return complex(float(re_), float(im))
        return complex(tok.replace("i", "j"))
    except ValueError:
        raise InvParseError(f"bad number {tok!r}", lineno) from None


def parse_mtc(text: str, name: str = "mtc") -> MTCData:
    """``labels ...``, ``dims ...``, ``twists re,im ...`` and an optional ``S`` block.

    The ``S`` line is followed by one row per label.
    """
    labels = dims = twists = None
    rows: list | None = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, *rest = line.split()
        if rows is not None and head not in ("labels", "dims", "twists", "name"):
            rows.append([_parse_complex(t, lineno) for t in line.split()])
            continue
        if head == "name":
            name = " ".join(rest)
        elif head == "labels":
            labels = rest
        elif head == "dims":
            dims = [_parse_complex(t, lineno) for t in rest]
        elif head == "twists":
            twists = [_parse_complex(t, lineno) for t in rest]
        elif head == "S":
            rows = []
        else:
            raise InvParseError(f"unknown directive {head!r}", lineno)
    for key, val in (("labels", labels), ("dims", dims), ("twists", twists)):
        if val is None:
            raise InvParseError(f"missing {key} line")
    try:
        m = MTCData(name, tuple(labels), tuple(dims), tuple(twists), None if rows is None else tuple(map(tuple, rows)))
    except ValueError as exc:
        raise InvParseError(str(exc)) from None
    bad = m.violations()
    if bad:
        raise InvParseError("; ".join(bad))
    return m


def parse_manifold(text: str, name: str = "W") -> FourManifold:
    """``chi <int>`` then ``form`` followed by integer rows (omit for an empty form)."""
    chi = None
    rows: list | None = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, *rest = line.split()
        if head == "name" and rows is None:
            name = " ".join(rest)
        elif head == "chi" and rows is None:
            try:
                chi = int(rest[0])
            except (IndexError, ValueError):
                raise InvParseError("expected 'chi <int>'", lineno) from None
        elif head == "form" and rows is None:
            rows = []
        elif rows is not None:
            try:
                rows.append([int(t) for t in line.split()])
            except ValueError:
                raise InvParseError(f"bad form row {line!r}", lineno) from None
        else:
            raise InvParseError(f"unknown directive {head!r}", lineno)
    if chi is None:
        raise InvParseError("missing chi line")
    try:
        return FourManifold(name, chi, tuple(map(tuple, rows or ())))
    except NonSymmetricForm as exc:
        raise InvParseError(str(exc)) from None
