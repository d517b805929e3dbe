"""Once-extended 2D evaluation into algebras, bimodules and bimodule maps.

Points go to ``A`` (positive) and ``A^op`` (negative).  A 1-morphism
``X -> Y`` goes to a ``(Z(X), Z(Y))``-bimodule and composition is the
relative tensor product.  With ``A^e = A (x) A^op`` (basis ``b_p (x) b_q``
at index ``p*n + q``):

* left elbow ``() -> (+,-)``: ``A`` with right action ``x.(a (x) b) = b x a``;
* right elbow ``(+,-) -> ()``: ``A`` with left action ``(a (x) b).x = a x b``;
* the circle (left then right elbow) is ``A (x)_{A^e} A = A/[A,A]``.

The 2-morphism generators use a symmetric Frobenius form ``lam`` and its
Casimir ``sum_k b_k (x) b^k``:

* saddle ``P (x) Q -> A^e``: ``x (x) y -> sum_k x b_k y (x) b^k``
  (multiplication after comultiplying the unit);
* co-saddle ``A^e -> P (x) Q``: ``u (x) v -> sum_k u b_k v (x) b^k``
  (``u (x) v`` acting on the Casimir);
* cap ``[x (x) y] -> lam(xy)``;
* cup ``1 -> [z (x) 1]`` where ``sum_k b_k z b^k = 1`` (the Higman
  element; it exists exactly when ``A`` is separable).
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field as dc_field
from typing import Callable, Sequence

from . import bord2
from .algebras import Algebra, apply_form, base_field, dual_basis, enveloping, pairing_matrix, tensor
from .bord2 import GeneratorWord
from .exactlin import Field, Matrix, Quotient, kernel_basis, quotient_space, rank, solve


class PreconditionError(ValueError):
    """The algebra lacks the structure a once-extended theory needs."""


class ActionMismatch(ValueError):
    pass


# ---------------------------------------------------------------------------
# bimodules


class Bimodule:
    """A ``(left, right)``-bimodule with action matrices per basis element.

    ``left_fn(i)`` is the matrix of ``m -> l_i . m`` and ``right_fn(j)`` the
    matrix of ``m -> m . r_j``; both are computed on demand and cached.
    """

    def __init__(self, left: Algebra, right: Algebra, dim: int, left_fn: Callable, right_fn: Callable, name: str = "M"):
        self.left = left
        self.right = right
        self.dim = dim
        self._left_fn = left_fn
        self._right_fn = right_fn
        self.name = name

    @property
    def field(self) -> Field:
        return self.left.field

    @functools.lru_cache(maxsize=None)
    def left_action(self, i: int) -> Matrix:
        return self._left_fn(i)

    @functools.lru_cache(maxsize=None)
    def right_action(self, j: int) -> Matrix:
        return self._right_fn(j)

    def act_left(self, a: Sequence, m: Sequence) -> list:
        out = [self.field.zero] * self.dim
        for i, c in enumerate(a):
            if c != 0:
                out = [o + c * x for o, x in zip(out, self.left_action(i).apply(m))]
        return out

    def act_right(self, m: Sequence, r: Sequence) -> list:
        out = [self.field.zero] * self.dim
        for j, c in enumerate(r):
            if c != 0:
                out = [o + c * x for o, x in zip(out, self.right_action(j).apply(m))]
        return out

    def violations(self) -> list[str]:
        """Unitality, multiplicativity and commutation of the two actions, on basis elements."""
        bad = []
        f = self.field
        ident = Matrix.identity(f, self.dim)
        for alg, act, side in ((self.left, self.left_action, "left"), (self.right, self.right_action, "right")):
            u = Matrix.zeros(f, self.dim, self.dim)
            for i, c in enumerate(alg.unit):
                if c != 0:
                    u = u + act(i).scale(c)
            if u != ident:
                bad.append(f"{side} action is not unital")
            for i, j in itertools.product(range(alg.dim), repeat=2):
                prod = Matrix.zeros(f, self.dim, self.dim)
                for k, c in alg.table[i][j]:
                    prod = prod + act(k).scale(c)
                composed = act(i) @ act(j) if side == "left" else act(j) @ act(i)
                if composed != prod:
                    bad.append(f"{side} action not multiplicative at ({i},{j})")
                    break
        for i in range(self.left.dim):
            for j in range(self.right.dim):
                if self.left_action(i) @ self.right_action(j) != self.right_action(j) @ self.left_action(i):
                    bad.append(f"actions do not commute at ({i},{j})")
                    return bad
        return bad

    def __repr__(self):
        return f"Bimodule({self.name}: {self.left.name}-{self.right.name}, dim={self.dim})"


@dataclass
class BimoduleMap:
    source: Bimodule
    target: Bimodule
    matrix: Matrix

    def __post_init__(self):
        if self.matrix.shape != (self.target.dim, self.source.dim):
            raise ValueError(f"matrix shape {self.matrix.shape} does not fit {self.source.dim} -> {self.target.dim}")

    def is_invertible(self) -> bool:
        return self.matrix.is_invertible()

    def rank(self) -> int:
        return rank(self.matrix)

    def compose(self, after: "BimoduleMap") -> "BimoduleMap":
        """``after o self``."""
        return BimoduleMap(self.source, after.target, after.matrix @ self.matrix)

    def intertwining_violations(self, left_elements=None, right_elements=None) -> list[str]:
        """Basis (or given) elements on which the map fails to commute with the actions."""
        s, t, m = self.source, self.target, self.matrix
        bad = []
        lefts = left_elements if left_elements is not None else [s.left.basis_vector(i) for i in range(s.left.dim)]
        rights = right_elements if right_elements is not None else [s.right.basis_vector(j) for j in range(s.right.dim)]
        for col in range(s.dim):
            mvec = [s.field.one if k == col else s.field.zero for k in range(s.dim)]
            image = m.apply(mvec)
            for a in lefts:
                if m.apply(s.act_left(a, mvec)) != t.act_left(a, image):
                    bad.append(f"left action at basis {col}")
                    break
            for r in rights:
                if m.apply(s.act_right(mvec, r)) != t.act_right(image, r):
                    bad.append(f"right action at basis {col}")
                    break
        return bad


def regular_bimodule(a: Algebra) -> Bimodule:
    return Bimodule(
        a, a, a.dim,
        lambda i: a.left_matrix(a.basis_vector(i)),
        lambda j: a.right_matrix(a.basis_vector(j)),
        name=a.name,
    )


def _env_index(n: int, k: int) -> tuple[int, int]:
    return divmod(k, n)


def left_elbow_module(a: Algebra, env: Algebra | None = None) -> Bimodule:
    """``A`` as a ``(k, A^e)``-bimodule, ``x.(b_p (x) b_q) = b_q x b_p``."""
    env = env or enveloping(a)
    k = base_field(a.field)
    n = a.dim

    def right(j):
        p, q = _env_index(n, j)
        return a.left_matrix(a.basis_vector(q)) @ a.right_matrix(a.basis_vector(p))

    return Bimodule(k, env, n, lambda i: Matrix.identity(a.field, n), right, name="Q")


def right_elbow_module(a: Algebra, env: Algebra | None = None) -> Bimodule:
    """``A`` as an ``(A^e, k)``-bimodule, ``(b_p (x) b_q).x = b_p x b_q``."""
    env = env or enveloping(a)
    k = base_field(a.field)
    n = a.dim

    def left(i):
        p, q = _env_index(n, i)
        return a.left_matrix(a.basis_vector(p)) @ a.right_matrix(a.basis_vector(q))

    return Bimodule(env, k, n, left, lambda j: Matrix.identity(a.field, n), name="P")


@dataclass
class RelativeTensor:
    """``M (x)_B N`` together with its presentation as a quotient of ``M (x) N``."""

    bimodule: Bimodule
    quotient: Quotient
    m_dim: int
    n_dim: int

    @property
    def dim(self) -> int:
        return self.quotient.dim

    def project(self, ambient_vec: Sequence) -> list:
        return self.quotient.projection.apply(ambient_vec)


def tensor_over(b: Algebra, m: Bimodule, n: Bimodule) -> RelativeTensor:
    """``(M (x) N) / span{ m.b (x) n - m (x) b.n }`` with the induced outer actions."""
    if m.right is not b and m.right.dim != b.dim:
        raise ActionMismatch(f"{m.name} is not a right {b.name}-module")
    if n.left is not b and n.left.dim != b.dim:
        raise ActionMismatch(f"{n.name} is not a left {b.name}-module")
    field = b.field
    dm, dn = m.dim, n.dim
    ambient = dm * dn

    def relations():
        for p in range(b.dim):
            rp = m.right_action(p)
            lp = n.left_action(p)
            for i in range(dm):
                col = [rp[k, i] for k in range(dm)]
                for j in range(dn):
                    rel = {}
                    for k, c in enumerate(col):
                        if c != 0:
                            rel[k * dn + j] = c
                    for k in range(dn):
                        c = lp[k, j]
                        if c != 0:
                            idx = i * dn + k
                            v = rel.get(idx, 0) - c
                            if v == 0:
                                rel.pop(idx, None)
                            else:
                                rel[idx] = v
                    if rel:
                        yield rel

    if b.dim == 1 and b.unit[0] == 1:
        quotient = quotient_space(ambient, [], field)
    else:
        quotient = quotient_space(ambient, relations(), field)
    trivial = quotient.dim == ambient
    P, S = quotient.projection, quotient.section

    def left(i):
        big = m.left_action(i).kron(Matrix.identity(field, dn))
        return big if trivial else P @ big @ S

    def right(j):
        big = Matrix.identity(field, dm).kron(n.right_action(j))
        return big if trivial else P @ big @ S

    bim = Bimodule(m.left, n.right, quotient.dim, left, right, name=f"{m.name}(x){n.name}")
    return RelativeTensor(bim, quotient, dm, dn)


# ---------------------------------------------------------------------------
# algebra-level invariants


def center(a: Algebra) -> list[list]:
    """Basis of ``{z : z b_i = b_i z for all i}``."""
    n = a.dim
    rows = []
    for i in range(n):
        b = a.basis_vector(i)
        comm = a.right_matrix(b) - a.left_matrix(b)
        rows.extend(comm.tolists())
    return kernel_basis(Matrix(a.field, rows, n))


def commutator_space(a: Algebra) -> list[list]:
    out = []
    for i, j in itertools.combinations(range(a.dim), 2):
        xy = a.mul_basis(i, j)
        yx = a.mul_basis(j, i)
        out.append([u - v for u, v in zip(xy, yx)])
    return out


def separability_idempotent(a: Algebra):
    """``e`` in ``A (x) A`` with ``mu(e) = 1`` and ``(x (x) 1) e = e (1 (x) x)``, or None."""
    n = a.dim
    f = a.field
    nn = n * n
    rows = []
    rhs = []
    # mu(e) = 1
    for k in range(n):
        row = [f.zero] * nn
        for p, q in itertools.product(range(n), repeat=2):
            for kk, c in a.table[p][q]:
                if kk == k:
                    row[p * n + q] = row[p * n + q] + c
        rows.append(row)
        rhs.append(a.unit[k])
    # x e = e x for x = b_i
    for i in range(n):
        block = [[f.zero] * nn for _ in range(nn)]
        for p, q in itertools.product(range(n), repeat=2):
            col = p * n + q
            for k, c in a.table[i][p]:
                block[k * n + q][col] = block[k * n + q][col] + c
            for k, c in a.table[q][i]:
                block[p * n + k][col] = block[p * n + k][col] - c
        for r in block:
            if any(x != 0 for x in r):
                rows.append(r)
                rhs.append(f.zero)
    return solve(Matrix(f, rows, nn), rhs)


def higman_matrix(a: Algebra, form: Sequence) -> Matrix:
    """Matrix of ``z -> sum_k b_k z b^k``."""
    dual = dual_basis(a, form)
    cols = []
    for j in range(a.dim):
        z = a.basis_vector(j)
        acc = a.zero_vector()
        for k, d in enumerate(dual):
            acc = [x + y for x, y in zip(acc, a.mul(a.mul_basis(k, j), d))]
        cols.append(acc)
    return Matrix.from_columns(a.field, cols, a.dim)


def _is_nondegenerate(a: Algebra, form: Sequence) -> bool:
    return rank(pairing_matrix(a, form)) == a.dim


def _normalise_form(a: Algebra, form: list) -> list:
    """Rescale so that ``sum_k b_k z b^k = form(z) 1`` when some rescaling achieves it."""
    f = a.field
    h = higman_matrix(a, form)
    unit = a.unit_vector()
    tau = []
    for j in range(a.dim):
        col = h.column(j)
        # col must be a multiple of the unit
        ref = next((k for k, u in enumerate(unit) if u != 0), None)
        c = col[ref] / unit[ref]
        if any(not f.is_zero(x - c * u) for x, u in zip(col, unit)):
            return form
        tau.append(c)
    ratio = None
    for t, l in zip(tau, form):
        if l == 0:
            if not f.is_zero(t):
                return form
            continue
        r = t / l
        if ratio is None:
            ratio = r
        elif not f.is_zero(r - ratio):
            return form
    if ratio is None or f.is_zero(ratio):
        return form
    alpha = f.sqrt(ratio)
    if alpha is None:
        return form
    return [alpha * x for x in form]


def symmetric_frobenius_form(a: Algebra, max_trials: int = 20000):
    """A trace ``lam`` (vanishing on commutators) with nondegenerate pairing, or None.

    Tries the basis of the trace space first, then integer combinations with
    coefficients ``0..dim`` (reduced into F_p, at most p values per slot).
    Over Q this grid is exhaustive: the pairing determinant is a polynomial
    of degree ``dim`` in the coefficients, so ``dim + 1`` values per slot
    cannot all be roots unless it vanishes identically (given enough
    ``max_trials``).
    """
    comms = [c for c in commutator_space(a) if any(x != 0 for x in c)]
    f = a.field
    if comms:
        traces = kernel_basis(Matrix(f, comms, a.dim))
    else:
        traces = [a.basis_vector(i) for i in range(a.dim)]
    if not traces:
        return None
    for t in traces:
        if _is_nondegenerate(a, t):
            return _normalise_form(a, t)
    values = range(a.dim + 1)
    if f.characteristic:
        values = range(min(a.dim + 1, f.characteristic))
    for trial, coeffs in enumerate(itertools.product(values, repeat=len(traces))):
        if trial >= max_trials:
            break
        if sum(1 for c in coeffs if c) < 2:
            continue
        lam = [f.zero] * a.dim
        for c, t in zip(coeffs, traces):
            if c:
                lam = [x + c * y for x, y in zip(lam, t)]
        if _is_nondegenerate(a, lam):
            return _normalise_form(a, lam)
    return None


def azumaya_map(a: Algebra) -> Matrix:
    """``A (x) A^op -> End(A)``, ``b_p (x) b_q -> (x -> b_p x b_q)``.

    Column ``p*n + q``; row ``k*n + l`` holds the ``b_k`` coefficient of
    ``b_p b_l b_q``.
    """
    n = a.dim
    entries = []
    for p, q in itertools.product(range(n), repeat=2):
        for l in range(n):
            for k1, c1 in a.table[p][l]:
                for k, c2 in a.table[k1][q]:
                    entries.append((k * n + l, p * n + q, c1 * c2))
    return Matrix.from_sparse(a.field, n * n, n * n, entries)


def is_azumaya(a: Algebra) -> bool:
    return azumaya_map(a).is_invertible()


# ---------------------------------------------------------------------------
# the once-extended theory


def sign_algebra(a: Algebra, signs: tuple) -> Algebra:
    if not signs:
        return base_field(a.field)
    parts = [a if s == "+" else a.opposite() for s in signs]
    out = parts[0]
    for p in parts[1:]:
        out = tensor(out, p)
    return out


class OnceExtended:
    """Evaluation of generator words for a separable algebra with a symmetric Frobenius form."""

    def __init__(self, a: Algebra, form: Sequence | None = None):
        self.algebra = a
        self.field = a.field
        if form is None:
            form = symmetric_frobenius_form(a)
            if form is None:
                raise PreconditionError(f"{a.name}: no symmetric Frobenius form")
        else:
            form = [a.field(x) for x in form]
            if not _is_nondegenerate(a, form):
                raise PreconditionError(f"{a.name}: the given form is degenerate")
            if any(apply_form(form, v) != 0 for v in commutator_space(a)):
                raise PreconditionError(f"{a.name}: the given form is not symmetric")
            form = _normalise_form(a, form)
        self.form = list(form)
        self.dual = dual_basis(a, self.form)
        z = solve(higman_matrix(a, self.form), a.unit_vector())
        if z is None:
            raise PreconditionError(f"{a.name}: not separable")
        self.higman_element = z
        self.env = enveloping(a)
        self._k = base_field(a.field)
        self._one_cache: dict = {}

    # -- 1-morphisms -------------------------------------------------------

    def _letter(self, g: str) -> Bimodule:
        a = self.algebra
        if g == "left_elbow":
            return left_elbow_module(a, self.env)
        if g == "right_elbow":
            return right_elbow_module(a, self.env)
        if g == "id_pos":
            return regular_bimodule(a)
        if g == "id_neg":
            return regular_bimodule(a.opposite())
        if g == "id_pair":
            return regular_bimodule(self.env)
        if g == "swap_pair":
            return self._swap_module()
        raise bord2.BordismError(f"unknown 1-morphism generator {g!r}")

    def _swap_module(self) -> Bimodule:
        """``A^e`` as an ``(A (x) A^op, A^op (x) A)``-bimodule, right action through the flip."""
        env = self.env
        flipped = tensor(self.algebra.opposite(), self.algebra)
        n = self.algebra.dim

        def right(j):
            p, q = divmod(j, n)
            return env.right_matrix(env.basis_vector(q * n + p))

        return Bimodule(env, flipped, env.dim, lambda i: env.left_matrix(env.basis_vector(i)), right, name="swap")

    def one(self, word: GeneratorWord | Sequence[str]) -> RelativeTensor:
        letters = tuple(word.letters if isinstance(word, GeneratorWord) else word)
        if isinstance(word, GeneratorWord) and word.layer != 1:
            raise bord2.BordismError("expected a 1-morphism word")
        if letters in self._one_cache:
            return self._one_cache[letters]
        bord2.one_word_arity(letters)
        if not letters:
            k = self._k
            reg = regular_bimodule(k)
            res = RelativeTensor(reg, quotient_space(1, [], self.field), 1, 1)
        else:
            cur = self._letter(letters[0])
            res = RelativeTensor(cur, quotient_space(cur.dim, [], self.field), cur.dim, 1)
            for g in letters[1:]:
                nxt = self._letter(g)
                mid = cur.right
                res = tensor_over(mid, cur, nxt)
                cur = res.bimodule
        self._one_cache[letters] = res
        return res

    # -- 2-morphism generators --------------------------------------------

    def _casimir_matrix(self) -> Matrix:
        """``n^2 x n^2`` matrix of ``b_i (x) b_j -> sum_k b_i b_k b_j (x) b^k``."""
        a = self.algebra
        n = a.dim
        entries = []
        for i, j in itertools.product(range(n), repeat=2):
            col = i * n + j
            for k, d in enumerate(self.dual):
                for m1, c1 in a.table[i][k]:
                    for m, c2 in a.table[m1][j]:
                        for q, dq in enumerate(d):
                            if dq != 0:
                                entries.append((m * n + q, col, c1 * c2 * dq))
        return Matrix.from_sparse(self.field, n * n, n * n, entries)

    def generator(self, name: str) -> BimoduleMap:
        a = self.algebra
        n = a.dim
        f = self.field
        src_word, tgt_word = bord2.TWO_GENERATORS[name]
        src, tgt = self.one(src_word), self.one(tgt_word)
        if name in ("cup", "elbow_unit"):
            amb = [f.zero] * (n * n)
            for i, zi in enumerate(self.higman_element):
                if zi != 0:
                    for k, uk in enumerate(a.unit):
                        if uk != 0:
                            amb[i * n + k] = amb[i * n + k] + zi * uk
            vec = tgt.project(amb)
            mat = Matrix.from_columns(f, [vec], tgt.dim)
        elif name == "cap":
            row = [f(apply_form(self.form, a.mul_basis(i, j))) for i in range(n) for j in range(n)]
            mat = Matrix(f, [row], n * n) @ src.quotient.section
        elif name in ("saddle", "elbow_counit", "cosaddle"):
            mat = self._casimir_matrix()
        elif name.startswith("identity"):
            mat = Matrix.identity(f, src.dim)
        else:
            raise bord2.BordismError(f"unknown 2-morphism generator {name!r}")
        return BimoduleMap(src.bimodule, tgt.bimodule, mat)

    def two(self, word: GeneratorWord | Sequence[str]) -> BimoduleMap:
        letters = tuple(word.letters if isinstance(word, GeneratorWord) else word)
        if not isinstance(word, GeneratorWord):
            word = GeneratorWord(letters, 2)
        out = self.generator(letters[0])
        for g in letters[1:]:
            out = out.compose(self.generator(g))
        return out

    def evaluate(self, word: GeneratorWord):
        if word.layer == 1:
            return self.one(word).bimodule
        return self.two(word)


@functools.lru_cache(maxsize=64)
def _theory(a: Algebra) -> OnceExtended:
    return OnceExtended(a)


def evaluate_extended(a: Algebra, w: GeneratorWord):
    """Bimodule (1-morphism word) or BimoduleMap (2-morphism word) assigned to ``w``."""
    return _theory(a).evaluate(w)


def circle_value(a: Algebra) -> tuple[int, list[list]]:
    """``A (x)_{A^e} A``: its dimension and, as basis, the ambient lifts ``x_i (x) y_j`` of the quotient basis."""
    rt = tensor_over(enveloping(a), left_elbow_module(a), right_elbow_module(a))
    basis = [list(rt.quotient.section.column(j)) for j in range(rt.dim)]
    return rt.dim, basis


# ---------------------------------------------------------------------------
# theorem instance


TWO_CELLS = ("cup", "cap", "saddle", "cosaddle")


@dataclass
class TorusCriterionReport:
    name: str
    field: str
    dim: int
    eligible: bool
    reason: str = ""
    center_dim: int | None = None
    circle_dim: int | None = None
    azumaya_rank: int | None = None
    azumaya: bool | None = None
    generators: dict = dc_field(default_factory=dict)
    composites_identity: bool | None = None

    @property
    def saddle_invertible(self) -> bool | None:
        return self.generators.get("saddle")

    @property
    def consistent(self) -> bool:
        """circle dim 1 <=> Azumaya <=> every generator 2-morphism invertible."""
        if not self.eligible:
            return True
        one = self.circle_dim == 1
        if self.composites_identity is False:
            return False
        return one == self.azumaya == all(self.generators.values())

    @property
    def verdict(self) -> str:
        if not self.eligible:
            return f"ineligible: {self.reason}"
        return "consistent" if self.consistent else "VIOLATION"

    def line(self) -> str:
        if not self.eligible:
            return f"{self.name} {self.dim} - - - - {self.verdict}"
        return (
            f"{self.name} {self.dim} {self.center_dim} {self.circle_dim} "
            f"{'yes' if self.azumaya else 'no'} {'invertible' if self.saddle_invertible else 'singular'} {self.verdict}"
        )


def torus_criterion_extended(a: Algebra, name: str | None = None, form: Sequence | None = None) -> TorusCriterionReport:
    """Check circle dim 1 <=> Azumaya <=> invertible generators on one algebra.

    ``form`` fixes the symmetric Frobenius form; by default one is searched for.
    """
    name = name or a.name
    rep = TorusCriterionReport(name, a.field.name, a.dim, eligible=False)
    if not a.is_valid():
        rep.reason = "not an associative unital algebra"
        return rep
    try:
        theory = OnceExtended(a, form)
    except PreconditionError as exc:
        rep.reason = str(exc).split(": ", 1)[-1]
        return rep
    rep.eligible = True
    rep.center_dim = len(center(a))
    rep.circle_dim = theory.one(bord2.CIRCLE).dim
    am = azumaya_map(a)
    rep.azumaya_rank = rank(am)
    rep.azumaya = rep.azumaya_rank == a.dim**2
    for g in TWO_CELLS:
        rep.generators[g] = theory.generator(g).is_invertible()
    if rep.azumaya:
        s = theory.generator("saddle").matrix
        t = theory.generator("cosaddle").matrix
        ident = Matrix.identity(a.field, a.dim**2)
        rep.composites_identity = (s @ t == ident) and (t @ s == ident)
    return rep


def factors_invertible(f: Matrix, g: Matrix) -> tuple[bool, bool] | None:
    """If ``g o f`` is invertible between invertible (1-dimensional) objects, both factors are.

    Returns the invertibility of ``(f, g)`` when the hypothesis holds and
    None otherwise; the conclusion is checked, not assumed.
    """
    comp = g @ f
    if not comp.is_invertible():
        return None
    if not (f.rows == f.cols == g.rows == g.cols == 1):
        return None
    return f.is_invertible(), g.is_invertible()
