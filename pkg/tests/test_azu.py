import itertools

import pytest
import sympy

from tqftbench import algebras as alg
from tqftbench import azu, bord2
from tqftbench.corpus import azumaya_corpus
from tqftbench.exactlin import GF, QQ, Matrix, rank
from tqftbench.bord2 import GeneratorWord


def _s3_classes():
    perms = list(itertools.permutations(range(3)))

    def mul(p, q):
        return tuple(p[q[i]] for i in range(3))

    def inv(p):
        out = [0] * 3
        for i, x in enumerate(p):
            out[x] = i
        return tuple(out)

    return len({frozenset(mul(mul(g, x), inv(g)) for g in perms) for x in perms})


def test_center_dimensions():
    assert len(azu.center(alg.matrix_algebra(2, QQ))) == 1
    assert len(azu.center(alg.matrix_algebra(3, GF(5)))) == 1
    assert len(azu.center(alg.cyclic_group_algebra(4, QQ))) == 4
    assert len(azu.center(alg.symmetric_group_algebra(QQ))) == _s3_classes() == 3
    assert len(azu.center(alg.quaternion_group_algebra(QQ))) == 5
    assert len(azu.center(alg.upper_triangular(2, QQ))) == 1


def test_separability_idempotent():
    m2 = alg.matrix_algebra(2, QQ)
    e = azu.separability_idempotent(m2)
    assert e is not None
    # mu(e) = 1
    total = m2.zero_vector()
    for p, q in itertools.product(range(4), repeat=2):
        if e[p * 4 + q] != 0:
            total = [x + e[p * 4 + q] * y for x, y in zip(total, m2.mul_basis(p, q))]
    assert total == m2.unit_vector()
    assert azu.separability_idempotent(alg.cyclic_group_algebra(3, QQ)) is not None
    assert azu.separability_idempotent(alg.cyclic_group_algebra(2, GF(2))) is None
    assert azu.separability_idempotent(alg.upper_triangular(2, QQ)) is None


def test_symmetric_form():
    assert azu.symmetric_frobenius_form(alg.matrix_algebra(2, QQ)) is not None
    assert azu.symmetric_frobenius_form(alg.symmetric_group_algebra(QQ)) is not None
    assert azu.symmetric_frobenius_form(alg.upper_triangular(2, QQ)) is None


def test_azumaya_map_ranks():
    assert rank(azu.azumaya_map(alg.matrix_algebra(2, QQ))) == 16
    assert rank(azu.azumaya_map(alg.cyclic_group_algebra(2, QQ))) == 2
    assert azu.is_azumaya(alg.base_field(GF(3)))
    assert not azu.is_azumaya(alg.field_power(2, QQ))


def test_azumaya_closed_under_tensor():
    m2 = alg.matrix_algebra(2, QQ)
    assert azu.is_azumaya(alg.tensor(m2, m2))
    assert not azu.is_azumaya(alg.tensor(m2, alg.cyclic_group_algebra(2, QQ)))


def test_relative_tensor_dimensions():
    for a in (alg.matrix_algebra(2, QQ), alg.cyclic_group_algebra(3, QQ), alg.symmetric_group_algebra(QQ)):
        reg = azu.regular_bimodule(a)
        assert azu.tensor_over(a, reg, reg).dim == a.dim
    assert azu.circle_value(alg.matrix_algebra(2, QQ))[0] == 1
    assert azu.circle_value(alg.cyclic_group_algebra(3, QQ))[0] == 3


def test_circle_is_center_via_cocenter():
    # A (x)_{A^e} A is A/[A,A]; compare with an independent sympy rank
    for a in azumaya_corpus(fields=("Q",), include_f2=False).values():
        comms = [c for c in azu.commutator_space(a) if any(c)]
        r = sympy.Matrix(comms).rank() if comms else 0
        assert azu.circle_value(a)[0] == a.dim - r == len(azu.center(a))


def test_bimodule_axioms():
    a = alg.symmetric_group_algebra(QQ)
    assert azu.regular_bimodule(a).violations() == []
    assert azu.left_elbow_module(a).violations() == []
    assert azu.right_elbow_module(a).violations() == []


def test_saddle_composites():
    m2 = azu.OnceExtended(alg.matrix_algebra(2, QQ))
    s = m2.generator("saddle").matrix
    t = m2.generator("cosaddle").matrix
    assert s @ t == Matrix.identity(QQ, 16) == t @ s
    z2 = azu.OnceExtended(alg.cyclic_group_algebra(2, QQ))
    assert not z2.generator("saddle").is_invertible()


def test_generators_intertwine():
    theory = azu.OnceExtended(alg.matrix_algebra(2, GF(5)))
    for g in azu.TWO_CELLS:
        assert theory.generator(g).intertwining_violations() == []


def test_evaluate_words():
    a = alg.matrix_algebra(2, QQ)
    circle = azu.evaluate_extended(a, GeneratorWord.one(*bord2.CIRCLE))
    assert circle.dim == 1
    sphere = azu.evaluate_extended(a, GeneratorWord.two("cup", "cap"))
    assert sphere.is_invertible()


def test_criterion_over_corpus():
    reports = [azu.torus_criterion_extended(a, name) for name, a in azumaya_corpus().items()]
    assert len([r for r in reports if r.eligible]) >= 15
    assert all(r.consistent for r in reports)
    by_name = {r.name: r for r in reports}
    assert by_name["F2[Z/2]"].eligible is False
    assert by_name["M2(Q)"].azumaya_rank == 16 and by_name["M2(Q)"].circle_dim == 1
    assert by_name["Q[Z/2]"].circle_dim == 2 and by_name["Q[Z/2]"].azumaya_rank < 4
    assert by_name["Q[S3]"].circle_dim == 3


def test_criterion_rejects_bad_forms():
    a = alg.matrix_algebra(2, QQ)
    rep = azu.torus_criterion_extended(a, form=[0, 0, 0, 0])
    assert not rep.eligible and "degenerate" in rep.reason
    rep = azu.torus_criterion_extended(a, form=[1, 1, 0, 1])
    assert not rep.eligible and "symmetric" in rep.reason


def test_factors_invertible():
    f = Matrix(QQ, [[2]])
    g = Matrix(QQ, [[3]])
    assert azu.factors_invertible(f, g) == (True, True)
    assert azu.factors_invertible(Matrix(QQ, [[0]]), g) is None
    assert azu.factors_invertible(Matrix(QQ, [[1, 0], [0, 1]]), Matrix(QQ, [[1, 0], [0, 1]])) is None
