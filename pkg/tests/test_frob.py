from fractions import Fraction

import pytest

from tqftbench import algebras as alg
from tqftbench import bord2
from tqftbench.corpus import frobenius_corpus
from tqftbench.exactlin import GF, QQ, Matrix
from tqftbench.frob import (
    DegeneratePairing,
    closed_surface_value,
    evaluate,
    evaluate_layers,
    frobenius,
    handle_operator,
    is_invertible_theory,
    layer_matrix,
    torus_counterexample_exhibit,
    torus_value,
    validate,
)


def _dense(a, b):
    # Kronecker-product evaluation of the layers, one full matrix per layer
    layers = bord2.pants_decompose(b)
    m = Matrix.identity(a.field, a.dim**b.source)
    for layer in layers:
        m = layer_matrix(a, layer) @ m
    return m


def test_handle_operator_on_base_field():
    lam = Fraction(3)
    a = frobenius(alg.base_field(QQ), [lam])
    assert handle_operator(a) == Matrix(QQ, [[1 / lam]])
    assert [closed_surface_value(a, g) for g in range(4)] == [lam, 1, 1 / lam, 1 / lam**2]


def test_handle_operator_group_algebra():
    a = frobenius(alg.cyclic_group_algebra(2, QQ))
    assert handle_operator(a) == Matrix.identity(QQ, 2).scale(2)
    assert [closed_surface_value(a, g) for g in range(4)] == [1, 2, 4, 8]


def test_handle_operator_idempotents():
    a = frobenius(alg.field_power(2, QQ), [1, 1])
    assert handle_operator(a) == Matrix.identity(QQ, 2)
    assert [closed_surface_value(a, g) for g in range(4)] == [2, 2, 2, 2]


def test_torus_is_dimension():
    for a in frobenius_corpus().values():
        assert torus_value(a) == a.field(a.dim)


def test_validate_reports_problems():
    assert validate(frobenius(alg.cyclic_group_algebra(3, QQ))).ok
    bad = validate(frobenius(alg.matrix_algebra(2, QQ)))
    assert any("commutative" in v for v in bad.violations)
    degenerate = validate(frobenius(alg.field_power(2, QQ), [1, 0]))
    assert any("degenerate" in v for v in degenerate.violations)


def test_degenerate_pairing_raises():
    a = frobenius(alg.field_power(2, QQ), [1, 0])
    with pytest.raises(DegeneratePairing):
        evaluate(a, bord2.torus())


def test_sparse_matches_dense():
    a = frobenius(alg.cyclic_group_algebra(3, QQ))
    for b1, b2 in bord2.composable_pairs(20, seed=3):
        for b in (b1, b2):
            if b.closed:
                continue
            layers = bord2.pants_decompose(b)
            assert evaluate_layers(a, layers, b.source) == _dense(a, b)


@pytest.mark.parametrize(
    "a",
    [
        frobenius(alg.cyclic_group_algebra(3, QQ)),
        frobenius(alg.field_power(2, QQ), [1, 1]),
        frobenius(alg.cyclic_group_algebra(3, GF(2))),
    ],
    ids=lambda a: a.name,
)
def test_functoriality(a):
    pairs = bord2.composable_pairs(120, seed=0)
    assert len(pairs) >= 100
    for b1, b2 in pairs:
        whole = bord2.compose(b1, b2)
        assert evaluate(a, whole) == evaluate(a, b2) @ evaluate(a, b1)


def test_decomposition_invariance():
    a = frobenius(alg.cyclic_group_algebra(4, QQ))
    for b1, b2 in bord2.composable_pairs(40, seed=0):
        b = bord2.compose(b1, b2)
        open_part = bord2.Bordism(b.source, b.target, b.components, ())
        plain = evaluate_layers(a, bord2.pants_decompose(open_part), b.source)
        stacked = evaluate_layers(a, bord2.pants_decompose(open_part, stacked=True), b.source)
        assert plain == stacked


def test_monoidal():
    a = frobenius(alg.cyclic_group_algebra(2, QQ))
    p, c = bord2.pants(), bord2.copants()
    assert evaluate(a, bord2.tensor(p, c)) == evaluate(a, p).kron(evaluate(a, c))


def test_one_dimensional_theories():
    assert is_invertible_theory(frobenius(alg.base_field(QQ), [5]))
    assert not is_invertible_theory(frobenius(alg.cyclic_group_algebra(2, QQ)))
    # a one-dimensional algebra gives an invertible theory on the cylinder
    a = frobenius(alg.base_field(QQ), [2])
    assert evaluate(a, bord2.cylinder()) == Matrix.identity(QQ, 1)


def test_counterexample_exhibit():
    entries = torus_counterexample_exhibit(frobenius_corpus())
    assert len(entries) >= 3
    for e in entries:
        assert e.torus_invertible and not e.theory_invertible
    names = {e.name for e in entries}
    assert "Q[Z/2]" in names
    # dim 2 over F2: torus scalar vanishes, so it is not a counterexample
    assert "F2[Z/2]" not in names
