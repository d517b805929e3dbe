import cmath
import math
import warnings
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tqftbench import bord2, inv
from tqftbench.inv import MANIFOLDS, MTCS, FourManifold, InvParseError, NonSymmetricForm


def _numpy_signature(q):
    if not q:
        return 0
    ev = np.linalg.eigvalsh(np.array(q, dtype=float))
    return int((ev > 1e-9).sum() - (ev < -1e-9).sum())


def symmetric_forms():
    def build(n):
        entries = st.lists(st.integers(-3, 3), min_size=n * (n + 1) // 2, max_size=n * (n + 1) // 2)

        def fill(vals):
            q = [[0] * n for _ in range(n)]
            it = iter(vals)
            for i in range(n):
                for j in range(i, n):
                    q[i][j] = q[j][i] = next(it)
            return q

        return entries.map(fill)

    return st.integers(1, 6).flatmap(build)


@settings(max_examples=80, deadline=None)
@given(symmetric_forms())
def test_signature_matches_eigenvalues(q):
    assert inv.signature(q) == _numpy_signature(q)


@settings(max_examples=40, deadline=None)
@given(symmetric_forms(), symmetric_forms())
def test_signature_additive(q1, q2):
    assert inv.signature(inv.direct_sum(q1, q2)) == inv.signature(q1) + inv.signature(q2)


def test_signature_examples():
    assert inv.signature(inv.E8_FORM) == 8
    assert inv.signature(inv.HYPERBOLIC) == 0
    assert MANIFOLDS["K3"].signature == -16
    assert MANIFOLDS["CP2bar"].signature == -1
    assert MANIFOLDS["E8"].p1 == 24
    assert inv.is_unimodular(inv.E8_FORM)


def test_nonsymmetric_rejected():
    with pytest.raises(NonSymmetricForm):
        inv.signature([[1, 2], [0, 1]])


def test_non_unimodular_warns():
    with pytest.warns(UserWarning):
        FourManifold("odd", 3, ((2,),))


def test_gauss_sums():
    g = inv.gauss_sums(MTCS["semion"])
    assert abs(g.D - math.sqrt(2)) < 1e-9
    assert abs(g.p_plus - (1 + 1j)) < 1e-9
    assert abs(g.kappa - cmath.exp(1j * math.pi / 4)) < 1e-9


def test_gauss_product_is_global_dimension():
    for name in ("semion", "toric_code", "fibonacci", "trivial"):
        g = inv.gauss_sums(MTCS[name])
        assert abs(g.p_plus * g.p_minus - g.D**2) < 1e-9


def test_crane_yetter_values():
    for w in MANIFOLDS.values():
        assert inv.crane_yetter(MTCS["trivial"], w).value == 1
    assert abs(inv.crane_yetter(MTCS["toric_code"], MANIFOLDS["S4"]).value - 4) < 1e-9
    expected = math.sqrt(2) ** 3 * cmath.exp(1j * math.pi / 4)
    got = inv.crane_yetter(MTCS["semion"], MANIFOLDS["CP2"]).value
    assert abs(got - (2 + 2j)) < 1e-9
    assert abs(got - expected) < 1e-9


def test_crane_yetter_multiplicative():
    m = MTCS["fibonacci"]
    for a, b in [("CP2", "S2xS2"), ("K3", "CP2bar"), ("E8", "S4")]:
        wa, wb = MANIFOLDS[a], MANIFOLDS[b]
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            union = wa.disjoint_union(wb)
        lhs = inv.crane_yetter(m, union).value
        rhs = inv.crane_yetter(m, wa).value * inv.crane_yetter(m, wb).value
        assert abs(lhs - rhs) < 1e-9 * max(1, abs(rhs))


def test_orientation_reversal_conjugates():
    m = MTCS["semion"]
    a = inv.crane_yetter(m, MANIFOLDS["CP2"]).value
    b = inv.crane_yetter(m, MANIFOLDS["CP2bar"]).value
    assert abs(a - b.conjugate()) < 1e-9


def test_modularity():
    assert inv.is_modular(MTCS["toric_code"]).modular
    assert inv.is_modular(MTCS["semion"]).modular
    assert inv.is_modular(MTCS["fibonacci"]).modular
    rep = inv.is_modular(MTCS["rep_z2"])
    assert not rep.modular
    assert rep.dim_torus3 == 2
    assert rep.s_rank == 1


def test_euler_theory():
    assert inv.euler_theory(3, bord2.pants()) == Fraction(1, 3)
    assert inv.euler_theory(3, bord2.closed_surface(2)) == Fraction(1, 9)
    assert inv.euler_theory(Fraction(1, 2), bord2.cup()) == Fraction(1, 2)
    with pytest.raises(ZeroDivisionError):
        inv.euler_theory(0, bord2.pants())


def test_euler_theory_is_a_functor():
    lam = Fraction(5, 3)
    for b1, b2 in bord2.composable_pairs(60, seed=0):
        whole = bord2.compose(b1, b2)
        assert inv.euler_theory(lam, whole) == inv.euler_theory(lam, b1) * inv.euler_theory(lam, b2)
        t = bord2.tensor(b1, b2)
        assert inv.euler_theory(lam, t) == inv.euler_theory(lam, b1) * inv.euler_theory(lam, b2)
    assert inv.euler_theory(lam, bord2.identity(2)) == 1


def test_parse_mtc():
    text = "name semion\nlabels 1 s\ndims 1 1\ntwists 1,0 0,1\nS\n1 1\n1 -1\n"
    m = inv.parse_mtc(text)
    assert m.name == "semion" and m.rank == 2
    assert inv.is_modular(m).modular
    with pytest.raises(InvParseError):
        inv.parse_mtc("labels 1\ndims 1\n")
    with pytest.raises(InvParseError):
        inv.parse_mtc("labels 1 s\ndims 1 1\ntwists 1,0 2,0\n")


def test_parse_manifold():
    w = inv.parse_manifold("name S2xS2\nchi 4\nform\n0 1\n1 0\n")
    assert (w.chi, w.signature) == (4, 0)
    with pytest.raises(InvParseError):
        inv.parse_manifold("chi four\n")
