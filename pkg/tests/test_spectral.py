import random
from fractions import Fraction
from itertools import product

import pytest

from conftest import COORD_POOL, random_dominant_affine, random_pi
from torblocks.rootdata import LieType, fundamental_weight, gamma_class
from torblocks.spectral import (
    PiFunction,
    SpectralError,
    XiCharacter,
    chi,
    g_pi,
    is_isomorphic,
    pi_scale_action,
    vanishing_test,
    wt,
    xi_add,
    xi_neg,
    xi_scale_action,
)
from torblocks.torus import ScalingElement, torus_point
from torblocks.weights import AffineWeight
from torblocks.zlattice import full_lattice, hnf, member

A1 = LieType.parse("A1")
A2 = LieType.parse("A2")

LAM1 = AffineWeight(A1, 1, fundamental_weight(A1, 1))


def two_point_pi(w_plus=LAM1, w_minus=LAM1):
    return PiFunction(A1, 2, ((torus_point(1), w_plus),
                              (torus_point(-1), w_minus)))


def test_pi_validation():
    with pytest.raises(SpectralError):
        PiFunction(A1, 2, ((torus_point(2), AffineWeight(A1, 0, fundamental_weight(A1, 1).scale(0))),))
    bad = AffineWeight(A2, 1, fundamental_weight(A2, 1) + fundamental_weight(A2, 1))
    with pytest.raises(SpectralError):
        PiFunction(A2, 2, ((torus_point(2), bad),))
    with pytest.raises(SpectralError):
        PiFunction(A1, 2, ((torus_point(2), LAM1), (torus_point(2), LAM1)))
    # entries come out sorted by point regardless of input order
    pi = two_point_pi()
    assert [p.coords for p, _ in pi.entries] == [(-1,), (1,)]


def test_wt_additive():
    assert wt(PiFunction(A2, 2, ())).is_zero()
    pi = two_point_pi()
    assert wt(pi).level == 2
    assert wt(pi).fin.coeffs == (2,)


def test_chi_examples():
    pi = PiFunction(A2, 3, ((torus_point(2, 3),
                             AffineWeight(A2, 1, fundamental_weight(A2, 1))),))
    x = chi(pi)
    ((p, (level, cls)),) = x.entries
    assert p.coords == (2, 3) and level == 1 and str(cls) == "w1"


def test_chi_is_additive_on_common_support():
    rng = random.Random(31)
    for _ in range(100):
        t = rng.choice([A1, A2])
        pts = [torus_point(rng.choice(COORD_POOL))]
        e1 = tuple((p, random_dominant_affine(rng, t)) for p in pts)
        e2 = tuple((p, random_dominant_affine(rng, t)) for p in pts)
        pi1 = PiFunction(t, 2, e1)
        pi2 = PiFunction(t, 2, e2)
        merged = PiFunction(t, 2, tuple(
            (p, a + b) for (p, a), (_, b) in zip(e1, e2)))
        assert chi(merged) == xi_add(chi(pi1), chi(pi2))


def test_xi_group_laws():
    x = chi(two_point_pi())
    assert xi_add(x, xi_neg(x)).entries == ()
    y = chi(PiFunction(A1, 2, ((torus_point(2), LAM1),)))
    assert xi_add(x, y) == xi_add(y, x)


def test_scale_action_naturality():
    rng = random.Random(41)
    for _ in range(100):
        t = rng.choice([A1, A2])
        d = rng.randint(1, 3)
        pi = random_pi(rng, t, d)
        b = ScalingElement(tuple(rng.choice(COORD_POOL) for _ in range(d)))
        assert chi(pi_scale_action(b, pi)) == xi_scale_action(b, chi(pi))


def test_vanishing_test_examples():
    pi = two_point_pi()
    for m in (1, 3, -5):
        assert vanishing_test(pi, (m,))
    for m in (0, 2, -4):
        assert not vanishing_test(pi, (m,))
    single = PiFunction(A2, 3, ((torus_point(2, 3),
                                 AffineWeight(A2, 1, fundamental_weight(A2, 1))),))
    for m in product(range(-3, 4), repeat=2):
        assert not vanishing_test(single, m)


def test_g_pi_examples():
    single = PiFunction(A2, 3, ((torus_point(2, 3),
                                 AffineWeight(A2, 1, fundamental_weight(A2, 1))),))
    res = g_pi(single)
    assert res.lattice == full_lattice(2)
    assert res.quotient.index == 1

    res = g_pi(two_point_pi())
    assert res.lattice.basis == ((2,),)
    assert res.quotient.invariant_factors == (2,)

    other = AffineWeight(A1, 3, fundamental_weight(A1, 1))
    res = g_pi(two_point_pi(w_minus=other))
    assert res.lattice == full_lattice(1)

    with pytest.raises(SpectralError):
        g_pi(PiFunction(A1, 2, ()))


def test_g_pi_matches_box_oracle():
    rng = random.Random(101)
    types = [A1, A2, LieType.parse("C2")]
    for _ in range(60):
        d = rng.randint(1, 3)
        pi = random_pi(rng, rng.choice(types), d)
        res = g_pi(pi)
        gens = [m for m in product(range(-6, 7), repeat=d)
                if not vanishing_test(pi, m)]
        brute = hnf(gens, d)
        assert res.lattice == brute
        # P_0 (sign kernel) always sits inside G_pi
        assert res.lattice.index() <= 2 ** d
        for _, witness in res.generators_log:
            assert not vanishing_test(pi, witness)


def test_g_pi_scale_invariant():
    rng = random.Random(59)
    for _ in range(40):
        d = rng.randint(1, 3)
        pi = random_pi(rng, A1, d)
        b = ScalingElement(tuple(rng.choice(COORD_POOL) for _ in range(d)))
        assert g_pi(pi_scale_action(b, pi)).lattice == g_pi(pi).lattice


def test_is_isomorphic():
    pi = two_point_pi()
    assert is_isomorphic(pi, (0,), pi, (0,))
    assert not is_isomorphic(pi, (0,), pi, (1,))
    assert is_isomorphic(pi, (0,), pi, (2,))
    b = ScalingElement((Fraction(5, 3),))
    assert is_isomorphic(pi, (1,), pi_scale_action(b, pi), (1,))
    # delta shifts are invisible
    shifted = two_point_pi(
        w_plus=AffineWeight(A1, 1, fundamental_weight(A1, 1), Fraction(9, 4)))
    assert is_isomorphic(pi, (0,), shifted, (0,))
    # level mismatch is a definitive no, not an error
    other = two_point_pi(w_minus=AffineWeight(A1, 3, fundamental_weight(A1, 1)))
    assert not is_isomorphic(pi, (0,), other, (0,))


def test_is_isomorphic_is_equivalence():
    rng = random.Random(77)
    for _ in range(60):
        d = rng.randint(1, 2)
        pi = random_pi(rng, A1, d, max_points=3)
        g = tuple(rng.randint(-3, 3) for _ in range(d))
        b = ScalingElement(tuple(rng.choice(COORD_POOL) for _ in range(d)))
        pi2, g2 = pi_scale_action(b, pi), g
        pi3 = pi_scale_action(
            ScalingElement(tuple(rng.choice(COORD_POOL) for _ in range(d))),
            pi2)
        assert is_isomorphic(pi, g, pi, g)
        assert is_isomorphic(pi, g, pi2, g2)
        assert is_isomorphic(pi2, g2, pi, g)
        assert is_isomorphic(pi, g, pi3, g)
