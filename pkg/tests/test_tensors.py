"""Twist, cyclic, diagonal actions, and the skew projection."""

import random
from fractions import Fraction

import pytest

from tn2alg import (
    G,
    H,
    L,
    Q,
    Tensor2,
    Tensor3,
    act2,
    act3,
    bracket,
    cyclic,
    is_skew,
    skew_project,
    tensor2,
    tensor3,
    twist,
)


def mono(alg, g, c=1):
    return alg.monomial(g, c)


def t2(alg, *slots):
    return Tensor2(alg, {tuple(slots): 1})


def t3(alg, *slots):
    return Tensor3(alg, {tuple(slots): 1})


def random_tensor2(alg, rng, lo=-3, hi=3, nterms=4):
    terms = {}
    gens = alg.generators(lo, hi)
    for _ in range(nterms):
        a, b = rng.choice(gens), rng.choice(gens)
        terms[(a, b)] = terms.get((a, b), 0) + Fraction(rng.randint(-4, 4))
    return Tensor2(alg, terms)


def random_tensor3(alg, rng, lo=-3, hi=3, nterms=4):
    terms = {}
    gens = alg.generators(lo, hi)
    for _ in range(nterms):
        key = (rng.choice(gens), rng.choice(gens), rng.choice(gens))
        terms[key] = terms.get(key, 0) + Fraction(rng.randint(-4, 4))
    return Tensor3(alg, terms)


class TestTwist:
    def test_odd_odd_sign(self, alg):
        assert twist(t2(alg, G(0), Q(1))) == -t2(alg, Q(1), G(0))

    def test_even_even_no_sign(self, alg):
        assert twist(t2(alg, L(0), H(2))) == t2(alg, H(2), L(0))

    def test_even_odd_no_sign(self, alg):
        assert twist(t2(alg, H(1), G(-1))) == t2(alg, G(-1), H(1))

    def test_involution(self, alg):
        rng = random.Random(101)
        for _ in range(25):
            t = random_tensor2(alg, rng)
            assert twist(twist(t)) == t


class TestCyclic:
    def test_all_even(self, alg):
        assert cyclic(t3(alg, L(0), L(1), H(2))) == t3(alg, L(1), H(2), L(0))

    def test_odd_first_slot(self, alg):
        # moving G_0 past Q_1 (x) L_2 costs (-1)^{1*(1+0)}
        assert cyclic(t3(alg, G(0), Q(1), L(2))) == -t3(alg, Q(1), L(2), G(0))

    def test_order_three(self, alg):
        rng = random.Random(102)
        for _ in range(25):
            t = random_tensor3(alg, rng)
            assert cyclic(cyclic(cyclic(t))) == t


class TestAct2:
    def test_HQ_pair(self, alg):
        got = act2(mono(alg, L(1)), t2(alg, H(2), Q(-2)))
        want = Tensor2(alg, {(H(3), Q(-2)): -2, (H(2), Q(-1)): 2})
        assert got == want

    def test_first_correction_tensor(self, alg):
        u1 = t2(alg, L(1), H(-1)) - t2(alg, L(0), H(0))
        got = act2(mono(alg, L(-1)), u1)
        want = Tensor2(
            alg, {(L(-1), H(0)): 1, (L(0), H(-1)): -2, (L(1), H(-2)): 1}
        )
        assert got == want

    def test_odd_actor_sign(self, alg):
        got = act2(mono(alg, G(0)), t2(alg, Q(0), H(0)))
        want = Tensor2(alg, {(L(0), H(0)): 2, (Q(0), G(0)): 1})
        assert got == want

    def test_mixed_parity_rejected(self, alg):
        x = alg.element([(1, L(0)), (1, G(0))])
        with pytest.raises(ValueError):
            act2(x, t2(alg, L(0), L(0)))

    def test_degree_additivity(self, alg):
        rng = random.Random(103)
        for _ in range(20):
            m = rng.randint(-3, 3)
            fam = rng.choice((L, H, G, Q))
            t = random_tensor2(alg, rng, nterms=1)
            i = t.degree()
            out = act2(mono(alg, fam(m)), t)
            if not out.is_zero():
                assert out.degree() == i + m

    def test_l0_scalar(self, alg):
        rng = random.Random(104)
        for _ in range(20):
            t = random_tensor2(alg, rng, nterms=1)
            i = t.degree()
            assert act2(mono(alg, L(0)), t) == t.scale(-i)


class TestAct3:
    def test_l0_eigenvalue(self, alg):
        t = t3(alg, L(1), L(2), L(3))
        assert act3(mono(alg, L(0)), t) == t.scale(-6)

    def test_zero_tensor(self, alg):
        assert act3(mono(alg, G(2)), Tensor3(alg, {})).is_zero()

    def test_first_slot_only(self, alg):
        got = act3(mono(alg, G(0)), t3(alg, Q(0), L(0), L(0)))
        assert got == t3(alg, L(0), L(0), L(0)).scale(2)


class TestModuleAction:
    def test_act2_bracket_identity(self, alg):
        rng = random.Random(105)
        gens = alg.generators(-2, 2)
        for _ in range(60):
            x, y = rng.choice(gens), rng.choice(gens)
            t = random_tensor2(alg, rng)
            xe, ye = mono(alg, x), mono(alg, y)
            lhs = act2(bracket(xe, ye), t) if not bracket(xe, ye).is_zero() else Tensor2(alg, {})
            rhs = act2(xe, act2(ye, t))
            back = act2(ye, act2(xe, t))
            if x.parity & y.parity:
                rhs = rhs + back
            else:
                rhs = rhs - back
            assert lhs == rhs, (x, y)

    def test_act3_bracket_identity(self, alg):
        rng = random.Random(106)
        gens = alg.generators(-2, 2)
        for _ in range(40):
            x, y = rng.choice(gens), rng.choice(gens)
            t = random_tensor3(alg, rng)
            xe, ye = mono(alg, x), mono(alg, y)
            b = bracket(xe, ye)
            lhs = act3(b, t) if not b.is_zero() else Tensor3(alg, {})
            rhs = act3(xe, act3(ye, t))
            back = act3(ye, act3(xe, t))
            if x.parity & y.parity:
                rhs = rhs + back
            else:
                rhs = rhs - back
            assert lhs == rhs, (x, y)

    def test_twist_equivariance(self, alg):
        rng = random.Random(107)
        gens = alg.generators(-3, 3)
        for _ in range(40):
            x = mono(alg, rng.choice(gens))
            t = random_tensor2(alg, rng)
            assert twist(act2(x, t)) == act2(x, twist(t))


class TestSkew:
    def test_skew_project_even_pair(self, alg):
        got = skew_project(t2(alg, L(0), L(1)))
        assert got == t2(alg, L(0), L(1)) - t2(alg, L(1), L(0))

    def test_odd_diagonal_is_skew(self, alg):
        # twist(G0 (x) G0) = -G0 (x) G0, so (1 + twist) kills it
        assert is_skew(t2(alg, G(0), G(0)))

    def test_even_diagonal_not_skew(self, alg):
        assert not is_skew(t2(alg, L(0), L(0)))

    def test_projection_lands_in_image(self, alg):
        rng = random.Random(108)
        for _ in range(25):
            t = random_tensor2(alg, rng)
            assert is_skew(skew_project(t))

    def test_zero_is_skew(self, alg):
        assert is_skew(Tensor2(alg, {}))


class TestTensorBasics:
    def test_canonical_form(self, alg):
        t = Tensor2(alg, {(L(0), L(1)): Fraction(0), (H(0), H(0)): 3})
        assert (L(0), L(1)) not in t.terms
        assert t.coeff((H(0), H(0))) == 3

    def test_parity_and_degree(self, alg):
        t = t2(alg, G(2), H(-1))
        assert t.parity() == 1 and t.degree() == 1
        mixed = t2(alg, L(0), L(0)) + t2(alg, L(1), L(0))
        assert mixed.degree() is None

    def test_tensor_products_bilinear(self, alg):
        x = alg.element([(2, L(0)), (1, H(1))])
        y = mono(alg, G(2), 3)
        t = tensor2(x, y)
        assert t == Tensor2(alg, {(L(0), G(2)): 6, (H(1), G(2)): 3})
        t3v = tensor3(x, y, mono(alg, Q(0)))
        assert t3v.coeff((L(0), G(2), Q(0))) == 6

    def test_rank_guard(self, alg):
        with pytest.raises(ValueError):
            Tensor2(alg, {(L(0), L(0), L(0)): 1})
