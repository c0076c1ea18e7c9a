"""Structure constants, element arithmetic, and the superalgebra axioms."""

from fractions import Fraction

import pytest

from tn2alg import (
    TOPOLOGICAL_N2,
    WITT,
    Element,
    G,
    H,
    L,
    Q,
    bracket,
    jacobi_defect,
    linear_combine,
    skew_defect,
)


def mono(alg, g, c=1):
    return alg.monomial(g, c)


class TestScalars:
    # the engine's scalar type is fractions.Fraction; pin the contract it
    # must provide: lowest terms, positive denominator, exact arithmetic

    def test_lowest_terms(self):
        x = Fraction(6, -4)
        assert x.numerator == -3 and x.denominator == 2

    def test_exact_arithmetic(self):
        assert Fraction(1, 3) + Fraction(1, 6) == Fraction(1, 2)
        assert Fraction(2, 7) * Fraction(7, 2) == 1
        assert 1 / Fraction(-5, 3) == Fraction(-3, 5)


class TestBracketTable:
    def test_LL(self, alg):
        assert bracket(mono(alg, L(1)), mono(alg, L(-1))) == mono(alg, L(0), 2)

    def test_GQ(self, alg):
        got = bracket(mono(alg, G(1)), mono(alg, Q(-1)))
        assert got == alg.element([(2, L(0)), (2, H(0))])

    def test_same_family_zero(self, alg):
        assert bracket(mono(alg, H(3)), mono(alg, H(5))).is_zero()
        assert bracket(mono(alg, G(2)), mono(alg, G(-2))).is_zero()
        assert bracket(mono(alg, Q(0)), mono(alg, Q(4))).is_zero()

    def test_QG_by_skew_completion(self, alg):
        # [Q_m, G_n] = [G_n, Q_m] since both arguments are odd
        got = bracket(mono(alg, Q(2)), mono(alg, G(1)))
        assert got == alg.element([(2, L(3)), (-4, H(3))])

    def test_LH_LQ(self, alg):
        assert bracket(mono(alg, L(2)), mono(alg, H(3))) == mono(alg, H(5), -3)
        assert bracket(mono(alg, L(2)), mono(alg, Q(-1))) == mono(alg, Q(1), 1)

    def test_HG_HQ(self, alg):
        assert bracket(mono(alg, H(4)), mono(alg, G(-1))) == mono(alg, G(3), 1)
        assert bracket(mono(alg, H(4)), mono(alg, Q(-1))) == mono(alg, Q(3), -1)

    def test_bilinear(self, alg):
        x = alg.element([(2, L(1)), (Fraction(1, 2), G(0))])
        y = alg.element([(3, Q(-1)), (-1, L(0))])
        lhs = bracket(x, y)
        rhs = linear_combine(
            [
                (6, bracket(mono(alg, L(1)), mono(alg, Q(-1)))),
                (-2, bracket(mono(alg, L(1)), mono(alg, L(0)))),
                (Fraction(3, 2), bracket(mono(alg, G(0)), mono(alg, Q(-1)))),
                (Fraction(-1, 2), bracket(mono(alg, G(0)), mono(alg, L(0)))),
            ]
        )
        assert lhs == rhs

    def test_zero_shortcut(self, alg):
        assert bracket(alg.zero(), mono(alg, L(5))).is_zero()
        assert bracket(mono(alg, L(5)), alg.zero()).is_zero()

    def test_algebra_mixing_rejected(self, alg, witt):
        with pytest.raises(ValueError):
            bracket(mono(alg, L(0)), mono(witt, L(0)))

    def test_witt_families_restricted(self, witt):
        with pytest.raises(ValueError):
            witt.monomial(H(0))


class TestAxioms:
    WINDOW = range(-3, 4)

    def test_super_skew_symmetry(self, alg):
        gens = alg.generators(-3, 3)
        for x in gens:
            for y in gens:
                assert skew_defect(alg, x, y).is_zero(), (x, y)

    def test_jacobi_window(self, alg):
        gens = alg.generators(-2, 2)
        for x in gens:
            for y in gens:
                for z in gens:
                    assert jacobi_defect(alg, x, y, z).is_zero(), (x, y, z)

    def test_jacobi_examples(self, alg):
        assert jacobi_defect(alg, L(0), L(0), L(0)).is_zero()
        assert jacobi_defect(alg, L(1), G(0), Q(-1)).is_zero()

    def test_grading(self, alg):
        gens = alg.generators(-4, 4)
        for x in gens:
            for y in gens:
                for g in bracket(mono(alg, x), mono(alg, y)).terms:
                    assert g.index == x.index + y.index

    def test_parity(self, alg):
        gens = alg.generators(-3, 3)
        for x in gens:
            for y in gens:
                for g in bracket(mono(alg, x), mono(alg, y)).terms:
                    assert g.parity == (x.parity + y.parity) % 2

    def test_l0_eigenvalue(self, alg):
        for fam in (L, H, G, Q):
            for n in range(-6, 7):
                x = mono(alg, fam(n))
                assert bracket(mono(alg, L(0)), x) == x.scale(-n)

    def test_witt_baseline(self, witt):
        gens = witt.generators(-3, 3)
        for x in gens:
            for y in gens:
                assert skew_defect(witt, x, y).is_zero()
                got = bracket(mono(witt, x), mono(witt, y))
                coeff = x.index - y.index
                assert got == witt.monomial(L(x.index + y.index), coeff)
                for z in gens:
                    assert jacobi_defect(witt, x, y, z).is_zero()


class TestElement:
    def test_canonical_no_zeros(self, alg):
        e = Element(alg, {L(0): Fraction(0), H(1): 2})
        assert L(0) not in e.terms
        assert e == alg.monomial(H(1), 2)

    def test_linear_combine_cancellation(self, alg):
        e = linear_combine([(1, mono(alg, L(0))), (-1, mono(alg, L(0)))])
        assert e.is_zero()

    def test_linear_combine_disjoint(self, alg):
        e = linear_combine([(2, mono(alg, L(0))), (3, mono(alg, H(1)))])
        assert e == alg.element([(2, L(0)), (3, H(1))])

    def test_linear_combine_scalar_normalization(self, alg):
        e = linear_combine([(Fraction(1, 2), mono(alg, G(0), 2))])
        assert e == mono(alg, G(0))

    def test_parity_and_degree_homogeneity(self, alg):
        even = alg.element([(1, L(2)), (2, H(2))])
        assert even.parity() == 0 and even.degree() == 2
        mixedp = alg.element([(1, L(0)), (1, G(0))])
        assert mixedp.parity() is None and mixedp.degree() == 0
        mixedd = alg.element([(1, G(0)), (1, G(1))])
        assert mixedd.parity() == 1 and mixedd.degree() is None
        assert alg.zero().parity() == 0 and alg.zero().degree() == 0

    def test_generator_parities(self):
        assert L(3).parity == 0 and H(-2).parity == 0
        assert G(0).parity == 1 and Q(7).parity == 1
        assert L(5).degree == 5 and Q(-4).degree == -4

    def test_equality_is_structural(self, alg):
        a = alg.element([(1, L(0)), (2, H(1))])
        b = alg.element([(2, H(1)), (1, L(0))])
        assert a == b
        assert a != alg.element([(1, L(0))])

    def test_scaling(self, alg):
        e = alg.element([(2, L(1)), (-4, Q(0))])
        assert e.scale(Fraction(1, 2)) == alg.element([(1, L(1)), (-2, Q(0))])
        assert (0 * e).is_zero()
        assert -e == e.scale(-1)
