"""Tests for Frobenius actions and F-stable splittings in models/frobenius.py"""

from fractions import Fraction

import pytest

from core.errors import VerificationError
from models.centralizer import SemisimpleClass
from models.frobenius import (FrobeniusAction, centralizer_F_stable, f_stable_splitting, iota_is_equivariant,
                              is_F_stable)
from models.rootdata import parse_datum
from models.tits import sigma_of_word, torus_element

THIRD = Fraction(1, 3)


class TestFrobeniusAction:
    """t -> q t on torus classes."""

    def test_invalid_q(self):
        with pytest.raises(ValueError):
            FrobeniusAction(1)

    def test_only_trivial_weyl_action(self):
        with pytest.raises(ValueError):
            FrobeniusAction(3, weyl_action='graph')

    def test_act_on_torus(self, a1_sc):
        F = FrobeniusAction(2)
        assert not F.is_odd
        assert F.act_on_torus(a1_sc, (THIRD,)) == (Fraction(2, 3),)

    def test_fixes_sigma(self, b2_sc):
        """sigma(w) has torus part 0 and is fixed by every F."""
        x = sigma_of_word(b2_sc, [0, 1, 0])
        assert FrobeniusAction(5)(x) == x

    def test_is_F_stable(self, a1_sc):
        t = torus_element(a1_sc, (THIRD,))
        assert is_F_stable(t, FrobeniusAction(4))
        assert not is_F_stable(t, FrobeniusAction(2))

    def test_half_integral_fixed_for_odd_q(self, a1_sc):
        """sigma(s)^2 = alpha^vee/2 is fixed when q is odd."""
        square = sigma_of_word(a1_sc, [0, 0])
        assert is_F_stable(square, FrobeniusAction(3))
        assert is_F_stable(square, FrobeniusAction(9))


class TestStability:
    """F-stability of C_G(s)."""

    def test_stable(self, a1_ad):
        s = SemisimpleClass.create(a1_ad, ['1/4'])
        assert centralizer_F_stable(s, FrobeniusAction(3))

    def test_not_stable(self, a1_sc):
        """q lambda = 1 is central where lambda = 1/3 is regular."""
        s = SemisimpleClass.create(a1_sc, ['1/3'])
        assert not centralizer_F_stable(s, FrobeniusAction(3))
        with pytest.raises(VerificationError) as info:
            f_stable_splitting(s, FrobeniusAction(3))
        assert info.value.identity == 'f-stable-centralizer'


class TestSplitting:
    """F-fixed sections."""

    def test_pgl2_odd_q(self, a1_ad):
        splitting = f_stable_splitting(SemisimpleClass.create(a1_ad, ['1/4']), FrobeniusAction(3))
        assert len(splitting.certificate) == 2
        assert all(splitting.fixed)
        assert splitting.checks == ['f-stable-centralizer', 'f-fixed-section', 'f-action', 'f-split-order']

    def test_even_q_uses_characteristic_two(self, a1_ad):
        splitting = f_stable_splitting(SemisimpleClass.create(a1_ad, ['1/3']), FrobeniusAction(2))
        assert splitting.certificate.datum.p == 2
        assert len(splitting.certificate) == 1

    @pytest.mark.parametrize('text,lam,q', [
        ('B2:ad', ['1/4', 0], 5), ('D4:ad', [0, 0, '1/2', 0], 3), ('C2:ad', ['1/2', 0], 7),
    ])
    def test_fixed_sections(self, text, lam, q):
        splitting = f_stable_splitting(SemisimpleClass.create(parse_datum(text), lam), FrobeniusAction(q))
        assert len(splitting.fixed) == len(splitting.certificate)
        assert all(splitting.fixed)


class TestIotaEquivariance:
    """iota commutes with F exactly when q acts trivially on Z(G_sc)."""

    def test_a2_q2(self, a2_sc):
        assert not iota_is_equivariant(a2_sc, 2)

    def test_a2_q4(self, a2_sc):
        assert iota_is_equivariant(a2_sc, 4)

    def test_odd_q_on_two_torsion(self, d4_sc):
        assert iota_is_equivariant(d4_sc, 3)

    def test_trivial_centre(self):
        assert iota_is_equivariant(parse_datum('E8:sc'), 2)
