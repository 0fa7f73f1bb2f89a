"""Tests for semisimple classes and their centralisers in models/centralizer.py"""

from fractions import Fraction

import pytest

from core.errors import DimensionError, NotNormalizedError, OracleSizeError
from models.centralizer import (SemisimpleClass, a_w_of_s, alcove_points, basis_of_phi_s, brute_force_w_of_s,
                                centralizer_data, invariant_factors_of_a_w, normalize_to_alcove, phi_of_s,
                                positive_roots_of_s, w0_type)
from models.rootdata import CartanType, parse_datum

from tests.conftest import frac_vector


class TestSemisimpleClass:
    """Construction and p-torsion projection."""

    def test_create(self, a2_sc):
        s = SemisimpleClass.create(a2_sc, ['1/3', 0])
        assert s.lam == frac_vector('1/3', 0)
        assert not s.projected

    def test_wrong_dimension(self, a2_sc):
        with pytest.raises(DimensionError):
            SemisimpleClass.create(a2_sc, [0])

    def test_p_torsion_is_projected(self):
        """In characteristic 2 the class 1/6 becomes its 2'-part 2/3."""
        s = SemisimpleClass.create(parse_datum('A1:sc;p=2'), ['1/6'])
        assert s.projected
        assert s.lam == frac_vector('2/3')

    def test_pure_p_torsion_is_trivial(self):
        s = SemisimpleClass.create(parse_datum('A1:sc;p=2'), ['1/4'])
        assert s.projected
        assert s.lam == (0,)

    def test_prime_to_p_kept(self):
        s = SemisimpleClass.create(parse_datum('A1:sc;p=2'), ['1/3'])
        assert not s.projected

    def test_scaled(self, a1_sc):
        assert SemisimpleClass.create(a1_sc, ['1/4']).scaled(3).lam == frac_vector('3/4')


class TestNormalisation:
    """Moving lambda into the fundamental alcove."""

    def test_translation(self, a1_sc):
        """5/4 goes to 1/4 by an affine and a simple reflection."""
        normalized, conjugator = normalize_to_alcove(SemisimpleClass.create(a1_sc, ['5/4']))
        assert normalized.lam == frac_vector('1/4')
        assert normalized.normalized
        assert conjugator.weyl.is_identity
        assert conjugator.translation == (-1,)

    def test_reflection(self, a1_sc):
        normalized, conjugator = normalize_to_alcove(SemisimpleClass.create(a1_sc, ['-1/4']))
        assert normalized.lam == frac_vector('1/4')
        assert conjugator.weyl.length == 1

    def test_already_in_alcove(self, b2_sc):
        s = SemisimpleClass.create(b2_sc, ['1/4', '1/4'])
        assert s.in_alcove
        normalized, conjugator = normalize_to_alcove(s)
        assert normalized.lam == s.lam
        assert conjugator.weyl.is_identity

    @pytest.mark.parametrize('text,lam', [
        ('A2:sc', ['7/3', '-5/3']), ('B3:ad', ['-1/2', '3/4', '5/4']), ('G2:sc', ['2/3', '-7/6']),
        ('A1xT1:sc', ['3/2', '5/7']),
    ])
    def test_lands_in_alcove(self, text, lam):
        """The result is in the alcove and central coordinates are untouched."""
        s = SemisimpleClass.create(parse_datum(text), lam)
        normalized, conjugator = normalize_to_alcove(s)
        assert normalized.in_alcove
        moved = conjugator.weyl.act_on_coweight(s.lam)
        assert normalized.lam == tuple(a + b for a, b in zip(moved, conjugator.translation))
        assert normalized.lam[s.datum.n:] == s.lam[s.datum.n:]


class TestRootSubsystem:
    """Phi(s), its basis and W^0(s)."""

    def test_identity_element(self, d4_sc):
        s = SemisimpleClass.create(d4_sc, [0, 0, 0, 0])
        assert len(phi_of_s(s)) == 24
        assert w0_type(s) == (CartanType((('D', 4),)), 192)

    def test_regular_element(self, a1_ad):
        s = SemisimpleClass.create(a1_ad, ['1/4'])
        assert phi_of_s(s) == ()
        assert basis_of_phi_s(s) == []
        assert w0_type(s) == (CartanType(()), 1)

    def test_affine_wall(self, a1_ad):
        """At lambda = 1/2 the basis is -theta and Phi^+(s) = {-alpha}."""
        s = SemisimpleClass.create(a1_ad, ['1/2'])
        assert [r.coords for r in basis_of_phi_s(s)] == [(-1,)]
        assert positive_roots_of_s(s) == frozenset({(-1,)})

    def test_pseudo_levi_in_b2(self, b2_sc):
        """varpi_1^vee / 2 for the short node: Phi(s) is A1 x A1 of long roots."""
        s = SemisimpleClass.create(b2_sc, [x / 2 for x in b2_sc.fundamental_coweights()[0]])
        assert s.in_alcove
        assert w0_type(s) == (CartanType((('A', 1), ('A', 1))), 4)
        assert len(basis_of_phi_s(s)) == 2

    def test_requires_alcove(self, a1_sc):
        with pytest.raises(NotNormalizedError):
            basis_of_phi_s(SemisimpleClass.create(a1_sc, ['5/4']))
        with pytest.raises(NotNormalizedError):
            a_w_of_s(SemisimpleClass.create(a1_sc, ['-1/4']))


class TestComponentGroup:
    """A_W(s) and the brute-force oracle."""

    def test_pgl2(self, a1_ad):
        """The regular class 1/4 in PGL_2 has a disconnected centraliser."""
        s = SemisimpleClass.create(a1_ad, ['1/4'])
        assert len(a_w_of_s(s)) == 2
        assert invariant_factors_of_a_w(s) == [2]

    def test_sl2_is_connected(self, a1_sc):
        s = SemisimpleClass.create(a1_sc, ['1/4'])
        assert len(a_w_of_s(s)) == 1
        assert invariant_factors_of_a_w(s) == []

    def test_pgl2_at_wall(self, a1_ad):
        """At 1/2 the generator swaps Phi^+(s) and is excluded."""
        assert len(a_w_of_s(SemisimpleClass.create(a1_ad, ['1/2']))) == 1

    def test_brute_force_pgl2(self, a1_ad):
        result = brute_force_w_of_s(SemisimpleClass.create(a1_ad, ['1/4']))
        assert (result.w_s_order, result.w0_s_order, result.invariant_factors) == (2, 1, [2])
        assert result.quotient_order == 2

    def test_brute_force_refuses(self):
        s = SemisimpleClass.create(parse_datum('E8:sc'), [0] * 8)
        with pytest.raises(OracleSizeError):
            brute_force_w_of_s(s, limit=100)

    def test_centralizer_data(self, a1_ad):
        data = centralizer_data(SemisimpleClass.create(a1_ad, ['5/4']))
        assert data.normalized.lam == frac_vector('1/4')
        assert data.a_w_invariants == [2]
        assert data.w0s_order == 1

    @pytest.mark.parametrize('text', ['A2:ad', 'B2:ad', 'A3:ad', 'C3:ad', 'G2:sc', 'D4:ad'])
    def test_matches_oracle(self, text):
        """|A_W(s)| and its invariants agree with W(s)/W^0(s) on every alcove point."""
        datum = parse_datum(text)
        for lam in alcove_points(datum, 3):
            s = SemisimpleClass.create(datum, lam)
            oracle = brute_force_w_of_s(s)
            elements = a_w_of_s(s)
            assert len(elements) == oracle.quotient_order
            assert invariant_factors_of_a_w(s, elements) == oracle.invariant_factors


class TestAlcovePoints:
    """The sweep points."""

    def test_a1(self, a1_sc):
        """The bound is on the coroot coordinates of lambda: 1/4 needs a bound of 4."""
        assert alcove_points(a1_sc, 2) == [frac_vector(0), frac_vector('1/2')]
        assert alcove_points(a1_sc, 4) == [frac_vector(0), frac_vector('1/4'), frac_vector('1/3'), frac_vector('1/2')]

    def test_pgl2_spot_value_is_swept(self, a1_ad):
        assert frac_vector('1/4') in alcove_points(a1_ad, 4)

    @pytest.mark.parametrize('text', ['B3:sc', 'G2:sc', 'A1xA2:ad', 'A1xT1:sc'])
    def test_all_in_alcove(self, text):
        datum = parse_datum(text)
        points = alcove_points(datum, 4)
        assert points
        assert all(SemisimpleClass.create(datum, lam).in_alcove for lam in points)
