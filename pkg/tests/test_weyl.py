"""Tests for Weyl group elements in models/weyl.py"""

from fractions import Fraction

import pytest

from core.errors import NotARootError, NotASubsystemError, OracleSizeError
from models.rootdata import CartanType, Root, parse_datum
from models.weyl import (WeylElement, classify_cartan_matrix, classify_subsystem, element_index, enumerate_weyl,
                         left_multiplication_table, longest_element, reduced_word, reflection, weyl_group_order)


class TestOrders:
    """|W| from the product formula and by enumeration."""

    @pytest.mark.parametrize('text,order', [
        ('A1', 2), ('A3', 24), ('B3', 48), ('C4', 384), ('D4', 192), ('G2', 12), ('F4', 1152),
        ('E6', 51840), ('E8', 696729600), ('A1xG2', 24),
    ])
    def test_formula(self, text, order):
        assert weyl_group_order(CartanType.parse(text)) == order

    @pytest.mark.parametrize('text', ['A2:sc', 'B3:sc', 'G2:sc', 'D4:sc', 'F4:sc'])
    def test_enumeration_matches_formula(self, text):
        """Breadth-first enumeration finds every element exactly once."""
        datum = parse_datum(text)
        elements = list(enumerate_weyl(datum))
        assert len(elements) == weyl_group_order(datum.cartan_type)
        assert len({w.key for w in elements}) == len(elements)
        assert elements[0].is_identity

    def test_oracle_limit(self):
        """Enumerating E8 is refused below its order."""
        with pytest.raises(OracleSizeError) as info:
            enumerate_weyl(parse_datum('E8:sc'), limit=1000)
        assert info.value.order == 696729600
        assert info.value.limit == 1000


class TestElements:
    """Multiplication, words and actions."""

    def test_reflection_action(self, a2_sc):
        """s_1 negates alpha_1^vee."""
        s0 = WeylElement.simple(a2_sc.system, 0)
        assert s0.act_on_coweight((Fraction(1), Fraction(0))) == (-1, 0)

    def test_longest_element_a2(self, a2_sc):
        """w0 = s1 s2 s1, peeled from the smallest right descent."""
        w0 = longest_element(a2_sc)
        assert w0.length == 3
        assert reduced_word(w0) == (0, 1, 0)
        assert w0 == WeylElement.from_word(a2_sc.system, [1, 0, 1])

    def test_highest_root_reflection_is_w0_in_a2(self, a2_sc):
        theta = a2_sc.system.highest_roots[0]
        assert reflection(a2_sc, theta) == longest_element(a2_sc)

    @pytest.mark.parametrize('text,order', [('A2:sc', 3), ('B2:sc', 4), ('G2:sc', 6), ('A3:sc', 4)])
    def test_coxeter_element_order(self, text, order):
        """s_1 ... s_n has order the Coxeter number."""
        datum = parse_datum(text)
        assert WeylElement.from_word(datum.system, range(datum.n)).order == order

    def test_inverse_and_power(self, b2_sc):
        w = WeylElement.from_word(b2_sc.system, [0, 1])
        assert (w * w.inverse).is_identity
        assert w.power(4).is_identity
        assert w.power(-1) == w.inverse

    def test_length_equals_word_length(self):
        """Every reduced word has length l(w) and spells w."""
        datum = parse_datum('B3:sc')
        for w in enumerate_weyl(datum):
            word = w.reduced_word
            assert len(word) == w.length
            assert WeylElement.from_word(datum.system, word) == w

    def test_descents(self, a2_sc):
        s0 = WeylElement.simple(a2_sc.system, 0)
        assert s0.left_descents == frozenset({0})
        assert s0.right_descents == frozenset({0})
        w0 = longest_element(a2_sc)
        assert w0.left_descents == w0.right_descents == frozenset({0, 1})

    def test_w0_length_is_positive_count(self, d4_sc):
        assert longest_element(d4_sc).length == 12
        assert len(longest_element(d4_sc).inversions()) == 12

    def test_parabolic_longest_element(self, d4_sc):
        """w_I for I = {1, 2, 3} (0-based {0, 1, 2}) is the w0 of A3."""
        assert longest_element(d4_sc, [0, 1, 2]).length == 6

    def test_reflection_rejects_non_roots(self, a2_sc):
        with pytest.raises(NotARootError):
            reflection(a2_sc, Root((2, 0), (1, 0)))

    def test_left_multiplication_table(self, b2_sc):
        """Column 0 of the table holds the simple reflections."""
        table = left_multiplication_table(b2_sc.system)
        for i in range(2):
            assert table[i, 0] == element_index(b2_sc.system, WeylElement.simple(b2_sc.system, i))


class TestClassification:
    """Cartan matrix classification and subsystems."""

    @pytest.mark.parametrize('text', ['A3:sc', 'B3:sc', 'C3:sc', 'D5:sc', 'E6:sc', 'F4:sc', 'G2:sc', 'A1xB2:sc'])
    def test_full_system(self, text):
        """Phi itself is classified as the datum's type."""
        datum = parse_datum(text)
        cartan_type, order = classify_subsystem(datum, datum.roots)
        assert sorted(cartan_type.components) == sorted(datum.cartan_type.components)
        assert order == weyl_group_order(datum.cartan_type)

    def test_long_roots_of_b2(self, b2_sc):
        """The long roots of B2 form A1 x A1."""
        long_roots = [r for r in b2_sc.roots if r.coords in {(0, 1), (0, -1), (2, 1), (-2, -1)}]
        assert classify_subsystem(b2_sc, long_roots) == (CartanType((('A', 1), ('A', 1))), 4)

    def test_not_closed(self, a2_sc):
        with pytest.raises(NotASubsystemError):
            classify_subsystem(a2_sc, [a2_sc.roots[0]])

    def test_empty(self, a2_sc):
        assert classify_subsystem(a2_sc, []) == (CartanType(()), 1)

    def test_matrix_d4(self):
        cartan = [[2, 0, -1, 0], [0, 2, -1, 0], [-1, -1, 2, -1], [0, 0, -1, 2]]
        assert classify_cartan_matrix(cartan) == CartanType((('D', 4),))
