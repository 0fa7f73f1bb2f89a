"""Tests for the fundamental group A in models/fundgroup.py"""

from fractions import Fraction

import pytest

from models.fundgroup import (a_sub_G, center_elements, fundamental_group, generator_nodes, group_invariants, iota,
                              node_permutation, prime_to_p_part, varpi_check, varpi_of_coweight)
from models.rootdata import parse_datum

HALF = Fraction(1, 2)


class TestStructure:
    """Order and invariants of A."""

    @pytest.mark.parametrize('text,invariants', [
        ('A1:sc', [2]), ('A3:sc', [4]), ('B3:sc', [2]), ('C3:sc', [2]), ('D4:sc', [2, 2]), ('D5:sc', [4]),
        ('E6:sc', [3]), ('E7:sc', [2]), ('E8:sc', []), ('G2:sc', []), ('A1xA2:sc', [6]),
    ])
    def test_invariants(self, text, invariants):
        datum = parse_datum(text)
        group = fundamental_group(datum)
        assert group_invariants(datum.system, list(group)) == invariants
        assert len(group) == datum.connection_index

    def test_generator_nodes(self):
        assert generator_nodes('D', 4) == [0, 1]
        assert generator_nodes('D', 5) == [0]
        assert generator_nodes('A', 3) == [2]
        assert generator_nodes('F', 4) == []

    def test_identity_first(self, d4_sc):
        group = fundamental_group(d4_sc)
        assert group.identity.is_identity
        assert all(a.order == 2 for a in group if not a.is_identity)

    def test_multiply(self, d4_sc):
        """The Klein four group: the product of two generators is the third element."""
        group = fundamental_group(d4_sc)
        a, b = group.generator_element(0), group.generator_element(1)
        c = group.multiply(a, b)
        assert c not in (group.identity, a, b)
        assert group.power(c, 2) == group.identity

    def test_cached(self, a2_sc):
        assert fundamental_group(a2_sc) is fundamental_group(parse_datum('A2:ad'))


class TestVarpi:
    """The isomorphism A -> P^vee/Q^vee."""

    def test_a1_generator(self, a1_sc):
        """The generator maps to -varpi^vee = 1/2 modulo Z."""
        a = fundamental_group(a1_sc).generator_element(0)
        assert varpi_check(a) == (HALF,)
        assert varpi_of_coweight(a1_sc.system, 0) == (HALF,)

    @pytest.mark.parametrize('text', ['A3:sc', 'D4:sc', 'E6:sc', 'B2xC3:sc'])
    def test_homomorphism(self, text):
        datum = parse_datum(text)
        group = fundamental_group(datum)
        for a in group:
            for b in group:
                total = tuple((x + y) % 1 for x, y in zip(varpi_check(a), varpi_check(b)))
                assert varpi_check(group.multiply(a, b)) == total

    def test_injective(self, d4_sc):
        classes = {varpi_check(a) for a in fundamental_group(d4_sc)}
        assert len(classes) == 4

    def test_generator_is_minus_fundamental_coweight(self):
        """In A3 the generator at node 3 maps to -varpi_3^vee."""
        datum = parse_datum('A3:sc')
        a = fundamental_group(datum).generator_element(0)
        expected = tuple((-x) % 1 for x in datum.system.fundamental_coweight(2))
        assert varpi_check(a) == expected


class TestIota:
    """Central torus classes."""

    def test_iota(self, a1_sc):
        a = fundamental_group(a1_sc).generator_element(0)
        assert iota(a) == (HALF,)
        assert iota(a, 3) == (HALF,)

    def test_p_divides_order(self, a1_sc):
        a = fundamental_group(a1_sc).generator_element(0)
        with pytest.raises(ValueError):
            iota(a, 2)

    def test_center(self, a1_sc):
        assert center_elements(a1_sc) == [(0,), (HALF,)]


class TestSubgroups:
    """A_G and the p'-part."""

    def test_a_g_sc_is_trivial(self, a1_sc, d4_sc):
        assert len(a_sub_G(a1_sc)) == 1
        assert len(a_sub_G(d4_sc)) == 1

    def test_a_g_ad_is_everything(self, a1_ad, d4_ad):
        assert len(a_sub_G(a1_ad)) == 2
        assert len(a_sub_G(d4_ad)) == 4

    def test_a_g_of_so6(self):
        """SL_4/{+-1} keeps the element of order 2."""
        datum = parse_datum('A3:lattice(1/2,0,1/2)')
        elements = a_sub_G(datum)
        assert len(elements) == 2
        assert group_invariants(datum.system, elements) == [2]

    def test_prime_to_p(self):
        assert len(prime_to_p_part(parse_datum('A3:sc;p=2'))) == 1
        assert len(prime_to_p_part(parse_datum('A3:sc;p=3'))) == 4
        assert len(prime_to_p_part(parse_datum('E6:sc;p=2'))) == 3


class TestNodePermutation:
    """A permutes the extended nodes."""

    def test_a1_swaps(self, a1_sc):
        group = fundamental_group(a1_sc)
        assert node_permutation(group.identity) == (0, 1)
        assert node_permutation(group.generator_element(0)) == (1, 0)

    def test_a2_rotates(self, a2_sc):
        perm = node_permutation(fundamental_group(a2_sc).generator_element(0))
        assert sorted(perm) == [0, 1, 2]
        assert all(perm[k] != k for k in range(3))

    def test_d4_fixes_branch(self, d4_sc):
        """The branch node (index 2) is fixed by all of A."""
        for a in fundamental_group(d4_sc):
            assert node_permutation(a)[2] == 2
