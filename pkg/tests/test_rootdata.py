"""Tests for root data in models/rootdata.py"""

from fractions import Fraction

import pytest

from core.errors import DatumParseError, DimensionError, InvalidRootDatumError
from models.lattice import Lattice
from models.rootdata import (CartanType, RootDatum, component_cartan, enumerate_roots, highest_roots,
                             minuscule_coweights, pairing, parse_datum, rho_check, standard_isogenies)

HALF = Fraction(1, 2)


class TestCartanType:
    """Parsing and validation of Cartan types."""

    def test_parse_product_with_torus(self):
        """'A2xB3xT1' has two components and a central torus."""
        t = CartanType.parse('A2xB3xT1')
        assert t.components == (('A', 2), ('B', 3))
        assert t.central_rank == 1
        assert t.rank == 6
        assert t.offsets == [0, 2]
        assert str(t) == 'A2xB3xT1'

    def test_invalid_rank(self):
        """E5 is not a type."""
        with pytest.raises(DatumParseError):
            CartanType.parse('E5')

    def test_torus_must_be_last(self):
        with pytest.raises(DatumParseError):
            CartanType.parse('T1xA1')

    def test_invalid_component_rank(self):
        """B1 is rejected by the constructor."""
        with pytest.raises(InvalidRootDatumError):
            CartanType((('B', 1),))


class TestCartanMatrices:
    """Node labels and Cartan entries."""

    def test_a2(self):
        assert component_cartan('A', 2) == [[2, -1], [-1, 2]]

    def test_b2_node_zero_is_short(self):
        """<alpha_1, alpha_0^vee> = -2 when alpha_0 is short."""
        assert component_cartan('B', 2) == [[2, -2], [-1, 2]]

    def test_c2_node_zero_is_long(self):
        assert component_cartan('C', 2) == [[2, -1], [-2, 2]]

    def test_g2(self):
        assert component_cartan('G', 2) == [[2, -3], [-1, 2]]


class TestRoots:
    """Root enumeration."""

    @pytest.mark.parametrize('text,count', [
        ('A1:sc', 2), ('A2:sc', 6), ('B3:sc', 18), ('C3:sc', 18), ('D4:sc', 24),
        ('G2:sc', 12), ('F4:sc', 48), ('E6:sc', 72), ('E7:sc', 126), ('E8:sc', 240),
    ])
    def test_root_counts(self, text, count):
        """|Phi| matches the classification."""
        assert len(enumerate_roots(parse_datum(text))) == count

    def test_positive_first(self, a2_sc):
        """Positive roots come first, sorted by height."""
        roots = enumerate_roots(a2_sc)
        assert [r.coords for r in roots[:3]] == [(1, 0), (0, 1), (1, 1)]
        assert all(not r.is_positive for r in roots[3:])

    def test_g2_highest_root(self, g2_sc):
        """The highest root of G2 is 3 alpha_short + 2 alpha_long."""
        assert highest_roots(g2_sc)[0].coords == (3, 2)

    def test_coroots_pair_to_two(self, g2_sc):
        """<alpha, alpha^vee> = 2 for every root."""
        for root in g2_sc.roots:
            assert pairing(g2_sc, root, tuple(Fraction(c) for c in root.coroot)) == 2

    def test_d4_highest_root(self, d4_sc):
        """The branch node carries coefficient 2."""
        assert d4_sc.system.highest_roots[0].coords == (1, 1, 2, 1)


class TestRootDatum:
    """Isogenies, validation and derived data."""

    def test_adjoint_lattice(self, a1_ad):
        """Y for PGL_2 is (1/2) Z."""
        assert a1_ad.lattice == Lattice([(HALF,)])
        assert a1_ad.connection_index == 2

    @pytest.mark.parametrize('text,index', [
        ('A1:sc', 2), ('A3:sc', 4), ('B3:sc', 2), ('C3:sc', 2), ('D4:sc', 4),
        ('E6:sc', 3), ('E7:sc', 2), ('E8:sc', 1), ('F4:sc', 1), ('G2:sc', 1),
    ])
    def test_connection_index(self, text, index):
        assert parse_datum(text).connection_index == index

    def test_non_integral_lattice_rejected(self):
        """(1/4) alpha^vee pairs to 1/2 with alpha."""
        with pytest.raises(InvalidRootDatumError):
            RootDatum.from_generators(CartanType((('A', 1),)), [(Fraction(1, 4),)])

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionError):
            RootDatum(CartanType((('A', 2),)), Lattice.standard(1))

    def test_invalid_characteristic(self):
        with pytest.raises(InvalidRootDatumError):
            RootDatum.simply_connected_of(CartanType((('A', 1),)), p=4)

    def test_derivations(self, d4_ad):
        """sc, ad and characteristic changes keep the type."""
        assert d4_ad.simply_connected().is_simply_connected
        assert d4_ad.adjoint() == d4_ad
        assert d4_ad.with_characteristic(3).label == 'D4:ad;p=3'

    def test_rho_check(self, a1_sc, a2_sc):
        """rho^vee is half the sum of positive coroots."""
        assert rho_check(a1_sc) == (HALF,)
        assert rho_check(a2_sc) == (1, 1)

    def test_rho_check_of_subset(self, a2_sc):
        assert a2_sc.rho_check_of_subset([0]) == (HALF, 0)
        assert a2_sc.rho_check_of_subset([]) == (0, 0)

    def test_fundamental_coweights_dual(self, b2_sc):
        """<alpha_i, varpi_j^vee> = delta_ij."""
        for j, coweight in enumerate(b2_sc.fundamental_coweights()):
            for i in range(2):
                unit = tuple(int(k == i) for k in range(2))
                assert b2_sc.pairing(unit, coweight) == int(i == j)

    def test_central_torus_padding(self):
        """A central torus adds unconstrained coordinates."""
        datum = parse_datum('A1xT1:sc')
        assert datum.dim == 2
        assert datum.rho_check() == (HALF, 0)

    def test_pad_accepts_generators(self):
        """pad reads its input once, so generators and lists agree."""
        datum = parse_datum('A2xT1:sc')
        assert datum.pad(Fraction(k, 2) for k in (1, 3)) == (HALF, Fraction(3, 2), 0)
        assert datum.pad([HALF]) == (HALF, 0, 0)


class TestMinuscule:
    """Minuscule nodes (highest-root coefficient 1)."""

    @pytest.mark.parametrize('text,nodes', [
        ('A3:sc', [0, 1, 2]), ('B3:sc', [2]), ('C3:sc', [0]), ('D4:sc', [0, 1, 3]),
        ('E6:sc', [0, 5]), ('E7:sc', [6]), ('E8:sc', []), ('G2:sc', []),
    ])
    def test_nodes(self, text, nodes):
        assert [j for j, _ in minuscule_coweights(parse_datum(text))] == nodes


class TestIsogenies:
    """The standard isogenies between sc and ad."""

    def test_d4_has_three_intermediate(self):
        """P^vee/Q^vee = Z/2 x Z/2 has three subgroups of order 2."""
        isogenies = standard_isogenies(CartanType((('D', 4),)))
        assert isogenies['sc'].is_simply_connected
        assert len(isogenies['intermediate']) == 3
        assert len({d.lattice for d in isogenies['intermediate']}) == 3

    def test_a3_has_one_intermediate(self):
        """Z/4 has one proper non-trivial subgroup: SO_6 = SL_4/{+-1}."""
        assert len(standard_isogenies(CartanType((('A', 3),)))['intermediate']) == 1

    def test_e8_has_none(self):
        isogenies = standard_isogenies(CartanType((('E', 8),)))
        assert isogenies['intermediate'] == []
        assert isogenies['sc'] == isogenies['ad']


class TestParseDatum:
    """The datum text grammar."""

    def test_labels_round_trip(self):
        for text in ['D4:sc', 'A3:ad', 'A1xA1:sc;p=3']:
            assert parse_datum(text).label == text

    def test_default_isogeny_is_sc(self):
        assert parse_datum('G2').is_simply_connected

    def test_lattice_rows(self):
        """SO_6: Q^vee plus 2 varpi_1^vee."""
        datum = parse_datum('A3:lattice(1/2,0,1/2)')
        assert datum.connection_index == 4
        assert datum.lattice.index(Lattice.standard(3)) == 2
        assert parse_datum(datum.label) == datum

    def test_characteristic(self):
        assert parse_datum('B2:ad;p=2').p == 2

    @pytest.mark.parametrize('text', ['X4:sc', 'A1:foo', 'A1:sc;p=4', 'A1:sc;q=3', 'A1:lattice(1/4)',
                                      'A2:lattice(1/2,x)'])
    def test_errors(self, text):
        """Malformed input raises DatumParseError with a position."""
        with pytest.raises(DatumParseError) as info:
            parse_datum(text)
        assert info.value.text == text
        assert 'position' in str(info.value)
