"""The diagram-automorphism group A, the isomorphisms varpi^vee and iota, and A_G.

A is the stabiliser in W of the extended simple system (the simple roots
together with minus the highest root of each component). Each component
contributes the elements w_S * w_{S - j} for its minuscule nodes j; these
generate a cyclic group, or a Klein four group in type D_2k.

varpi^vee(a) is read off the barycentre b of the fundamental alcove: the
affine element t_mu * a with mu = b - a(b) stabilises the alcove, and
mu + Q^vee is the class of a. On a generator this gives -varpi_j^vee.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import product
from math import floor

from core.errors import VerificationError
from models.lattice import Lattice, RationalVector
from models.rootdata import RootDatum, RootSystem
from models.weyl import WeylElement, longest_element


def generator_nodes(family: str, rank: int) -> list[int]:
    """Local minuscule nodes used as generators of a component's A."""
    if family == 'A':
        return [rank - 1]
    if family == 'B':
        return [rank - 1]
    if family == 'C':
        return [0]
    if family == 'D':
        return [0, 1] if rank % 2 == 0 else [0]
    if family == 'E' and rank == 6:
        return [5]
    if family == 'E' and rank == 7:
        return [6]
    return []


@dataclass(frozen=True)
class Generator:
    component: int
    node: int
    weyl: WeylElement
    order: int


@dataclass(frozen=True, eq=False)
class FundamentalGroupElement:
    """An element of A with its exponents against the chosen generators."""
    weyl: WeylElement
    exponents: tuple[int, ...]

    def __eq__(self, other) -> bool:
        return isinstance(other, FundamentalGroupElement) and self.weyl == other.weyl

    def __hash__(self) -> int:
        return hash(self.weyl)

    def __repr__(self) -> str:
        return f"FundamentalGroupElement({self.exponents})"

    @property
    def order(self) -> int:
        return self.weyl.order

    @property
    def is_identity(self) -> bool:
        return self.weyl.is_identity


class FundamentalGroup:
    """A for a semisimple root system, listed as all products of generator powers."""

    def __init__(self, system: RootSystem):
        self.system = system
        generators = []
        for k, ((family, rank), (lo, hi)) in enumerate(zip(system.components, system.component_slices)):
            nodes = list(range(lo, hi))
            w_s = longest_element(system, nodes)
            for local in generator_nodes(family, rank):
                j = lo + local
                c = w_s * longest_element(system, [i for i in nodes if i != j])
                generators.append(Generator(k, j, c, c.order))
        self.generators: tuple[Generator, ...] = tuple(generators)

        elements = []
        for exponents in product(*(range(g.order) for g in self.generators)):
            w = WeylElement.identity(system)
            for g, e in zip(self.generators, exponents):
                w = w * g.weyl.power(e)
            elements.append(FundamentalGroupElement(w, exponents))
        self.elements: tuple[FundamentalGroupElement, ...] = tuple(elements)
        self._by_key = {a.weyl.key: a for a in elements}
        if len(self._by_key) != len(elements):
            raise VerificationError('fundamental-group-generators', {'type': str(system.components)})

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @property
    def identity(self) -> FundamentalGroupElement:
        return self.elements[0]

    def find(self, w: WeylElement) -> FundamentalGroupElement | None:
        return self._by_key.get(w.key)

    def multiply(self, a: FundamentalGroupElement, b: FundamentalGroupElement) -> FundamentalGroupElement:
        product_ = self.find(a.weyl * b.weyl)
        if product_ is None:
            raise VerificationError('fundamental-group-closure', {'exponents': [a.exponents, b.exponents]})
        return product_

    def power(self, a: FundamentalGroupElement, k: int) -> FundamentalGroupElement:
        return self.find(a.weyl.power(k))

    def generator_element(self, index: int) -> FundamentalGroupElement:
        exponents = tuple(int(k == index) for k in range(len(self.generators)))
        return self.elements[_flat_index(exponents, self.generators)]

    @cached_property
    def extended_nodes(self) -> tuple[tuple[int, ...], ...]:
        """Simple roots followed by minus the highest root of each component."""
        n = self.system.n
        simple = [tuple(int(i == k) for k in range(n)) for i in range(n)]
        affine = [tuple(-c for c in theta.coords) for theta in self.system.highest_roots]
        return tuple(simple + affine)

    @cached_property
    def barycentre(self) -> RationalVector:
        system = self.system
        total = [Fraction(0)] * system.n
        for (lo, hi), theta in zip(system.component_slices, system.highest_roots):
            rank = hi - lo
            for j in range(lo, hi):
                coweight = system.fundamental_coweight(j)
                weight = Fraction(1, theta.coords[j] * (rank + 1))
                total = [t + weight * c for t, c in zip(total, coweight)]
        return tuple(total)


def _flat_index(exponents: tuple[int, ...], generators: tuple[Generator, ...]) -> int:
    index = 0
    for e, g in zip(exponents, generators):
        index = index * g.order + e
    return index


@lru_cache(maxsize=None)
def _fundamental_group(system: RootSystem) -> FundamentalGroup:
    return FundamentalGroup(system)


def fundamental_group(datum: RootDatum | RootSystem) -> FundamentalGroup:
    """A with generators c_j = w_S w_{S - j}, one cyclic factor per minuscule generator."""
    system = datum.system if isinstance(datum, RootDatum) else datum
    return _fundamental_group(system)


def varpi_check(a: FundamentalGroupElement) -> RationalVector:
    """Class of a in P^vee/Q^vee, as coroot coordinates in [0, 1).

    Raises:
        VerificationError: If b - a(b) is not a coweight (a is not in A)
    """
    system = a.weyl.system
    b = _fundamental_group(system).barycentre
    mu = [x - y for x, y in zip(b, a.weyl.act_on_coweight(b))]
    K = system.pairing_matrix
    for i in range(system.n):
        value = sum((int(K[i, j]) * mu[j] for j in range(system.n)), Fraction(0))
        if value.denominator != 1:
            raise VerificationError('varpi-coweight', {'exponents': list(a.exponents)})
    return tuple(x - floor(x) for x in mu)


def iota(a: FundamentalGroupElement, p: int = 0) -> RationalVector:
    """The central torus class of the simply connected group attached to a.

    Raises:
        ValueError: If p divides the order of a
    """
    if p and a.order % p == 0:
        raise ValueError(f"Element of order {a.order} is outside the {p}'-part of A")
    cls = varpi_check(a)
    return Lattice.standard(len(cls)).p_prime_part(cls, p) if cls else cls


def a_sub_G(datum: RootDatum) -> list[FundamentalGroupElement]:
    """A_G: the elements whose varpi^vee class lies in Y."""
    return [a for a in fundamental_group(datum) if datum.lattice.contains(datum.pad(varpi_check(a)))]


def prime_to_p_part(datum: RootDatum) -> list[FundamentalGroupElement]:
    if datum.p == 0:
        return list(fundamental_group(datum))
    return [a for a in fundamental_group(datum) if a.order % datum.p != 0]


def node_permutation(a: FundamentalGroupElement) -> tuple[int, ...]:
    """Permutation of the extended nodes induced by a.

    Raises:
        VerificationError: If a does not stabilise the extended node set
    """
    nodes = _fundamental_group(a.weyl.system).extended_nodes
    position = {node: k for k, node in enumerate(nodes)}
    images = []
    for node in nodes:
        image = a.weyl.act_on_root_coords(node)
        if image not in position:
            raise VerificationError('extended-node-stabiliser', {'exponents': list(a.exponents)})
        images.append(position[image])
    return tuple(images)


def center_elements(datum: RootDatum) -> list[RationalVector]:
    """Torus classes of the centre of the simply connected cover, one per p'-element of A."""
    return [iota(a, datum.p) for a in prime_to_p_part(datum)]


def group_invariants(system: RootSystem, elements: list[FundamentalGroupElement]) -> list[int]:
    """Invariant factors of the subgroup of A formed by elements (via varpi^vee)."""
    n = system.n
    if n == 0:
        return []
    standard = Lattice.standard(n)
    rows = list(standard.basis) + [varpi_check(a) for a in elements if not a.is_identity]
    return Lattice.from_generators(rows).index_invariants(standard)


def varpi_of_coweight(system: RootSystem, j: int) -> RationalVector:
    """varpi_j^vee reduced into [0, 1) coordinates."""
    return tuple(x - floor(x) for x in system.fundamental_coweight(j))
