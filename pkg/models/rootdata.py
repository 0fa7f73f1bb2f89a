"""Root data: Cartan types, root systems and isogeny lattices.

Conventions used throughout the package:

- Simple roots are numbered as on the usual diagrams with the B and C
  chains reversed: in type B node 0 is the short end, in type C node 0 is
  the long end; D has nodes 0 and 1 attached to node 2; E follows the
  Bourbaki diagram (0-2-3-4-5-6-7 with 1 attached to 3); F4 is
  0-1=>2-3 and G2 has node 0 short. Library APIs are 0-based; the CLI
  prints 1-based node labels.
- ``cartan[i][j] = <alpha_j, alpha_i^vee>``.
- Roots are integer vectors in simple-root coordinates, coweights are
  rational vectors in simple-coroot coordinates followed by the central
  coordinates. ``<alpha, lambda> = a^T K lambda`` with ``K = cartan^T``.
"""

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

import numpy as np
from sympy import Matrix, isprime

from core.errors import DatumParseError, DimensionError, InvalidRootDatumError
from models.lattice import (
    Lattice,
    RationalVector,
    format_rational,
    parse_rational,
    zero_vector,
)

FAMILIES = ('A', 'B', 'C', 'D', 'E', 'F', 'G')


@dataclass(frozen=True)
class CartanType:
    """Irreducible components plus the rank of a central torus."""
    components: tuple[tuple[str, int], ...]
    central_rank: int = 0

    def __post_init__(self):
        for family, rank in self.components:
            _validate_component(family, rank)
        if self.central_rank < 0:
            raise InvalidRootDatumError(f"Invalid central rank: {self.central_rank}. Must be >= 0")

    @classmethod
    def parse(cls, text: str) -> 'CartanType':
        """Parse 'A1xA1', 'E7' or 'A2xT1'."""
        components = []
        central = 0
        offset = 0
        for token in text.split('x'):
            match = re.fullmatch(r'([A-GT])(\d+)', token.strip())
            if not match:
                raise DatumParseError("Invalid Cartan type component", text, offset)
            family, rank = match.group(1), int(match.group(2))
            if family == 'T':
                central += rank
            elif central:
                raise DatumParseError("Central torus must come last", text, offset)
            else:
                components.append((family, rank))
            offset += len(token) + 1
        try:
            return cls(tuple(components), central)
        except InvalidRootDatumError as e:
            raise DatumParseError(str(e), text, 0)

    @property
    def semisimple_rank(self) -> int:
        return sum(rank for _, rank in self.components)

    @property
    def rank(self) -> int:
        return self.semisimple_rank + self.central_rank

    @property
    def offsets(self) -> list[int]:
        """Index of the first simple root of each component."""
        result, start = [], 0
        for _, rank in self.components:
            result.append(start)
            start += rank
        return result

    @property
    def is_irreducible(self) -> bool:
        return len(self.components) == 1 and self.central_rank == 0

    def __str__(self) -> str:
        parts = [f"{family}{rank}" for family, rank in self.components]
        if self.central_rank:
            parts.append(f"T{self.central_rank}")
        return 'x'.join(parts) if parts else 'T0'


def _validate_component(family: str, rank: int) -> None:
    valid = {
        'A': rank >= 1,
        'B': rank >= 2,
        'C': rank >= 2,
        'D': rank >= 3,
        'E': rank in (6, 7, 8),
        'F': rank == 4,
        'G': rank == 2,
    }
    if family not in valid:
        raise InvalidRootDatumError(f"Invalid family: '{family}'. Expected one of {', '.join(FAMILIES)}")
    if not valid[family]:
        raise InvalidRootDatumError(f"Invalid rank {rank} for type {family}")


def _component_edges(family: str, rank: int) -> list[tuple[int, int, int, int]]:
    """Dynkin edges (i, j, multiplicity, long end) with 0-based nodes."""
    chain = lambda start: [(k, k + 1, 1, -1) for k in range(start, rank - 1)]
    if family == 'A':
        return chain(0)
    if family == 'B':
        return [(0, 1, 2, 1)] + chain(1)
    if family == 'C':
        return [(0, 1, 2, 0)] + chain(1)
    if family == 'D':
        return [(0, 2, 1, -1), (1, 2, 1, -1)] + chain(2)
    if family == 'E':
        return [(0, 2, 1, -1), (1, 3, 1, -1)] + chain(2)
    if family == 'F':
        return [(0, 1, 1, -1), (1, 2, 2, 1), (2, 3, 1, -1)]
    return [(0, 1, 3, 1)]


def component_cartan(family: str, rank: int) -> list[list[int]]:
    """Cartan matrix of one irreducible component."""
    _validate_component(family, rank)
    cartan = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
    for i, j, mult, long_end in _component_edges(family, rank):
        if mult == 1:
            cartan[i][j] = cartan[j][i] = -1
            continue
        short_end = j if long_end == i else i
        cartan[short_end][long_end] = -mult
        cartan[long_end][short_end] = -1
    return cartan


@dataclass(frozen=True, order=True)
class Root:
    """A root with its coroot, both as integer coordinate tuples."""
    coords: tuple[int, ...]
    coroot: tuple[int, ...] = field(compare=False)

    @property
    def is_positive(self) -> bool:
        return any(c > 0 for c in self.coords)

    @property
    def height(self) -> int:
        return sum(self.coords)

    def __neg__(self) -> 'Root':
        return Root(tuple(-c for c in self.coords), tuple(-c for c in self.coroot))


class RootSystem:
    """Roots, coroots and simple reflections of a semisimple Cartan type.

    Built once per tuple of components (see ``root_system``) and shared by
    every isogeny of that type.
    """

    def __init__(self, components: tuple[tuple[str, int], ...]):
        self.components = components
        self.n = n = sum(rank for _, rank in components)

        cartan = np.zeros((n, n), dtype=np.int64)
        offsets, start = [], 0
        for family, rank in components:
            block = component_cartan(family, rank)
            cartan[start:start + rank, start:start + rank] = block
            offsets.append(start)
            start += rank
        self.cartan = cartan
        self.pairing_matrix = cartan.T.copy()
        self.offsets = offsets
        self.component_slices = [(o, o + rank) for o, (_, rank) in zip(offsets, components)]

        K = self.pairing_matrix
        identity = np.eye(n, dtype=np.int64)
        # s_i on coweights: lambda -> lambda - <alpha_i, lambda> alpha_i^vee
        self.coweight_reflections = []
        # s_i on roots: a -> a - <a, alpha_i^vee> alpha_i
        self.root_reflections = []
        for i in range(n):
            m = identity.copy()
            m[i, :] -= K[i, :]
            r = identity.copy()
            r[i, :] -= K[:, i]
            self.coweight_reflections.append(m)
            self.root_reflections.append(r)

        self._build_roots()

    def _build_roots(self) -> None:
        n = self.n
        seen: dict[tuple[int, ...], tuple[int, ...]] = {}
        frontier = []
        for i in range(n):
            e = tuple(1 if k == i else 0 for k in range(n))
            seen[e] = e
            frontier.append(e)
        while frontier:
            nxt = []
            for a in frontier:
                c = seen[a]
                va, vc = np.array(a, dtype=np.int64), np.array(c, dtype=np.int64)
                for i in range(n):
                    b = tuple(int(x) for x in self.root_reflections[i] @ va)
                    if b not in seen:
                        seen[b] = tuple(int(x) for x in self.coweight_reflections[i] @ vc)
                        nxt.append(b)
            frontier = nxt

        positive = sorted((a for a in seen if sum(a) > 0), key=lambda a: (sum(a), tuple(-x for x in a)))
        self.positive_roots = tuple(Root(a, seen[a]) for a in positive)
        self.roots = self.positive_roots + tuple(-r for r in self.positive_roots)
        self.root_index = {r.coords: k for k, r in enumerate(self.roots)}
        self.root_array = np.array([r.coords for r in self.roots], dtype=np.int64).reshape(len(self.roots), n)
        self.coroot_array = np.array([r.coroot for r in self.roots], dtype=np.int64).reshape(len(self.roots), n)
        self.positive_count = len(self.positive_roots)

        two_rho = np.zeros(n, dtype=np.int64)
        for r in self.positive_roots:
            two_rho += np.array(r.coroot, dtype=np.int64)
        self.two_rho_check = two_rho

    def component_of(self, root: Root) -> int:
        """Index of the irreducible component containing root."""
        for k, (lo, hi) in enumerate(self.component_slices):
            if any(root.coords[lo:hi]):
                return k
        raise ValueError("Zero vector is not a root")

    @cached_property
    def highest_roots(self) -> tuple[Root, ...]:
        result = []
        for lo, hi in self.component_slices:
            candidates = [r for r in self.positive_roots if any(r.coords[lo:hi])]
            result.append(max(candidates, key=lambda r: r.height))
        return tuple(result)

    @cached_property
    def inverse_pairing(self) -> tuple[tuple[Fraction, ...], ...]:
        """K^{-1} as exact fractions; its columns are the fundamental coweights."""
        inverse = Matrix(self.pairing_matrix.tolist()).inv()
        return tuple(
            tuple(Fraction(int(inverse[i, j].p), int(inverse[i, j].q)) for j in range(self.n))
            for i in range(self.n)
        )

    def fundamental_coweight(self, j: int) -> RationalVector:
        return tuple(self.inverse_pairing[i][j] for i in range(self.n))


@lru_cache(maxsize=None)
def root_system(components: tuple[tuple[str, int], ...]) -> RootSystem:
    return RootSystem(components)


class RootDatum:
    """A reductive root datum: Cartan type, cocharacter lattice Y and characteristic.

    Y lives in simple-coroot coordinates followed by central coordinates and
    must satisfy Q^vee + Z^z <= Y with every root integral on Y.
    """

    def __init__(self, cartan_type: CartanType, lattice: Lattice, p: int = 0, label: str | None = None):
        if p != 0 and not isprime(p):
            raise InvalidRootDatumError(f"Invalid characteristic: {p}. Must be 0 or a prime")
        self.cartan_type = cartan_type
        self.system = root_system(cartan_type.components)
        self.n = self.system.n
        self.central_rank = cartan_type.central_rank
        self.dim = self.n + self.central_rank
        if lattice.dim != self.dim:
            raise DimensionError(f"Lattice of dimension {lattice.dim} does not match rank {self.dim}")
        self.lattice = lattice
        self.p = p
        self._label = label
        self._validate()

    def _validate(self) -> None:
        for i in range(self.dim):
            e = tuple(Fraction(int(i == k)) for k in range(self.dim))
            if not self.lattice.contains(e):
                raise InvalidRootDatumError("Y must contain the coroot lattice and the central lattice")
        K = self.system.pairing_matrix
        for row in self.lattice.basis:
            for i in range(self.n):
                value = sum((int(K[i, j]) * row[j] for j in range(self.n)), Fraction(0))
                if value.denominator != 1:
                    raise InvalidRootDatumError("Roots must take integral values on Y")

    # ----- constructors -----

    @classmethod
    def simply_connected_of(cls, cartan_type: CartanType, p: int = 0) -> 'RootDatum':
        return cls(cartan_type, Lattice.standard(cartan_type.rank), p, f"{cartan_type}:sc")

    @classmethod
    def adjoint_of(cls, cartan_type: CartanType, p: int = 0) -> 'RootDatum':
        system = root_system(cartan_type.components)
        rows = [tuple(system.fundamental_coweight(j)) + zero_vector(cartan_type.central_rank)
                for j in range(system.n)]
        rows += [tuple(Fraction(int(i == k)) for k in range(cartan_type.rank))
                 for i in range(system.n, cartan_type.rank)]
        return cls(cartan_type, Lattice(rows), p, f"{cartan_type}:ad")

    @classmethod
    def from_generators(cls, cartan_type: CartanType, extra_rows: Sequence[Sequence[Fraction]],
                        p: int = 0) -> 'RootDatum':
        """Y = Q^vee + Z^z + span(extra_rows)."""
        dim = cartan_type.rank
        for row in extra_rows:
            if len(row) != dim:
                raise DimensionError(f"Lattice row of length {len(row)} does not match rank {dim}")
        rows = [tuple(Fraction(int(i == k)) for k in range(dim)) for i in range(dim)]
        rows += [tuple(Fraction(x) for x in row) for row in extra_rows]
        return cls(cartan_type, Lattice.from_generators(rows), p)

    def simply_connected(self) -> 'RootDatum':
        return RootDatum.simply_connected_of(self.cartan_type, self.p)

    def adjoint(self) -> 'RootDatum':
        return RootDatum.adjoint_of(self.cartan_type, self.p)

    def with_characteristic(self, p: int) -> 'RootDatum':
        return RootDatum(self.cartan_type, self.lattice, p, self._base_label())

    # ----- identity -----

    def _base_label(self) -> str:
        if self._label:
            return self._label.split(';')[0]
        if self.lattice == Lattice.standard(self.dim):
            return f"{self.cartan_type}:sc"
        if self.lattice == RootDatum.adjoint_of(self.cartan_type).lattice:
            return f"{self.cartan_type}:ad"
        extra = [row for row in self.lattice.basis if any(x.denominator != 1 for x in row)]
        rows = '|'.join(','.join(format_rational(x) for x in row) for row in extra)
        return f"{self.cartan_type}:lattice({rows})"

    @cached_property
    def label(self) -> str:
        base = self._base_label()
        return f"{base};p={self.p}" if self.p else base

    def __str__(self) -> str:
        return self.label

    def __repr__(self) -> str:
        return f"RootDatum('{self.label}')"

    def __eq__(self, other) -> bool:
        return (isinstance(other, RootDatum) and self.cartan_type == other.cartan_type
                and self.lattice == other.lattice and self.p == other.p)

    def __hash__(self) -> int:
        return hash((self.cartan_type, self.lattice, self.p))

    # ----- properties -----

    @property
    def roots(self) -> tuple[Root, ...]:
        return self.system.roots

    @property
    def positive_roots(self) -> tuple[Root, ...]:
        return self.system.positive_roots

    @property
    def is_simply_connected(self) -> bool:
        return self.lattice == Lattice.standard(self.dim)

    @cached_property
    def coweight_lattice(self) -> Lattice:
        """P^vee + Z^z, the largest admissible Y."""
        return RootDatum.adjoint_of(self.cartan_type).lattice

    @cached_property
    def connection_index(self) -> int:
        """[P^vee : Q^vee]."""
        return self.coweight_lattice.index(Lattice.standard(self.dim))

    def pad(self, v: Iterable[Fraction]) -> RationalVector:
        """Extend a semisimple coweight by zero central coordinates."""
        head = tuple(Fraction(x) for x in v)
        return head + zero_vector(self.dim - len(head))

    def pairing(self, alpha: Root | Sequence[int], lam: Sequence[Fraction]) -> Fraction:
        """<alpha, lambda> for a root (or root-coordinate vector) and a coweight."""
        coords = alpha.coords if isinstance(alpha, Root) else tuple(alpha)
        if len(coords) != self.n or len(lam) < self.n:
            raise DimensionError(f"Pairing needs a root of length {self.n} and a coweight of length {self.dim}")
        row = np.array(coords, dtype=np.int64) @ self.system.pairing_matrix
        return sum((int(row[j]) * Fraction(lam[j]) for j in range(self.n) if row[j]), Fraction(0))

    def fundamental_coweights(self) -> list[RationalVector]:
        return [self.pad(self.system.fundamental_coweight(j)) for j in range(self.n)]

    def rho_check(self) -> RationalVector:
        return self.pad(Fraction(int(x), 2) for x in self.system.two_rho_check)

    def rho_check_of_subset(self, subset: Sequence[int]) -> RationalVector:
        """rho^vee_I: half the sum of the positive coroots supported on I."""
        allowed = set(subset)
        total = [0] * self.n
        for r in self.positive_roots:
            if all(k in allowed for k, c in enumerate(r.coords) if c):
                total = [t + c for t, c in zip(total, r.coroot)]
        return self.pad(Fraction(t, 2) for t in total)


# ===== Operation-style entry points =====

def enumerate_roots(datum: RootDatum) -> tuple[Root, ...]:
    """All roots, positive ones first, each carrying its coroot."""
    return datum.roots


def pairing(datum: RootDatum, alpha: Root, lam: Sequence[Fraction]) -> Fraction:
    return datum.pairing(alpha, lam)


def rho_check(datum: RootDatum) -> RationalVector:
    """Half-sum of the positive coroots."""
    return datum.rho_check()


def highest_roots(datum: RootDatum) -> list[Root]:
    """One highest root per irreducible component (negate for the affine node)."""
    return list(datum.system.highest_roots)


def minuscule_coweights(datum: RootDatum) -> list[tuple[int, RationalVector]]:
    """Nodes j whose highest-root coefficient is 1, with their coweight."""
    result = []
    for (lo, hi), theta in zip(datum.system.component_slices, datum.system.highest_roots):
        for j in range(lo, hi):
            if theta.coords[j] == 1:
                result.append((j, datum.pad(datum.system.fundamental_coweight(j))))
    return result


def standard_isogenies(cartan_type: CartanType, p: int = 0) -> dict:
    """The sc and ad data and every datum in between (one per subgroup of P^vee/Q^vee)."""
    sc = RootDatum.simply_connected_of(cartan_type, p)
    ad = RootDatum.adjoint_of(cartan_type, p)
    dim = cartan_type.rank
    standard = Lattice.standard(dim)

    elements = {zero_vector(dim)}
    frontier = [zero_vector(dim)]
    generators = [standard.reduce(w) for w in sc.fundamental_coweights()]
    while frontier:
        nxt = []
        for x in frontier:
            for g in generators:
                y = standard.reduce(tuple(a + b for a, b in zip(x, g)))
                if y not in elements:
                    elements.add(y)
                    nxt.append(y)
        frontier = nxt

    def closure(gens: frozenset) -> frozenset:
        group = {zero_vector(dim)}
        frontier = [zero_vector(dim)]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = standard.reduce(tuple(a + b for a, b in zip(x, g)))
                    if y not in group:
                        group.add(y)
                        nxt.append(y)
            frontier = nxt
        return frozenset(group)

    subgroups = {closure(frozenset())}
    frontier = list(subgroups)
    while frontier:
        nxt = []
        for h in frontier:
            for g in elements:
                if g in h:
                    continue
                bigger = closure(h | {g})
                if bigger not in subgroups:
                    subgroups.add(bigger)
                    nxt.append(bigger)
        frontier = nxt

    order = len(elements)
    intermediate = []
    for h in sorted(subgroups, key=lambda s: (len(s), sorted(s))):
        if 1 < len(h) < order:
            extra = sorted(x for x in h if any(x))
            intermediate.append(RootDatum.from_generators(cartan_type, extra, p))
    return {'sc': sc, 'ad': ad, 'intermediate': intermediate}


# ===== Datum text format =====

def parse_datum(text: str) -> RootDatum:
    """Parse a datum description.

    Grammar::

        datum   := type [':' isogeny] [';p=' prime]
        type    := component ('x' component)* ['x' 'T' z]
        isogeny := 'sc' | 'ad' | 'lattice(' row ('|' row)* ')'
        row     := rational (',' rational)*

    Examples: 'D4:sc', 'A3:ad', 'A1xA1:sc;p=3', 'A1xT1:lattice(1/2,1/2)'.

    Raises:
        DatumParseError: With the offending position
    """
    original = text
    text = text.strip()
    p = 0
    if ';' in text:
        text, _, option = text.partition(';')
        match = re.fullmatch(r'\s*p\s*=\s*(\d+)\s*', option)
        if not match:
            raise DatumParseError("Invalid option, expected p=<prime>", original, len(text) + 1)
        p = int(match.group(1))
        if p != 0 and not isprime(p):
            raise DatumParseError(f"Invalid characteristic {p}", original, len(text) + 1)

    type_text, _, isogeny = text.partition(':')
    try:
        cartan_type = CartanType.parse(type_text)
    except DatumParseError as e:
        raise DatumParseError(str(e).split(' at position')[0], original, e.position)
    isogeny = isogeny.strip() or 'sc'
    iso_offset = len(type_text) + 1

    try:
        if isogeny == 'sc':
            return RootDatum.simply_connected_of(cartan_type, p)
        if isogeny == 'ad':
            return RootDatum.adjoint_of(cartan_type, p)
        match = re.fullmatch(r'lattice\((.*)\)', isogeny)
        if not match:
            raise DatumParseError("Invalid isogeny, expected sc, ad or lattice(...)", original, iso_offset)
        rows = []
        for row_text in match.group(1).split('|'):
            try:
                rows.append(tuple(parse_rational(x) for x in row_text.split(',')))
            except DatumParseError:
                raise DatumParseError("Invalid lattice row", original, iso_offset + len('lattice('))
        return RootDatum.from_generators(cartan_type, rows, p)
    except (InvalidRootDatumError, DimensionError) as e:
        raise DatumParseError(str(e), original, iso_offset)
