"""Weyl group elements, reduced words, longest elements and subsystems.

A Weyl element is stored as the integer matrix of its action on coweights
(simple-coroot coordinates) together with the matrix of its action on
roots. The coweight matrix is the canonical form: two elements are equal
iff their matrices are.
"""

from collections import deque
from fractions import Fraction
from functools import cached_property, lru_cache
from math import factorial
from typing import Iterable, Iterator, Sequence

import numpy as np

from core.config import get_oracle_limit
from core.errors import NotARootError, NotASubsystemError, OracleSizeError
from models.rootdata import CartanType, Root, RootDatum, RootSystem

_EXCEPTIONAL_ORDERS = {
    ('E', 6): 51840,
    ('E', 7): 2903040,
    ('E', 8): 696729600,
    ('F', 4): 1152,
    ('G', 2): 12,
}


def _component_order(family: str, rank: int) -> int:
    if family == 'A':
        return factorial(rank + 1)
    if family in ('B', 'C'):
        return 2 ** rank * factorial(rank)
    if family == 'D':
        return 2 ** (rank - 1) * factorial(rank)
    return _EXCEPTIONAL_ORDERS[(family, rank)]


def weyl_group_order(cartan_type: CartanType) -> int:
    """|W| from the product formula (no enumeration)."""
    order = 1
    for family, rank in cartan_type.components:
        order *= _component_order(family, rank)
    return order


class WeylElement:
    """An element of W acting on coweights (``matrix``) and on roots (``root_matrix``)."""

    def __init__(self, system: RootSystem, matrix: np.ndarray, root_matrix: np.ndarray):
        self.system = system
        self.matrix = matrix
        self.root_matrix = root_matrix
        self.key = matrix.tobytes()

    # ----- constructors -----

    @classmethod
    def identity(cls, system: RootSystem) -> 'WeylElement':
        eye = np.eye(system.n, dtype=np.int64)
        return cls(system, eye, eye.copy())

    @classmethod
    def simple(cls, system: RootSystem, i: int) -> 'WeylElement':
        return cls(system, system.coweight_reflections[i], system.root_reflections[i])

    @classmethod
    def from_word(cls, system: RootSystem, word: Iterable[int]) -> 'WeylElement':
        w = cls.identity(system)
        for i in word:
            w = w * cls.simple(system, i)
        return w

    # ----- group structure -----

    def __mul__(self, other: 'WeylElement') -> 'WeylElement':
        return WeylElement(self.system, self.matrix @ other.matrix, self.root_matrix @ other.root_matrix)

    def __eq__(self, other) -> bool:
        return isinstance(other, WeylElement) and self.system is other.system and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        if not self.reduced_word:
            return "WeylElement(1)"
        return f"WeylElement(s{''.join(str(i + 1) for i in self.reduced_word)})"

    @property
    def is_identity(self) -> bool:
        return bool(np.array_equal(self.matrix, np.eye(self.system.n, dtype=np.int64)))

    @cached_property
    def inverse(self) -> 'WeylElement':
        return WeylElement.from_word(self.system, reversed(self.reduced_word))

    @cached_property
    def order(self) -> int:
        k, power = 1, self
        while not power.is_identity:
            power = power * self
            k += 1
        return k

    def power(self, k: int) -> 'WeylElement':
        base = self if k >= 0 else self.inverse
        result = WeylElement.identity(self.system)
        for _ in range(abs(k)):
            result = result * base
        return result

    # ----- actions -----

    def act_on_coweight(self, lam: Sequence[Fraction]) -> tuple[Fraction, ...]:
        """w(lambda); central coordinates beyond the semisimple rank are fixed."""
        n = self.system.n
        head = tuple(
            sum((int(self.matrix[k, j]) * lam[j] for j in range(n) if self.matrix[k, j]), Fraction(0))
            for k in range(n)
        )
        return head + tuple(lam[n:])

    def act_on_root_coords(self, coords: Sequence[int]) -> tuple[int, ...]:
        return tuple(int(x) for x in self.root_matrix @ np.asarray(coords, dtype=np.int64))

    def apply_to_root(self, root: Root) -> Root:
        image = self.act_on_root_coords(root.coords)
        return self.system.roots[self.system.root_index[image]]

    def coroot_image(self, i: int) -> np.ndarray:
        """w(alpha_i^vee) in simple-coroot coordinates."""
        return self.matrix[:, i]

    # ----- descents and length -----

    def is_right_descent(self, i: int) -> bool:
        """l(w s_i) < l(w), i.e. w(alpha_i) is negative."""
        return int(self.root_matrix[:, i].sum()) < 0

    @cached_property
    def right_descents(self) -> frozenset[int]:
        return frozenset(i for i in range(self.system.n) if self.is_right_descent(i))

    @cached_property
    def left_descents(self) -> frozenset[int]:
        """l(s_i w) < l(w), i.e. <alpha_i, w(rho^vee)> < 0."""
        image = self.system.pairing_matrix @ (self.matrix @ self.system.two_rho_check)
        return frozenset(i for i in range(self.system.n) if image[i] < 0)

    @cached_property
    def length(self) -> int:
        positive = self.system.root_array[:self.system.positive_count]
        if not len(positive):
            return 0
        images = self.root_matrix @ positive.T
        return int((images.sum(axis=0) < 0).sum())

    @cached_property
    def reduced_word(self) -> tuple[int, ...]:
        """Reduced word, peeling the smallest right descent at each step."""
        word: list[int] = []
        w = self
        while True:
            descents = [i for i in range(self.system.n) if w.is_right_descent(i)]
            if not descents:
                break
            i = descents[0]
            word.append(i)
            w = w * WeylElement.simple(self.system, i)
        return tuple(reversed(word))

    def inversions(self) -> list[Root]:
        """Positive roots sent to negative roots."""
        return [r for r in self.system.positive_roots if not self.apply_to_root(r).is_positive]


# ===== Operation-style entry points =====

def reflection(datum: RootDatum, alpha: Root) -> WeylElement:
    """s_alpha acting by lambda -> lambda - <alpha, lambda> alpha^vee."""
    system = datum.system
    if alpha.coords not in system.root_index:
        raise NotARootError(f"{alpha.coords} is not a root of {datum.cartan_type}")
    alpha = system.roots[system.root_index[alpha.coords]]
    a = np.array(alpha.coords, dtype=np.int64)
    c = np.array(alpha.coroot, dtype=np.int64)
    K = system.pairing_matrix
    eye = np.eye(system.n, dtype=np.int64)
    matrix = eye - np.outer(c, a @ K)
    root_matrix = eye - np.outer(a, K @ c)
    return WeylElement(system, matrix, root_matrix)


def reduced_word(w: WeylElement) -> tuple[int, ...]:
    return w.reduced_word


def longest_element(datum_or_system: RootDatum | RootSystem, subset: Iterable[int] = None) -> WeylElement:
    """w_I, the longest element of the parabolic subgroup W_I (I = all nodes by default)."""
    system = datum_or_system.system if isinstance(datum_or_system, RootDatum) else datum_or_system
    nodes = sorted(set(range(system.n) if subset is None else subset))
    w = WeylElement.identity(system)
    while True:
        ascents = [i for i in nodes if not w.is_right_descent(i)]
        if not ascents:
            return w
        w = w * WeylElement.simple(system, ascents[0])


@lru_cache(maxsize=8)
def _all_elements(system: RootSystem) -> tuple[WeylElement, ...]:
    identity = WeylElement.identity(system)
    seen = {identity.key}
    ordered = [identity]
    queue = deque([identity])
    generators = [WeylElement.simple(system, i) for i in range(system.n)]
    while queue:
        w = queue.popleft()
        for s in generators:
            ws = w * s
            if ws.key not in seen:
                seen.add(ws.key)
                ordered.append(ws)
                queue.append(ws)
    return tuple(ordered)


def enumerate_weyl(datum: RootDatum, limit: int | None = None) -> Iterator[WeylElement]:
    """Every element of W once, in breadth-first order from the identity.

    Raises:
        OracleSizeError: If |W| exceeds limit (default from configuration)
    """
    limit = get_oracle_limit() if limit is None else limit
    order = weyl_group_order(datum.cartan_type)
    if order > limit:
        raise OracleSizeError(order, limit)
    return iter(_all_elements(datum.system))


@lru_cache(maxsize=8)
def stacked_matrices(system: RootSystem) -> np.ndarray:
    """All coweight matrices of W as one (|W|, n, n) array, in enumeration order."""
    return np.stack([w.matrix for w in _all_elements(system)])


@lru_cache(maxsize=8)
def stacked_root_matrices(system: RootSystem) -> np.ndarray:
    return np.stack([w.root_matrix for w in _all_elements(system)])


@lru_cache(maxsize=8)
def left_multiplication_table(system: RootSystem) -> np.ndarray:
    """table[i, k] is the enumeration index of s_i * w_k."""
    elements = _all_elements(system)
    index = {w.key: k for k, w in enumerate(elements)}
    stacked = stacked_matrices(system)
    table = np.empty((system.n, len(elements)), dtype=np.int64)
    for i in range(system.n):
        products = np.matmul(system.coweight_reflections[i], stacked)
        for k in range(len(elements)):
            table[i, k] = index[products[k].tobytes()]
    return table


def element_index(system: RootSystem, w: WeylElement) -> int:
    """Position of w in the breadth-first enumeration."""
    return _element_positions(system)[w.key]


@lru_cache(maxsize=8)
def _element_positions(system: RootSystem) -> dict[bytes, int]:
    return {w.key: k for k, w in enumerate(_all_elements(system))}


# ===== Subsystem classification =====

def classify_cartan_matrix(cartan: Sequence[Sequence[int]]) -> CartanType:
    """Cartan type of a (possibly decomposable) Cartan matrix C[i][j] = <b_j, b_i^vee>."""
    r = len(cartan)
    neighbours = {i: [j for j in range(r) if j != i and cartan[i][j] != 0] for i in range(r)}
    seen: set[int] = set()
    components = []
    for start in range(r):
        if start in seen:
            continue
        block, stack = [], [start]
        seen.add(start)
        while stack:
            i = stack.pop()
            block.append(i)
            for j in neighbours[i]:
                if j not in seen:
                    seen.add(j)
                    stack.append(j)
        components.append(_classify_component(sorted(block), cartan, neighbours))
    components.sort(key=lambda c: (c[0], -c[1]))
    return CartanType(tuple(components))


def _classify_component(nodes, cartan, neighbours) -> tuple[str, int]:
    r = len(nodes)
    if r == 1:
        return ('A', 1)
    edges = [(i, j, cartan[i][j] * cartan[j][i]) for i in nodes for j in neighbours[i] if i < j]
    multiplicities = {m for _, _, m in edges}
    if 3 in multiplicities:
        return ('G', 2)
    degree = {i: len(neighbours[i]) for i in nodes}
    if 2 in multiplicities:
        if r == 2:
            return ('B', 2)
        i, j, _ = next(e for e in edges if e[2] == 2)
        if degree[i] == 2 and degree[j] == 2:
            return ('F', 4)
        short_end = i if cartan[i][j] == -2 else j
        return ('B', r) if degree[short_end] == 1 else ('C', r)
    branch = [i for i in nodes if degree[i] == 3]
    if not branch:
        return ('A', r)
    b = branch[0]
    arms = []
    for start in neighbours[b]:
        length, prev, cur = 1, b, start
        while True:
            nxt = [k for k in neighbours[cur] if k != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[0] == 1 and arms[1] == 1:
        return ('D', r)
    return ('E', r)


def simple_system(datum: RootDatum, roots: Iterable[Root]) -> list[Root]:
    """Indecomposable roots of (roots ∩ positive roots), sorted."""
    positive = sorted(r for r in roots if r.is_positive)
    coords = {r.coords for r in positive}
    simple = []
    for r in positive:
        decomposable = any(
            tuple(a - b for a, b in zip(r.coords, q.coords)) in coords
            for q in positive if q.height < r.height
        )
        if not decomposable:
            simple.append(r)
    return simple


def subsystem_cartan(datum: RootDatum, basis: Sequence[Root]) -> list[list[int]]:
    """C[i][j] = <b_j, b_i^vee> for a list of roots."""
    K = datum.system.pairing_matrix
    return [
        [int(np.array(bj.coords) @ K @ np.array(bi.coroot)) for bj in basis]
        for bi in basis
    ]


def classify_subsystem(datum: RootDatum, roots: Iterable[Root]) -> tuple[CartanType, int]:
    """Cartan type and Weyl group order of a root subsystem.

    Raises:
        NotASubsystemError: If roots is not closed under negation and reflections
    """
    roots = set(roots)
    coords = {r.coords for r in roots}
    for r in roots:
        if tuple(-c for c in r.coords) not in coords:
            raise NotASubsystemError("Root set is not closed under negation")
    for a in roots:
        s = reflection(datum, a)
        for b in roots:
            if s.act_on_root_coords(b.coords) not in coords:
                raise NotASubsystemError("Root set is not closed under its reflections")
    if not roots:
        return CartanType(()), 1
    basis = simple_system(datum, roots)
    cartan_type = classify_cartan_matrix(subsystem_cartan(datum, basis))
    return cartan_type, weyl_group_order(cartan_type)
