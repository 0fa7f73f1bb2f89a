"""Centralisers of semisimple classes: alcove normalisation, Phi(s), A_W(s).

A semisimple class s is given by a representative lambda of Y (x) Q. A root
alpha is trivial on s exactly when <alpha, lambda> is an integer. After
conjugating lambda into the fundamental alcove

    <alpha_i, lambda> >= 0 for every simple root,
    <theta, lambda> <= 1 for the highest root of every component,

the simple roots and the negated highest roots on which lambda sits on a
wall form a basis of Phi(s), and A_W(s) is read off from the finite group
A_G instead of enumerating W.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Sequence

import numpy as np
from sympy.combinatorics import Permutation, PermutationGroup

from core.errors import DimensionError, NotNormalizedError, VerificationError
from models.fundgroup import FundamentalGroupElement, a_sub_G, group_invariants
from models.lattice import (RationalVector, common_denominator, format_vector,
                            invariant_factors_from_prime_powers)
from models.rootdata import CartanType, Root, RootDatum
from models.weyl import (WeylElement, classify_cartan_matrix, enumerate_weyl, left_multiplication_table,
                         reflection, simple_system, stacked_matrices, stacked_root_matrices,
                         subsystem_cartan, weyl_group_order)


@dataclass(frozen=True, eq=False)
class SemisimpleClass:
    """lambda modulo Y, with its p-torsion removed.

    Attributes:
        projected: True when the given lambda had p-torsion and was replaced
            by the representative of its p'-part
    """
    datum: RootDatum
    lam: RationalVector
    normalized: bool = False
    projected: bool = False

    @classmethod
    def create(cls, datum: RootDatum, lam: Sequence) -> 'SemisimpleClass':
        """Build a class, projecting away p-torsion.

        Raises:
            DimensionError: If lambda has the wrong length
        """
        lam = tuple(Fraction(x) for x in lam)
        if len(lam) != datum.dim:
            raise DimensionError(f"lambda has {len(lam)} coordinates, {datum.label} needs {datum.dim}")
        if datum.p and datum.lattice.class_order(lam) % datum.p == 0 and any(lam):
            projected = datum.lattice.p_prime_part(lam, datum.p)
            if projected != datum.lattice.reduce(lam):
                return cls(datum, projected, projected=True)
        return cls(datum, lam)

    def pairing(self, alpha: Root | Sequence[int]) -> Fraction:
        return self.datum.pairing(alpha, self.lam)

    @property
    def in_alcove(self) -> bool:
        return _first_violation(self.datum, self.lam) is None

    def scaled(self, q: int) -> 'SemisimpleClass':
        return SemisimpleClass.create(self.datum, [q * x for x in self.lam])


@dataclass(frozen=True)
class Conjugator:
    """lambda' = w(lambda) + translation, with translation in Q^vee."""
    weyl: WeylElement
    translation: RationalVector


@dataclass
class CentralizerData:
    phi_s: tuple[Root, ...]
    basis: list[Root]
    w0s_type: CartanType
    w0s_order: int
    a_w_s: list[FundamentalGroupElement]
    conjugator: Conjugator
    normalized: SemisimpleClass
    a_w_invariants: list[int] = field(default_factory=list)


@dataclass(frozen=True)
class BruteForceResult:
    w_s_order: int
    w0_s_order: int
    invariant_factors: list[int]

    @property
    def quotient_order(self) -> int:
        return self.w_s_order // self.w0_s_order


# ===== Normalisation =====

def _first_violation(datum: RootDatum, lam: Sequence[Fraction]):
    """('simple', i) or ('affine', k) for the lowest-index violated alcove inequality."""
    for i in range(datum.n):
        if datum.pairing(_unit(datum.n, i), lam) < 0:
            return ('simple', i)
    for k, theta in enumerate(datum.system.highest_roots):
        if datum.pairing(theta, lam) > 1:
            return ('affine', k)
    return None


def _unit(n: int, i: int) -> tuple[int, ...]:
    return tuple(int(k == i) for k in range(n))


def normalize_to_alcove(s: SemisimpleClass) -> tuple[SemisimpleClass, Conjugator]:
    """Move lambda into the fundamental alcove by simple and affine reflections.

    Central coordinates are left untouched.

    Returns:
        The normalised class and the conjugator (w, mu) with lambda' = w(lambda) + mu
    """
    datum = s.datum
    system = datum.system
    lam = s.lam
    w = WeylElement.identity(system)
    mu = (Fraction(0),) * datum.dim
    while (violation := _first_violation(datum, lam)) is not None:
        kind, index = violation
        if kind == 'simple':
            step = WeylElement.simple(system, index)
            shift = None
        else:
            theta = system.highest_roots[index]
            step = reflection(datum, theta)
            shift = datum.pad(Fraction(c) for c in theta.coroot)
        lam = step.act_on_coweight(lam)
        mu = step.act_on_coweight(mu)
        if shift is not None:
            lam = tuple(a + b for a, b in zip(lam, shift))
            mu = tuple(a + b for a, b in zip(mu, shift))
        w = step * w

    expected = tuple(a + b for a, b in zip(w.act_on_coweight(s.lam), mu))
    if expected != lam:
        raise VerificationError('alcove-conjugator', {'lambda': format_vector(s.lam)})
    return SemisimpleClass(datum, lam, normalized=True, projected=s.projected), Conjugator(w, mu)


def _require_alcove(s: SemisimpleClass) -> None:
    if not s.in_alcove:
        raise NotNormalizedError(f"lambda = ({', '.join(format_vector(s.lam))}) is not in the fundamental alcove")


# ===== Phi(s) and its basis =====

def phi_of_s(s: SemisimpleClass) -> tuple[Root, ...]:
    """Roots with integral pairing against lambda."""
    return tuple(r for r in s.datum.roots if s.pairing(r).denominator == 1)


def basis_of_phi_s(s: SemisimpleClass) -> list[Root]:
    """Simple roots on a wall through lambda, plus -theta for every component with <theta, lambda> = 1.

    Raises:
        NotNormalizedError: If lambda is not in the alcove
        VerificationError: If some root of Phi(s) is not a signed combination
    """
    _require_alcove(s)
    datum = s.datum
    basis = [datum.system.roots[i] for i in range(datum.n) if s.pairing(_unit(datum.n, i)) == 0]
    for theta in datum.system.highest_roots:
        if s.pairing(theta) == 1:
            basis.append(-theta)
    for root in phi_of_s(s):
        coefficients = _basis_coefficients(s, root)
        if not (all(c >= 0 for c in coefficients) or all(c <= 0 for c in coefficients)):
            raise VerificationError('phi-s-basis', {'root': list(root.coords)})
    return basis


def _basis_coefficients(s: SemisimpleClass, root: Root) -> tuple[int, ...]:
    """Coefficients of root against the simple roots and the affine root of its component.

    For a root a with k = <a, lambda>, a = (a - k*theta) + k*theta, and
    -theta is the affine basis element when <theta, lambda> = 1.
    """
    datum = s.datum
    k = s.pairing(root)
    component = datum.system.component_of(root)
    lo, hi = datum.system.component_slices[component]
    theta = datum.system.highest_roots[component]
    if s.pairing(theta) == 1:
        coefficients = [int(root.coords[i] - k * theta.coords[i]) for i in range(lo, hi)]
        return tuple(coefficients) + (int(-k),)
    return tuple(root.coords[lo:hi]) + (0,)


def positive_roots_of_s(s: SemisimpleClass) -> frozenset[tuple[int, ...]]:
    """Phi^+(s): the roots of Phi(s) that are non-negative combinations of the basis."""
    _require_alcove(s)
    return frozenset(
        r.coords for r in phi_of_s(s) if all(c >= 0 for c in _basis_coefficients(s, r))
    )


def w0_type(s: SemisimpleClass) -> tuple[CartanType, int]:
    """Cartan type and order of W^0(s), read from the Cartan matrix of the basis."""
    roots = phi_of_s(s)
    if not roots:
        return CartanType(()), 1
    basis = simple_system(s.datum, roots)
    cartan_type = classify_cartan_matrix(subsystem_cartan(s.datum, basis))
    return cartan_type, weyl_group_order(cartan_type)


# ===== A_W(s) =====

def a_w_of_s(s: SemisimpleClass) -> list[FundamentalGroupElement]:
    """A_W(s) = {c in A_G : c(lambda) = lambda mod Y and c(Phi^+(s)) = Phi^+(s)}.

    Raises:
        NotNormalizedError: If lambda is not in the alcove
    """
    _require_alcove(s)
    datum = s.datum
    positive = positive_roots_of_s(s)
    result = []
    for c in a_sub_G(datum):
        moved = c.weyl.act_on_coweight(s.lam)
        if not datum.lattice.contains(tuple(a - b for a, b in zip(moved, s.lam))):
            continue
        if all(c.weyl.act_on_root_coords(r) in positive for r in positive):
            result.append(c)
    return result


def invariant_factors_of_a_w(s: SemisimpleClass, elements: list[FundamentalGroupElement] | None = None) -> list[int]:
    elements = a_w_of_s(s) if elements is None else elements
    return group_invariants(s.datum.system, elements)


def centralizer_data(s: SemisimpleClass) -> CentralizerData:
    """Everything the CLI reports about C_G(s), computed on the normalised class."""
    normalized, conjugator = normalize_to_alcove(s)
    w0s_type, w0s_order = w0_type(normalized)
    a_w = a_w_of_s(normalized)
    return CentralizerData(
        phi_s=phi_of_s(normalized),
        basis=basis_of_phi_s(normalized),
        w0s_type=w0s_type,
        w0s_order=w0s_order,
        a_w_s=a_w,
        conjugator=conjugator,
        normalized=normalized,
        a_w_invariants=invariant_factors_of_a_w(normalized, a_w),
    )


# ===== Brute-force oracle =====

def brute_force_w_of_s(s: SemisimpleClass, limit: int | None = None) -> BruteForceResult:
    """Enumerate W(s), generate W^0(s), and describe W(s)/W^0(s).

    The quotient is identified with the stabiliser of Phi(s) ∩ Phi^+ in
    W(s) and its invariant factors are taken from the permutation group it
    induces on the roots.

    Raises:
        OracleSizeError: If |W| exceeds limit
    """
    datum = s.datum
    system = datum.system
    elements = list(enumerate_weyl(datum, limit))
    n = system.n
    if n == 0:
        return BruteForceResult(1, 1, [])

    in_w_s = _stabiliser_mask(datum, s.lam)
    phi_s = phi_of_s(s)
    simple = simple_system(datum, phi_s)

    # W^0(s): closure of the identity under left multiplication by s_beta
    table = left_multiplication_table(system)
    words = [reflection(datum, beta).reduced_word for beta in simple]
    in_w0 = np.zeros(len(elements), dtype=bool)
    in_w0[0] = True
    frontier = np.array([0], dtype=np.int64)
    while frontier.size:
        reached = []
        for word in words:
            idx = frontier
            for i in reversed(word):
                idx = table[i][idx]
            reached.append(idx)
        if not reached:
            break
        candidates = np.unique(np.concatenate(reached))
        candidates = candidates[~in_w0[candidates]]
        in_w0[candidates] = True
        frontier = candidates
    if np.any(in_w0 & ~in_w_s):
        raise VerificationError('w0-inside-w-s', {'lambda': format_vector(s.lam)})

    w_s_indices = np.flatnonzero(in_w_s)
    if simple:
        simple_matrix = np.array([r.coords for r in simple], dtype=np.int64).T
        images = np.matmul(stacked_root_matrices(system)[w_s_indices], simple_matrix)
        keeps_positive = np.all(images.sum(axis=1) > 0, axis=1)
        stabiliser = w_s_indices[keeps_positive]
    else:
        stabiliser = w_s_indices

    w_s_order, w0_order = int(in_w_s.sum()), int(in_w0.sum())
    if len(stabiliser) * w0_order != w_s_order:
        raise VerificationError('w-s-semidirect-order', {
            'lambda': format_vector(s.lam),
            'w_s': w_s_order,
            'w0_s': w0_order,
            'stabiliser': len(stabiliser),
        })
    return BruteForceResult(w_s_order, w0_order, _abelian_invariants(system, [elements[k] for k in stabiliser]))


def _stabiliser_mask(datum: RootDatum, lam: RationalVector) -> np.ndarray:
    """Boolean mask over the enumeration of W: w(lambda) - lambda in Y."""
    n = datum.n
    head = lam[:n]
    d = common_denominator(head)
    lam_int = np.array([int(x * d) for x in head], dtype=np.int64)
    inverse_rows = [datum.lattice.coordinates(datum.pad(_unit(n, i))) for i in range(n)]
    e = common_denominator(x for row in inverse_rows for x in row)
    to_coordinates = np.array([[int(x * e) for x in row] for row in inverse_rows], dtype=np.int64)
    moved = np.matmul(stacked_matrices(datum.system), lam_int) - lam_int
    coordinates = moved @ to_coordinates
    return np.all(coordinates % (d * e) == 0, axis=1)


def _abelian_invariants(system, stabiliser: list[WeylElement]) -> list[int]:
    if len(stabiliser) <= 1:
        return []
    perms = []
    for w in stabiliser:
        images = (w.root_matrix @ system.root_array.T).T
        perms.append(Permutation([system.root_index[tuple(int(x) for x in row)] for row in images]))
    group = PermutationGroup(perms)
    return invariant_factors_from_prime_powers(group.abelian_invariants())


# ===== Sweep points =====

def _kac_solutions(marks: Sequence[int], total: int):
    """Non-negative k with sum(marks[i] * k[i]) <= total (k_0 absorbs the rest)."""
    if not marks:
        yield ()
        return
    head, rest = marks[0], marks[1:]
    for k in range(total // head + 1):
        for tail in _kac_solutions(rest, total - head * k):
            yield (k,) + tail


def alcove_points(datum: RootDatum, max_denominator: int = 4) -> list[RationalVector]:
    """Points of the fundamental alcove whose coroot coordinates have common denominator <= max_denominator.

    The bound limits the denominator of lambda itself, not the order of
    s = exp(2 pi i lambda): in A1, lambda = 1/4 needs max_denominator 4.
    Points are sum k_j varpi_j^vee / N over Kac coordinates with N <=
    max_denominator, one family per component, combined across components.
    """
    system = datum.system
    per_component = []
    for (lo, hi), theta in zip(system.component_slices, system.highest_roots):
        marks = [theta.coords[j] for j in range(lo, hi)]
        points = set()
        for total in range(1, max_denominator + 1):
            for ks in _kac_solutions(marks, total):
                point = [Fraction(0)] * system.n
                for j, k in zip(range(lo, hi), ks):
                    if k:
                        coweight = system.fundamental_coweight(j)
                        point = [a + Fraction(k, total) * c for a, c in zip(point, coweight)]
                if common_denominator(point) <= max_denominator:
                    points.add(tuple(point))
        per_component.append(points)

    result = set()
    for combination in product(*per_component):
        point = [Fraction(0)] * system.n
        for part in combination:
            point = [a + b for a, b in zip(point, part)]
        if common_denominator(point) <= max_denominator:
            result.add(datum.pad(point))
    if not per_component:
        result.add(datum.pad(()))
    return sorted(result)

