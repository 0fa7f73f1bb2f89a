"""Signed-permutation model of the Tits section in Sp_2n.

Basis e_0, ..., e_{n-1}, e'_0, ..., e'_{n-1} with <e_i, e'_j> = delta_ij.
Coroots in the epsilon basis: alpha_0^vee = eps_0 (node 0 is the long
root 2 eps_0) and alpha_i^vee = eps_i - eps_{i-1} for i >= 1.

    sigma(s_0):  e_0 -> e'_0,    e'_0 -> -e_0
    sigma(s_i):  e_{i-1} -> e_i, e_i -> -e_{i-1}   (and the same on primes)
"""

from fractions import Fraction
from typing import Sequence

from sympy import Matrix, eye, zeros

from core.errors import VerificationError
from models.braid import braid_relation_order
from models.fundgroup import fundamental_group
from models.lattice import format_vector
from models.lifting import component_datum
from models.tits import sigma, tits_power


def sigma_matrix(rank: int, i: int) -> Matrix:
    """2n x 2n matrix of sigma(s_i); column k is the image of basis vector k."""
    m = eye(2 * rank)
    if i == 0:
        e, e_prime = 0, rank
        m[e, e] = m[e_prime, e_prime] = 0
        m[e_prime, e] = 1
        m[e, e_prime] = -1
        return m
    for offset in (0, rank):
        a, b = offset + i - 1, offset + i
        m[a, a] = m[b, b] = 0
        m[b, a] = 1
        m[a, b] = -1
    return m


def word_matrix(rank: int, word: Sequence[int]) -> Matrix:
    result = eye(2 * rank)
    for i in word:
        result = result * sigma_matrix(rank, i)
    return result


def epsilon_coordinates(t: Sequence[Fraction]) -> list[Fraction]:
    """eps_j coefficient of sum c_i alpha_i^vee is c_j - c_{j+1}."""
    n = len(t)
    return [t[j] - (t[j + 1] if j + 1 < n else 0) for j in range(n)]


def torus_matrix(t: Sequence[Fraction]) -> Matrix:
    """Diagonal matrix of a torus class of order at most 2.

    Raises:
        ValueError: If some eps-coordinate is not a half-integer
    """
    n = len(t)
    m = zeros(2 * n, 2 * n)
    for j, x in enumerate(epsilon_coordinates(t)):
        if (2 * x).denominator != 1:
            raise ValueError(f"Torus class ({', '.join(format_vector(t))}) has order > 2")
        sign = -1 if (2 * x).numerator % 2 else 1
        m[j, j] = sign
        m[n + j, n + j] = sign
    return m


def check_type_c_square(rank: int) -> Matrix:
    """sigma(c)^2 = (-1)^n Id in the matrix model, and equal to the abstract Tits computation.

    Raises:
        VerificationError: If either comparison fails
    """
    datum = component_datum('C', rank)
    c = fundamental_group(datum).generator_element(0).weyl
    square = word_matrix(rank, c.reduced_word) ** 2
    instance = {'datum': datum.label}
    if square != (-1) ** rank * eye(2 * rank):
        raise VerificationError('type-c-matrix-square', instance)
    abstract = tits_power(sigma(datum, c), 2)
    if not abstract.is_torus or torus_matrix(abstract.torus) != square:
        raise VerificationError('type-c-matrix-abstract', instance)
    return square


def check_braid_relations(rank: int) -> None:
    """The sigma matrices satisfy the braid relations of C_n."""
    datum = component_datum('C', rank)
    system = datum.system
    for i in range(rank):
        for j in range(i + 1, rank):
            m = braid_relation_order(system, i, j)
            left = [i, j] * (m // 2) + ([i] if m % 2 else [])
            right = [j, i] * (m // 2) + ([j] if m % 2 else [])
            if word_matrix(rank, left) != word_matrix(rank, right):
                raise VerificationError('type-c-matrix-braid', {'datum': datum.label, 'pair': [i + 1, j + 1]})
