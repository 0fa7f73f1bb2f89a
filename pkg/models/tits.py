"""The extended Weyl group N as pairs (torus class, Weyl element).

An element (t, w) stands for t * sigma(w), where sigma lifts w along its
reduced word. Relations: sigma(w) t sigma(w)^-1 = w(t), and
sigma(s)^2 = alpha_s^vee / 2. Torus classes are kept as the canonical p'-part
modulo Y, so in characteristic 2 every sigma(s) squares to 1.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from core.errors import VerificationError
from models.braid import BraidWord, lift_weyl, reverse
from models.lattice import RationalVector, format_vector, zero_vector
from models.rootdata import RootDatum
from models.weyl import WeylElement, longest_element

_HALF = Fraction(1, 2)


def reduce_torus(datum: RootDatum, v: Sequence[Fraction]) -> RationalVector:
    """Canonical representative of the p'-part of v modulo Y."""
    return datum.lattice.p_prime_part(v, datum.p)


@dataclass(frozen=True, eq=False)
class TitsElement:
    datum: RootDatum
    torus: RationalVector
    weyl: WeylElement

    def __eq__(self, other) -> bool:
        return (isinstance(other, TitsElement) and self.datum == other.datum
                and self.torus == other.torus and self.weyl == other.weyl)

    def __hash__(self) -> int:
        return hash((self.torus, self.weyl))

    def __mul__(self, other: 'TitsElement') -> 'TitsElement':
        return tits_mul(self, other)

    def __repr__(self) -> str:
        return f"TitsElement(t=({', '.join(format_vector(self.torus))}), w={self.weyl!r})"

    @property
    def is_torus(self) -> bool:
        return self.weyl.is_identity

    @property
    def is_identity(self) -> bool:
        return self.is_torus and not any(self.torus)


def tits_identity(datum: RootDatum) -> TitsElement:
    return TitsElement(datum, zero_vector(datum.dim), WeylElement.identity(datum.system))


def torus_element(datum: RootDatum, t: Sequence[Fraction]) -> TitsElement:
    return TitsElement(datum, reduce_torus(datum, t), WeylElement.identity(datum.system))


def sigma(datum: RootDatum, w: WeylElement) -> TitsElement:
    """The reference lift of w; its torus part is 0 by construction."""
    return TitsElement(datum, zero_vector(datum.dim), w)


def _half_coroot_image(datum: RootDatum, u: WeylElement, i: int) -> list[Fraction]:
    column = u.coroot_image(i)
    return [Fraction(int(x), 2) for x in column] + [Fraction(0)] * datum.central_rank


class _Accumulator:
    """Unreduced running product t * sigma(u), multiplied on the right."""

    def __init__(self, datum: RootDatum, torus: Sequence[Fraction], weyl: WeylElement):
        self.datum = datum
        self.torus = list(torus)
        self.weyl = weyl

    def times_sigma(self, i: int) -> None:
        # sigma(u) sigma(s) = sigma(us) unless s is a descent of u, where the
        # square sigma(s)^2 leaves (us)(alpha_s^vee/2) = -u(alpha_s^vee)/2 behind
        if self.weyl.is_right_descent(i):
            half = _half_coroot_image(self.datum, self.weyl, i)
            self.torus = [a - b for a, b in zip(self.torus, half)]
        self.weyl = self.weyl * WeylElement.simple(self.datum.system, i)

    def times_sigma_inverse(self, i: int) -> None:
        # sigma(s)^-1 = (alpha_s^vee/2) sigma(s) up to Y
        half = _half_coroot_image(self.datum, self.weyl, i)
        self.torus = [a + b for a, b in zip(self.torus, half)]
        self.times_sigma(i)

    def times_torus(self, t: Sequence[Fraction]) -> None:
        moved = self.weyl.act_on_coweight(t)
        self.torus = [a + b for a, b in zip(self.torus, moved)]

    def result(self) -> TitsElement:
        return TitsElement(self.datum, reduce_torus(self.datum, self.torus), self.weyl)


def tits_mul(x: TitsElement, y: TitsElement) -> TitsElement:
    """Product in N: (t, w)(t', w') = (t + w(t') + corrections, ww')."""
    if x.datum != y.datum:
        raise ValueError(f"Cannot multiply Tits elements of {x.datum} and {y.datum}")
    acc = _Accumulator(x.datum, x.torus, x.weyl)
    acc.times_torus(y.torus)
    for i in y.weyl.reduced_word:
        acc.times_sigma(i)
    return acc.result()


def ts(datum: RootDatum, b: BraidWord) -> TitsElement:
    """Image of a braid word under the morphism B(W) -> N sending s to sigma(s)."""
    acc = _Accumulator(datum, zero_vector(datum.dim), WeylElement.identity(datum.system))
    for i, e in b.letters:
        if e == 1:
            acc.times_sigma(i)
        else:
            acc.times_sigma_inverse(i)
    return acc.result()


def ts_product(datum: RootDatum, words: Iterable[BraidWord]) -> TitsElement:
    result = tits_identity(datum)
    for b in words:
        result = result * ts(datum, b)
    return result


def sigma_of_word(datum: RootDatum, word: Sequence[int]) -> TitsElement:
    return ts(datum, BraidWord.positive(word))


def tits_inverse(x: TitsElement) -> TitsElement:
    """(t sigma(w))^-1 = sigma(w)^-1 (-t)."""
    inverse_lift = ts(x.datum, lift_weyl(x.weyl).inverse())
    return inverse_lift * torus_element(x.datum, [-a for a in x.torus])


def tits_power(x: TitsElement, k: int) -> TitsElement:
    base = x if k >= 0 else tits_inverse(x)
    result = tits_identity(x.datum)
    for _ in range(abs(k)):
        result = result * base
    return result


def tits_element_order(x: TitsElement, bound: int = 10_000) -> int:
    """Order of x in N (raises ValueError if it exceeds bound)."""
    power = x
    for k in range(1, bound + 1):
        if power.is_identity:
            return k
        power = power * x
    raise ValueError(f"Tits element order exceeds {bound}")


def conjugate(g: TitsElement, x: TitsElement) -> TitsElement:
    """g^-1 x g."""
    return tits_inverse(g) * x * g


# ===== Identity checks =====

def adams_vogan(datum: RootDatum, b: BraidWord) -> RationalVector:
    """ts(b) ts(reverse b), checked against (rho^vee - w(rho^vee))/2 modulo Y.

    Raises:
        VerificationError: If the product is not that torus element
    """
    product = ts(datum, b) * ts(datum, reverse(b))
    w = b.weyl_image(datum.system)
    rho = datum.rho_check()
    expected = reduce_torus(datum, [(a - c) * _HALF for a, c in zip(rho, w.act_on_coweight(rho))])
    if not product.is_torus or product.torus != expected:
        raise VerificationError('adams-vogan', {
            'datum': datum.label,
            'word': str(b),
            'torus': format_vector(product.torus),
            'expected': format_vector(expected),
        })
    return product.torus


def involution_torus(datum: RootDatum, subset: Iterable[int]) -> RationalVector:
    """sigma(w_I w0) sigma(w0 w_I), checked against rho^vee - rho^vee_I modulo Y.

    Raises:
        VerificationError: If the identity fails
    """
    subset = sorted(set(subset))
    w0 = longest_element(datum)
    w_i = longest_element(datum, subset)
    product = sigma(datum, w_i * w0) * sigma(datum, w0 * w_i)
    rho, rho_i = datum.rho_check(), datum.rho_check_of_subset(subset)
    expected = reduce_torus(datum, [a - b for a, b in zip(rho, rho_i)])
    if not product.is_torus or product.torus != expected:
        raise VerificationError('sigma-involution', {
            'datum': datum.label,
            'subset': [i + 1 for i in subset],
            'torus': format_vector(product.torus),
            'expected': format_vector(expected),
        })
    return product.torus
