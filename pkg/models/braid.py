"""Braid words, lifts of Weyl elements and the Garside word problem.

Positive braids are normalised with the left-greedy Garside normal form
over the simple elements (all of W, with Delta = w0). A mixed word is
brought to the form Delta^m * x1 ... xk by rewriting every inverse
generator as Delta^-1 * (w0 s) and conjugating the already normalised
factors past Delta.
"""

from dataclasses import dataclass
from typing import Iterable

from models.rootdata import RootDatum, RootSystem
from models.weyl import WeylElement, longest_element


@dataclass(frozen=True)
class BraidWord:
    """Signed word in the braid generators: letters are (node, +1 or -1)."""
    letters: tuple[tuple[int, int], ...] = ()

    @classmethod
    def positive(cls, word: Iterable[int]) -> 'BraidWord':
        return cls(tuple((i, 1) for i in word))

    def __mul__(self, other: 'BraidWord') -> 'BraidWord':
        return BraidWord(self.letters + other.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        if not self.letters:
            return '1'
        return ' '.join(f"s{i + 1}" if e == 1 else f"s{i + 1}^-1" for i, e in self.letters)

    @property
    def is_positive(self) -> bool:
        return all(e == 1 for _, e in self.letters)

    def inverse(self) -> 'BraidWord':
        return BraidWord(tuple((i, -e) for i, e in reversed(self.letters)))

    def power(self, k: int) -> 'BraidWord':
        base = self if k >= 0 else self.inverse()
        return BraidWord(base.letters * abs(k))

    def weyl_image(self, system: RootSystem) -> WeylElement:
        return WeylElement.from_word(system, (i for i, _ in self.letters))


def lift_weyl(w: WeylElement) -> BraidWord:
    """The positive lift of w along its reduced word."""
    return BraidWord.positive(w.reduced_word)


def reverse(b: BraidWord) -> BraidWord:
    """The anti-automorphism fixing every generator: reverse the letters, keep exponents."""
    return BraidWord(tuple(reversed(b.letters)))


def braid_product(*words: BraidWord) -> BraidWord:
    result = BraidWord()
    for w in words:
        result = result * w
    return result


@dataclass(frozen=True)
class GarsideNormalForm:
    """Delta^infimum followed by left-weighted proper simple factors."""
    infimum: int
    factors: tuple[WeylElement, ...]

    @property
    def supremum(self) -> int:
        return self.infimum + len(self.factors)

    def to_word(self, system: RootSystem) -> BraidWord:
        delta = lift_weyl(longest_element(system))
        word = delta.power(self.infimum)
        for f in self.factors:
            word = word * lift_weyl(f)
        return word


class _GarsideState:
    def __init__(self, system: RootSystem):
        self.system = system
        self.delta = longest_element(system)
        self.infimum = 0
        self.factors: list[WeylElement] = []
        self._simples = [WeylElement.simple(system, i) for i in range(system.n)]

    def conjugate_by_delta(self, x: WeylElement) -> WeylElement:
        return self.delta * x * self.delta

    def push_generator(self, i: int, exponent: int) -> None:
        if exponent == 1:
            self.push_simple(self._simples[i])
            return
        self.infimum -= 1
        self.factors = [self.conjugate_by_delta(f) for f in self.factors]
        self.push_simple(self.delta * self._simples[i])

    def push_simple(self, y: WeylElement) -> None:
        if y.is_identity:
            return
        self.factors.append(y)
        self._normalise()

    def _normalise(self) -> None:
        changed = True
        while changed:
            changed = False
            for k in range(len(self.factors) - 1, 0, -1):
                x, y = self.factors[k - 1], self.factors[k]
                moved = False
                while True:
                    extra = y.left_descents - x.right_descents
                    if not extra:
                        break
                    t = self._simples[min(extra)]
                    x, y = x * t, t * y
                    moved = True
                if moved:
                    self.factors[k - 1], self.factors[k] = x, y
                    changed = True
            self.factors = [f for f in self.factors if not f.is_identity]
        while self.factors and self.factors[0] == self.delta:
            self.factors.pop(0)
            self.infimum += 1


def garside_nf(datum: RootDatum | RootSystem, b: BraidWord) -> GarsideNormalForm:
    """Left-greedy normal form; equal braids have equal normal forms."""
    system = datum.system if isinstance(datum, RootDatum) else datum
    state = _GarsideState(system)
    for i, e in b.letters:
        state.push_generator(i, e)
    return GarsideNormalForm(state.infimum, tuple(state.factors))


def braid_equal(datum: RootDatum | RootSystem, a: BraidWord, b: BraidWord) -> bool:
    """Equality in the braid group B(W)."""
    return garside_nf(datum, a) == garside_nf(datum, b)


def braid_relation_order(system: RootSystem, i: int, j: int) -> int:
    """m_ij: the order of s_i s_j (2, 3, 4 or 6 for i != j)."""
    if i == j:
        return 1
    product = int(system.cartan[i, j]) * int(system.cartan[j, i])
    return {0: 2, 1: 3, 2: 4, 3: 6}[product]
