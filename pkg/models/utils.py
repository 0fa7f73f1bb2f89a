"""Parsing and formatting helpers, plus the fuzzy matching behind typo suggestions."""

from fractions import Fraction
from typing import Sequence

from core.errors import DimensionError, InvalidArgumentError
from models.lattice import RationalVector, parse_vector
from models.rootdata import RootDatum

BASES = ('coroot', 'fundamental')


def parse_lambda(text: str, datum: RootDatum, basis: str = 'coroot') -> RationalVector:
    """Parse lambda for the given datum.

    With basis 'fundamental' the first n coordinates are coefficients of the
    fundamental coweights; central coordinates are read as given.

    Raises:
        DatumParseError: If a coordinate is not rational
        DimensionError: If the number of coordinates is wrong
        InvalidArgumentError: If basis is unknown
    """
    if basis not in BASES:
        raise InvalidArgumentError(f"Invalid basis: '{basis}'. Expected one of: {', '.join(BASES)}")
    values = parse_vector(text)
    if len(values) != datum.dim:
        raise DimensionError(f"lambda has {len(values)} coordinates, {datum.label} needs {datum.dim}")
    if basis == 'coroot':
        return values

    n = datum.n
    head = [Fraction(0)] * n
    for k, coweight in zip(values[:n], datum.fundamental_coweights()):
        head = [a + k * c for a, c in zip(head, coweight[:n])]
    return tuple(head) + tuple(values[n:])


def format_invariants(factors: Sequence[int]) -> str:
    """'Z/2 x Z/4', or 'trivial' for the empty list."""
    if not factors:
        return 'trivial'
    return ' x '.join(f"Z/{d}" for d in factors)


def format_word(word: Sequence[int]) -> str:
    """'s1 s3 s2' from the 0-based word (0, 2, 1); 'e' when empty."""
    if not word:
        return 'e'
    return ' '.join(f"s{i + 1}" for i in word)


def one_based(word: Sequence[int]) -> list[int]:
    return [i + 1 for i in word]


def similarity_score(s1: str, s2: str) -> int:
    """Score how close a mistyped command or suite name is to a real one.

    Comparison ignores case. An equal pair scores 100, a prefix 80 and a
    substring 60. Anything else scores half the percentage of characters of
    s1 found in order in s2, relative to the longer string, and counts only
    above 20.
    """
    a, b = s1.lower(), s2.lower()
    if a == b:
        return 100
    if a.startswith(b) or b.startswith(a):
        return 80
    if a in b or b in a:
        return 60

    # greedy in-order scan of b
    remaining = iter(b)
    matches = sum(1 for char in a if char in remaining)
    score = int(matches / max(len(a), len(b)) * 50)
    return score if score > 20 else 0


def find_similar_strings(target: str, candidates: list[str], limit: int = 5) -> list[str]:
    """Candidates with a positive similarity_score, best first."""
    scored = [(c, similarity_score(target, c)) for c in candidates]
    ranked = sorted((pair for pair in scored if pair[1] > 0), key=lambda pair: pair[1], reverse=True)
    return [c for c, _ in ranked[:limit]]
