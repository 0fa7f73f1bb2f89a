"""Exact rational vectors and full-rank lattices.

Vectors are tuples of ``fractions.Fraction``; lattices keep a canonical
basis obtained from the Hermite normal form of the integral basis matrix,
so two lattices are equal exactly when their canonical bases agree.
Membership and quotient representatives are computed from the coordinates
against that canonical basis.
"""

from fractions import Fraction
from math import floor, lcm
from typing import Iterable, Sequence

from sympy import Matrix, Rational
from sympy.matrices.normalforms import hermite_normal_form, invariant_factors
from sympy.polys.domains import ZZ

from core.errors import DatumParseError, DimensionError

RationalVector = tuple[Fraction, ...]


# ===== Vector helpers =====

def vector(values: Iterable) -> RationalVector:
    """Build a RationalVector from ints, Fractions or 'p/q' strings."""
    return tuple(v if isinstance(v, Fraction) else Fraction(v) for v in values)


def zero_vector(dim: int) -> RationalVector:
    return (Fraction(0),) * dim


def add(u: RationalVector, v: RationalVector) -> RationalVector:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def sub(u: RationalVector, v: RationalVector) -> RationalVector:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def scale(k, v: RationalVector) -> RationalVector:
    return tuple(k * a for a in v)


def common_denominator(v: Iterable[Fraction]) -> int:
    """Least common multiple of the denominators of v (1 for an integral vector)."""
    den = 1
    for x in v:
        den = lcm(den, x.denominator)
    return den


def parse_rational(text: str) -> Fraction:
    """Parse '3', '-1/2' or '0.25' into an exact Fraction.

    Raises:
        DatumParseError: If text is not a rational number
    """
    cleaned = text.strip()
    try:
        return Fraction(cleaned)
    except (ValueError, ZeroDivisionError):
        raise DatumParseError(f"Invalid rational '{cleaned}'. Expected p or p/q")


def parse_vector(text: str) -> RationalVector:
    """Parse a comma-separated list of rationals ('1/4,0,-1/2')."""
    if not text.strip():
        raise DatumParseError("Empty vector. Expected comma-separated rationals")
    return tuple(parse_rational(part) for part in text.split(','))


def format_rational(x: Fraction) -> str:
    """Render a Fraction as 'p' or 'p/q' (the JSON convention)."""
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def format_vector(v: Sequence[Fraction]) -> list[str]:
    return [format_rational(x) for x in v]


def _to_sympy(rows: Sequence[Sequence[Fraction]]) -> Matrix:
    return Matrix([[Rational(x.numerator, x.denominator) for x in row] for row in rows])


def _from_sympy(value) -> Fraction:
    value = Rational(value)
    return Fraction(int(value.p), int(value.q))


# ===== Lattices =====

class Lattice:
    """A full-rank lattice in Q^dim given by rational basis rows.

    The basis passed in is replaced by a canonical one: scale to a common
    denominator, take the Hermite normal form of the integral matrix,
    scale back. The canonical basis does not depend on the chosen
    denominator, so equality of lattices is equality of canonical bases.
    """

    __slots__ = ('dim', 'basis', 'denominator', '_inverse')

    def __init__(self, rows: Sequence[Sequence]):
        rows = [vector(row) for row in rows]
        if not rows:
            raise DimensionError("A lattice needs at least one basis row")
        dim = len(rows[0])
        if any(len(row) != dim for row in rows):
            raise DimensionError("Lattice basis rows have different lengths")

        den = 1
        for row in rows:
            den = lcm(den, common_denominator(row))
        integral = Matrix([[int(x * den) for x in row] for row in rows])
        # hermite_normal_form works on columns: columns of H span the column
        # lattice of integral.T, i.e. the row lattice we were given
        hnf = hermite_normal_form(integral.T)
        if hnf.cols != dim or hnf.rows != dim:
            raise DimensionError(f"Lattice generators have rank {hnf.cols}, expected full rank {dim}")

        canonical = tuple(
            tuple(Fraction(int(hnf[i, j]), den) for i in range(dim))
            for j in range(dim)
        )
        self.dim = dim
        self.basis = canonical
        self.denominator = common_denominator(x for row in canonical for x in row)
        inverse = _to_sympy(canonical).inv()
        self._inverse = tuple(
            tuple(_from_sympy(inverse[i, j]) for j in range(dim)) for i in range(dim)
        )

    @classmethod
    def standard(cls, dim: int) -> 'Lattice':
        """The lattice Z^dim."""
        return cls([[1 if i == j else 0 for j in range(dim)] for i in range(dim)])

    @classmethod
    def from_generators(cls, generators: Sequence[Sequence]) -> 'Lattice':
        """Lattice spanned by any (possibly redundant) full-rank generating set."""
        return cls(generators)

    def __eq__(self, other) -> bool:
        return isinstance(other, Lattice) and self.basis == other.basis

    def __hash__(self) -> int:
        return hash(self.basis)

    def __repr__(self) -> str:
        rows = '; '.join(', '.join(format_rational(x) for x in row) for row in self.basis)
        return f"Lattice([{rows}])"

    def _check_dim(self, v: Sequence) -> None:
        if len(v) != self.dim:
            raise DimensionError(f"Vector of dimension {len(v)} does not match lattice dimension {self.dim}")

    def coordinates(self, v: Sequence[Fraction]) -> RationalVector:
        """Coordinates c with v = sum c_j basis_j."""
        self._check_dim(v)
        inv = self._inverse
        return tuple(
            sum((v[i] * inv[i][j] for i in range(self.dim) if v[i]), Fraction(0))
            for j in range(self.dim)
        )

    def contains(self, v: Sequence[Fraction]) -> bool:
        return all(c.denominator == 1 for c in self.coordinates(v))

    def contains_lattice(self, other: 'Lattice') -> bool:
        return all(self.contains(row) for row in other.basis)

    def reduce(self, v: Sequence[Fraction]) -> RationalVector:
        """Representative of v + L with coordinates in [0, 1) against the canonical basis."""
        coords = self.coordinates(v)
        frac = [c - floor(c) for c in coords]
        return tuple(
            sum((frac[j] * self.basis[j][i] for j in range(self.dim) if frac[j]), Fraction(0))
            for i in range(self.dim)
        )

    def class_order(self, v: Sequence[Fraction]) -> int:
        """Smallest k >= 1 with k*v in L."""
        return common_denominator(self.coordinates(v))

    def p_prime_part(self, v: Sequence[Fraction], p: int) -> RationalVector:
        """Component of the class of v whose order is prime to p.

        For p = 0 every class is its own p'-part. Otherwise write the
        order n = p^a * m with m prime to p and multiply by the idempotent
        e = 1 (mod m), e = 0 (mod p^a).
        """
        if p == 0:
            return self.reduce(v)
        n = self.class_order(v)
        p_power = 1
        while n % (p_power * p) == 0:
            p_power *= p
        m = n // p_power
        if m == 1:
            return zero_vector(self.dim)
        if p_power == 1:
            return self.reduce(v)
        e = p_power * pow(p_power, -1, m)
        return self.reduce(scale(e, v))

    def index_invariants(self, sublattice: 'Lattice') -> list[int]:
        """Invariant factors (> 1) of the finite group self / sublattice.

        Raises:
            ValueError: If sublattice is not contained in self
        """
        if not self.contains_lattice(sublattice):
            raise ValueError("index_invariants needs a sublattice of this lattice")
        rows = [self.coordinates(row) for row in sublattice.basis]
        integral = Matrix([[int(c) for c in row] for row in rows])
        factors = [abs(int(f)) for f in invariant_factors(integral, domain=ZZ)]
        return [f for f in factors if f != 1]

    def index(self, sublattice: 'Lattice') -> int:
        total = 1
        for f in self.index_invariants(sublattice):
            total *= f
        return total


# ===== Operation-style entry points =====

def lattice_contains(lattice: Lattice, v: Sequence[Fraction]) -> bool:
    """True iff v is an integral combination of the lattice basis."""
    return lattice.contains(v)


def quotient_canonical(lattice: Lattice, v: Sequence[Fraction]) -> RationalVector:
    """Canonical representative of v + L (equal for v, w iff v - w in L)."""
    return lattice.reduce(v)


def class_order(lattice: Lattice, v: Sequence[Fraction]) -> int:
    return lattice.class_order(v)


def p_prime_part(v: Sequence[Fraction], lattice: Lattice, p: int) -> RationalVector:
    return lattice.p_prime_part(v, p)


def invariant_factors_from_prime_powers(prime_powers: Iterable[int]) -> list[int]:
    """Turn elementary divisors (prime powers) into invariant factors d1 | d2 | ...

    >>> invariant_factors_from_prime_powers([2, 4, 3])
    [2, 12]
    """
    powers = [q for q in prime_powers if q > 1]
    if not powers:
        return []
    factors = [abs(int(f)) for f in invariant_factors(Matrix.diag(*powers), domain=ZZ)]
    return [f for f in factors if f != 1]
