"""A Frobenius root F acting trivially on W, and F-stable splittings.

F multiplies torus classes by q and fixes every Weyl element, so a Tits
element (t, w) is F-fixed exactly when (q - 1) t lies in Y. Only the
trivial action on W is modelled.
"""

from dataclasses import dataclass, field

from core.errors import InvalidArgumentError, VerificationError
from models.centralizer import SemisimpleClass, a_w_of_s, normalize_to_alcove, phi_of_s, invariant_factors_of_a_w
from models.fundgroup import iota, prime_to_p_part
from models.lattice import Lattice, RationalVector, format_vector
from models.lifting import SplittingCertificate, splitting_certificate
from models.rootdata import RootDatum
from models.tits import TitsElement, reduce_torus


@dataclass(frozen=True)
class FrobeniusAction:
    """t -> q t on torus classes, identity on W.

    q need not be a prime power: only the arithmetic of t -> q t is used.
    """
    q: int
    weyl_action: str = 'trivial'

    def __post_init__(self):
        if self.q < 2:
            raise InvalidArgumentError(f"Invalid q: {self.q}. Must be an integer >= 2")
        if self.weyl_action != 'trivial':
            raise InvalidArgumentError(f"Invalid Weyl action: '{self.weyl_action}'. Only the trivial action is supported")

    @property
    def is_odd(self) -> bool:
        return self.q % 2 == 1

    def act_on_torus(self, datum: RootDatum, t: RationalVector) -> RationalVector:
        return reduce_torus(datum, [self.q * x for x in t])

    def __call__(self, x: TitsElement) -> TitsElement:
        return TitsElement(x.datum, self.act_on_torus(x.datum, x.torus), x.weyl)


def is_F_stable(x: TitsElement, F: FrobeniusAction) -> bool:
    """True iff (q - 1) t = 0 modulo Y."""
    return x.datum.lattice.contains([(F.q - 1) * a for a in x.torus])


def _datum_for(s: SemisimpleClass, F: FrobeniusAction) -> SemisimpleClass:
    """Even q is routed through the characteristic 2 datum, where sigma(W) is a copy of W."""
    if F.is_odd or s.datum.p == 2:
        return s
    return SemisimpleClass.create(s.datum.with_characteristic(2), s.lam)


def centralizer_F_stable(s: SemisimpleClass, F: FrobeniusAction) -> bool:
    """True iff Phi(q lambda) = Phi(lambda) and both classes have the same A_W structure."""
    s = _datum_for(s, F)
    scaled = s.scaled(F.q)
    if {r.coords for r in phi_of_s(scaled)} != {r.coords for r in phi_of_s(s)}:
        return False
    normalized, _ = normalize_to_alcove(s)
    normalized_scaled, _ = normalize_to_alcove(scaled)
    return invariant_factors_of_a_w(normalized) == invariant_factors_of_a_w(normalized_scaled)


@dataclass
class FStableSplitting:
    certificate: SplittingCertificate
    frobenius: FrobeniusAction
    fixed: list[bool] = field(default_factory=list)
    checks: list[str] = field(default_factory=list)


def f_stable_splitting(s: SemisimpleClass, F: FrobeniusAction) -> FStableSplitting:
    """A splitting certificate whose A_0 is pointwise F-fixed.

    The conjugator sigma(w) has torus part 0 and so is F-fixed; A_G(s)^F
    is all of A_G(s) because F acts trivially on W.

    Raises:
        VerificationError: If the centraliser is not F-stable or some element of A_0 is moved
    """
    s = _datum_for(s, F)
    instance = {'datum': s.datum.label, 'lambda': format_vector(s.lam), 'q': F.q}
    if not centralizer_F_stable(s, F):
        raise VerificationError('f-stable-centralizer', instance)
    certificate = splitting_certificate(s)
    fixed = [is_F_stable(x, F) for x in certificate.elements]
    if not all(fixed):
        raise VerificationError('f-fixed-section', instance)
    checks = ['f-stable-centralizer', 'f-fixed-section']

    if any(F(x) != x for x in certificate.elements):
        raise VerificationError('f-action', instance)
    checks.append('f-action')

    normalized, _ = normalize_to_alcove(s)
    if len(certificate) != len(a_w_of_s(normalized)):
        raise VerificationError('f-split-order', instance)
    checks.append('f-split-order')
    return FStableSplitting(certificate, F, fixed, checks)


def iota_is_equivariant(datum: RootDatum, q: int) -> bool:
    """Whether iota commutes with F, i.e. (q - 1) iota(a) lies in Q^vee for every p'-element a."""
    n = datum.n
    if n == 0:
        return True
    coroots = Lattice.standard(n)
    return all(coroots.contains([(q - 1) * x for x in iota(a, datum.p)]) for a in prime_to_p_part(datum))
