"""Lifting A to the Tits group and splitting C_G(s) = C_G(s)^0 x| A_0.

The pipeline:

    flat_lift / flat_lift_generic   commuting images of the generators of A
                                    for one simply connected component,
                                    satisfying the flat condition
    lift_products                   the same on a product, then projected to
                                    the torus of the given isogeny (tau_1)
    group_lift                      a homomorphism tau_2 on A_G built from a
                                    cyclic decomposition
    splitting_certificate           tau_2 restricted to A_W(s), conjugated
                                    back to the original lambda and checked

Flat condition for a in A of order o: tau(a)^o = iota(a^(o/2)) if o is even,
and tau(a)^o = 1 if o is odd. In characteristic 2 the target is always 1.
"""

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import product
from math import lcm
from typing import Sequence

from core.errors import SearchExhaustedError, VerificationError
from models.braid import BraidWord, braid_equal, lift_weyl, reverse
from models.centralizer import (Conjugator, SemisimpleClass, a_w_of_s, normalize_to_alcove, phi_of_s,
                                positive_roots_of_s)
from models.fundgroup import (FundamentalGroup, FundamentalGroupElement, a_sub_G, fundamental_group,
                              group_invariants, iota)
from models.lattice import RationalVector, format_vector
from models.rootdata import CartanType, RootDatum
from models.tits import (TitsElement, reduce_torus, sigma, sigma_of_word, tits_element_order, tits_identity,
                         tits_inverse, tits_power, torus_element, ts)
from models.weyl import WeylElement, longest_element

SIGMA = 'sigma'
BRAID_WORD = 'braid-word'
TORUS_CORRECTED = 'torus-corrected'


# ===== Flat lifts =====

@dataclass
class FlatLift:
    """Images of the generators of A in N, one per generator of ``fundamental_group(datum)``."""
    datum: RootDatum
    images: tuple[TitsElement, ...]
    provenance: tuple[str, ...]

    @cached_property
    def group(self) -> FundamentalGroup:
        return fundamental_group(self.datum)

    def __call__(self, a: FundamentalGroupElement) -> TitsElement:
        """tau(prod g_i^e_i) = prod tau(g_i)^e_i."""
        result = tits_identity(self.datum)
        for image, e in zip(self.images, a.exponents):
            result = result * tits_power(image, e)
        return result


def component_datum(family: str, rank: int, p: int = 0) -> RootDatum:
    return RootDatum.simply_connected_of(CartanType(((family, rank),)), p)


def flat_target(datum: RootDatum, a: FundamentalGroupElement) -> TitsElement:
    """iota(a^(o/2)) for even order o (outside characteristic 2), else 1."""
    order = a.order
    if order % 2 or datum.p == 2:
        return tits_identity(datum)
    half = fundamental_group(datum).power(a, order // 2)
    return torus_element(datum, datum.pad(iota(half, datum.p)))


def verify_flat_lift(lift: FlatLift) -> None:
    """Check commutation of the generator images and the flat condition on all of A.

    Raises:
        VerificationError: Naming the first identity that fails
    """
    datum = lift.datum
    for k, x in enumerate(lift.images):
        for y in lift.images[k + 1:]:
            if x * y != y * x:
                raise VerificationError('flat-commuting', {'datum': datum.label})
    for a in lift.group:
        image = lift(a)
        if image.weyl != a.weyl:
            raise VerificationError('flat-projection', {'datum': datum.label, 'element': list(a.exponents)})
        power = tits_power(image, a.order)
        target = flat_target(datum, a)
        if power != target:
            raise VerificationError('flat-condition', {
                'datum': datum.label,
                'element': list(a.exponents),
                'power': format_vector(power.torus),
                'target': format_vector(target.torus),
            })


@lru_cache(maxsize=None)
def flat_lift(family: str, rank: int, p: int = 0) -> FlatLift:
    """The per-type commuting lift of A for a simply connected quasi-simple group.

    sigma works for A, B_odd, D_odd, E6 and E7. In B_even and C_even
    sigma(c)^2 is trivial where iota(c) is not; all of B_even and C take the
    smallest torus correction of sigma(c) that works.
    Type D_even uses ts(c b) and ts(c a), which commute where sigma(a) and
    sigma(b) do not.

    Raises:
        VerificationError: If the chosen lift does not satisfy the flat condition
    """
    datum = component_datum(family, rank, p)
    group = fundamental_group(datum)
    generators = [g.weyl for g in group.generators]
    if not generators:
        lift = FlatLift(datum, (), ())
    elif p == 2:
        lift = FlatLift(datum, tuple(sigma(datum, w) for w in generators), (SIGMA,) * len(generators))
    elif family == 'C' or (family == 'B' and rank % 2 == 0):
        lift = FlatLift(datum, (_half_corrected_image(datum, group),), (TORUS_CORRECTED,))
    elif family == 'D' and rank % 2 == 0:
        a, b = generators
        lift_a, lift_b, lift_c = lift_weyl(a), lift_weyl(b), lift_weyl(a * b)
        lift = FlatLift(datum, (ts(datum, lift_c * lift_b), ts(datum, lift_c * lift_a)), (BRAID_WORD,) * 2)
    else:
        lift = FlatLift(datum, tuple(sigma(datum, w) for w in generators), (SIGMA,) * len(generators))
    verify_flat_lift(lift)
    return lift


def _half_corrected_image(datum: RootDatum, group: FundamentalGroup) -> TitsElement:
    """t0 * sigma(c) for the lexicographically smallest t0 in (1/2)Q^vee/Q^vee that works."""
    g = group.generator_element(0)
    sigma_c = sigma(datum, g.weyl)
    square = (sigma_c * sigma_c).torus
    target = flat_target(datum, g).torus
    for digits in product((0, 1), repeat=datum.n):
        t = tuple(Fraction(d, 2) for d in digits)
        total = [a + b + c for a, b, c in zip(t, g.weyl.act_on_coweight(t), square)]
        if reduce_torus(datum, total) == target:
            return torus_element(datum, t) * sigma_c
    raise VerificationError('half-correction', {'datum': datum.label})


# ===== Generic search =====

def _orbit_sum(w: WeylElement, t: Sequence[Fraction], order: int) -> list[Fraction]:
    """sum_{i < order} w^i(t), the torus part of (t sigma(w))^order minus sigma(w)^order."""
    total = [Fraction(0)] * len(t)
    current = tuple(t)
    for _ in range(order):
        total = [a + b for a, b in zip(total, current)]
        current = w.act_on_coweight(current)
    return total


def _candidates(dim: int, exponent: int):
    """(1/2k) Q^vee / Q^vee in lexicographic order, starting at 0."""
    denominator = 2 * exponent
    for digits in product(range(denominator), repeat=dim):
        yield tuple(Fraction(d, denominator) for d in digits)


def _flat_corrections(datum: RootDatum, a: FundamentalGroupElement, exponent: int):
    """Corrections t for which t * sigma(a) satisfies the flat condition on its own."""
    constant = tits_power(sigma(datum, a.weyl), a.order).torus
    target = flat_target(datum, a).torus
    for t in _candidates(datum.n, exponent):
        total = [x + y for x, y in zip(_orbit_sum(a.weyl, t, a.order), constant)]
        if reduce_torus(datum, total) == target:
            yield t


def _corrected(datum: RootDatum, t: RationalVector, w: WeylElement) -> tuple[TitsElement, str]:
    return torus_element(datum, t) * sigma(datum, w), (TORUS_CORRECTED if any(t) else SIGMA)


@lru_cache(maxsize=None)
def flat_lift_generic(family: str, rank: int, p: int = 0) -> FlatLift:
    """Search for a flat lift of the form t * sigma(g) without any per-type recipe.

    Corrections range over (1/2k)Q^vee/Q^vee with k the exponent of A,
    t = 0 first. For two generators (D_even) the commutation condition

        (1 - b) t_a = (1 - a) t_b + (sigma(b)sigma(a) - sigma(a)sigma(b))   mod Y

    is matched with a hash join over the individually valid corrections.

    Raises:
        SearchExhaustedError: If no correction works
    """
    datum = component_datum(family, rank, p)
    group = fundamental_group(datum)
    if not group.generators:
        lift = FlatLift(datum, (), ())
        verify_flat_lift(lift)
        return lift
    exponent = lcm(*(g.order for g in group.generators))

    if len(group.generators) == 1:
        g = group.generator_element(0)
        for t in _flat_corrections(datum, g, exponent):
            image, tag = _corrected(datum, t, g.weyl)
            lift = FlatLift(datum, (image,), (tag,))
            try:
                verify_flat_lift(lift)
            except VerificationError:
                continue
            return lift
        raise SearchExhaustedError('generic-flat-search', {'datum': datum.label})

    ga, gb = group.generator_element(0), group.generator_element(1)
    a, b = ga.weyl, gb.weyl
    offset = [y - x for x, y in zip((sigma(datum, a) * sigma(datum, b)).torus,
                                    (sigma(datum, b) * sigma(datum, a)).torus)]
    buckets: dict[RationalVector, list[RationalVector]] = defaultdict(list)
    for t_a in _flat_corrections(datum, ga, exponent):
        key = reduce_torus(datum, [x - y for x, y in zip(t_a, b.act_on_coweight(t_a))])
        buckets[key].append(t_a)
    for t_b in _flat_corrections(datum, gb, exponent):
        moved = a.act_on_coweight(t_b)
        key = reduce_torus(datum, [x - y + z for x, y, z in zip(t_b, moved, offset)])
        for t_a in buckets.get(key, ()):
            image_a, tag_a = _corrected(datum, t_a, a)
            image_b, tag_b = _corrected(datum, t_b, b)
            lift = FlatLift(datum, (image_a, image_b), (tag_a, tag_b))
            try:
                verify_flat_lift(lift)
            except VerificationError:
                continue
            return lift
    raise SearchExhaustedError('generic-flat-search', {'datum': datum.label})


# ===== Products and tau_1 =====

@dataclass
class ProductLift:
    """A flat lift on the simply connected cover and its projection tau_1 to the given isogeny."""
    datum: RootDatum
    flat: FlatLift

    def tau1(self, a: FundamentalGroupElement) -> TitsElement:
        x = self.flat(a)
        return TitsElement(self.datum, reduce_torus(self.datum, x.torus), x.weyl)


def component_lifts(cartan_type: CartanType, p: int = 0, generic: bool = False) -> list[FlatLift]:
    builder = flat_lift_generic if generic else flat_lift
    return [builder(family, rank, p) for family, rank in cartan_type.components]


def embed_component(sc: RootDatum, offset: int, x: TitsElement) -> TitsElement:
    """Move a Tits element of one component into the product, shifting nodes by offset."""
    torus = [Fraction(0)] * sc.dim
    torus[offset:offset + len(x.torus)] = x.torus
    word = [offset + i for i in x.weyl.reduced_word]
    return torus_element(sc, torus) * sigma_of_word(sc, word)


def lift_products(datum: RootDatum, lifts: list[FlatLift] | None = None, generic: bool = False) -> ProductLift:
    """Combine component lifts into a flat lift of A and project it to Y.

    The flat condition is re-checked on every element of the product A,
    and tau_1(a) is checked to have order o(a) for every a in A_G.

    Raises:
        VerificationError: If either check fails
    """
    sc = datum.simply_connected()
    if lifts is None:
        lifts = component_lifts(datum.cartan_type, datum.p, generic)
    images, provenance = [], []
    for offset, lift in zip(datum.cartan_type.offsets, lifts):
        for x, tag in zip(lift.images, lift.provenance):
            images.append(embed_component(sc, offset, x))
            provenance.append(tag)
    flat = FlatLift(sc, tuple(images), tuple(provenance))
    verify_flat_lift(flat)

    result = ProductLift(datum, flat)
    for a in a_sub_G(datum):
        order = tits_element_order(result.tau1(a))
        if order != a.order:
            raise VerificationError('tau1-order', {
                'datum': datum.label, 'element': list(a.exponents), 'order': order, 'expected': a.order,
            })
    return result


# ===== tau_2 =====

def cyclic_decomposition(group: FundamentalGroup,
                         elements: list[FundamentalGroupElement]) -> list[FundamentalGroupElement]:
    """Generators g_1, ..., g_k of the subgroup with orders its invariant factors.

    Raises:
        VerificationError: If no generator tuple realises the invariant factors
    """
    factors = group_invariants(group.system, elements)
    if not factors:
        return []
    by_order = {d: [a for a in elements if a.order == d] for d in set(factors)}
    for choice in product(*(by_order[d] for d in factors)):
        span = set()
        for exponents in product(*(range(d) for d in factors)):
            w = WeylElement.identity(group.system)
            for g, e in zip(choice, exponents):
                w = w * g.weyl.power(e)
            span.add(w.key)
        if len(span) == len(elements):
            return list(choice)
    raise VerificationError('cyclic-decomposition', {'factors': factors})


@dataclass
class GroupLift:
    """tau_2: a homomorphism from a subgroup of A_G into N."""
    datum: RootDatum
    generators: list[FundamentalGroupElement]
    orders: list[int]
    images: dict[bytes, TitsElement] = field(repr=False)

    def __call__(self, a: FundamentalGroupElement) -> TitsElement:
        return self.images[a.weyl.key]

    def __len__(self) -> int:
        return len(self.images)


def group_lift(lift: ProductLift, elements: list[FundamentalGroupElement] | None = None) -> GroupLift:
    """tau_2(prod g_i^m_i) = prod tau_1(g_i)^m_i over a cyclic decomposition.

    Raises:
        VerificationError: If tau_2 is not a homomorphism section
    """
    datum = lift.datum
    group = fundamental_group(datum)
    elements = a_sub_G(datum) if elements is None else elements
    generators = cyclic_decomposition(group, elements)
    orders = [g.order for g in generators]
    base = [lift.tau1(g) for g in generators]

    images: dict[bytes, TitsElement] = {}
    for exponents in product(*(range(d) for d in orders)):
        x = tits_identity(datum)
        for image, e in zip(base, exponents):
            x = x * tits_power(image, e)
        images[x.weyl.key] = x

    for a in elements:
        if a.weyl.key not in images:
            raise VerificationError('tau2-section', {'datum': datum.label, 'element': list(a.exponents)})
        for b in elements:
            if images[(a.weyl * b.weyl).key] != images[a.weyl.key] * images[b.weyl.key]:
                raise VerificationError('tau2-homomorphism', {
                    'datum': datum.label, 'pair': [list(a.exponents), list(b.exponents)],
                })
    return GroupLift(datum, generators, orders, images)


# ===== Splitting certificate =====

CERTIFICATE_CHECKS = (
    'section', 'injective', 'homomorphism', 'weyl-stabiliser', 'positive-system', 'torus-order', 'order',
)


@dataclass
class CertificateGenerator:
    element: FundamentalGroupElement
    image: TitsElement
    order: int


@dataclass
class SplittingCertificate:
    """A_0 inside N for the original lambda, with the checks it passed."""
    original: SemisimpleClass
    normalized: SemisimpleClass
    conjugator: Conjugator
    a_w_s: list[FundamentalGroupElement]
    generators: list[CertificateGenerator]
    section: dict[bytes, TitsElement]
    checks: list[str] = field(default_factory=list)

    @property
    def datum(self) -> RootDatum:
        return self.original.datum

    @property
    def elements(self) -> list[TitsElement]:
        return list(self.section.values())

    def __len__(self) -> int:
        return len(self.section)


def splitting_certificate(s: SemisimpleClass, lift: ProductLift | None = None,
                          generic: bool = False) -> SplittingCertificate:
    """Build and verify A_0 with C_G(s) = C_G(s)^0 x| A_0.

    Raises:
        VerificationError: Naming the identity that failed
    """
    datum = s.datum
    normalized, conjugator = normalize_to_alcove(s)
    a_w = a_w_of_s(normalized)
    lift = lift or lift_products(datum, generic=generic)
    tau2 = group_lift(lift)

    g = sigma(datum, conjugator.weyl)
    g_inverse = tits_inverse(g)
    section = {}
    for a in a_w:
        x = g_inverse * tau2(a) * g
        section[x.weyl.key] = x

    generators = []
    for a in cyclic_decomposition(fundamental_group(datum), a_w):
        image = g_inverse * tau2(a) * g
        generators.append(CertificateGenerator(a, image, tits_element_order(image)))

    certificate = SplittingCertificate(s, normalized, conjugator, a_w, generators, section)
    verify_certificate(certificate)
    return certificate


def verify_certificate(certificate: SplittingCertificate) -> None:
    """Run every certificate check, recording the names that passed.

    Raises:
        VerificationError: At the first failed check
    """
    s = certificate.original
    datum = s.datum
    w = certificate.conjugator.weyl
    w_inverse = w.inverse
    instance = {'datum': datum.label, 'lambda': format_vector(s.lam)}
    checks = certificate.checks
    checks.clear()

    def fail(name: str) -> None:
        raise VerificationError(name, instance)

    expected = {(w_inverse * a.weyl * w).key for a in certificate.a_w_s}
    if set(certificate.section) != expected or any(k != x.weyl.key for k, x in certificate.section.items()):
        fail('section')
    checks.append('section')

    if len(certificate.section) != len(certificate.a_w_s):
        fail('injective')
    checks.append('injective')

    for x in certificate.elements:
        for y in certificate.elements:
            product_ = x * y
            if certificate.section.get(product_.weyl.key) != product_:
                fail('homomorphism')
    checks.append('homomorphism')

    for x in certificate.elements:
        moved = x.weyl.act_on_coweight(s.lam)
        if not datum.lattice.contains([a - b for a, b in zip(moved, s.lam)]):
            fail('weyl-stabiliser')
    checks.append('weyl-stabiliser')

    transported = {w_inverse.act_on_root_coords(r) for r in positive_roots_of_s(certificate.normalized)}
    phi = {r.coords for r in phi_of_s(s)}
    if not transported <= phi:
        fail('positive-system')
    for x in certificate.elements:
        if any(x.weyl.act_on_root_coords(r) not in transported for r in transported):
            fail('positive-system')
    checks.append('positive-system')

    exponent = lcm(1, *(g.order for g in fundamental_group(datum).generators))
    for x in certificate.elements:
        if (2 * exponent) % datum.lattice.class_order(x.torus):
            fail('torus-order')
    checks.append('torus-order')

    for gen in certificate.generators:
        if gen.order != gen.element.order:
            fail('order')
    checks.append('order')


# ===== Type-specific identities =====

def _word(nodes: Sequence[int]) -> BraidWord:
    return BraidWord.positive(nodes)


def _require(condition: bool, identity: str, datum: RootDatum) -> str:
    if not condition:
        raise VerificationError(identity, {'datum': datum.label})
    return identity


def type_a_checks(rank: int) -> list[str]:
    """c^(n+1) = w0^2 in the braid group, and rho^vee in Y exactly when n is even."""
    datum = component_datum('A', rank)
    c = fundamental_group(datum).generator_element(0).weyl
    delta = lift_weyl(longest_element(datum))
    done = [_require(braid_equal(datum, lift_weyl(c).power(rank + 1), delta.power(2)), 'a-coxeter-power', datum)]
    rho_in_y = datum.lattice.contains(datum.rho_check())
    done.append(_require(rho_in_y == (rank % 2 == 0), 'a-rho-parity', datum))
    if rank % 2:
        half = [Fraction(i + 1, 2) for i in range(rank)]
        done.append(_require(reduce_torus(datum, datum.rho_check()) == reduce_torus(datum, half),
                             'a-rho-class', datum))
    return done


def type_b_checks(rank: int) -> list[str]:
    """sigma(c)^2 = n alpha_1^vee/2 modulo Y.

    For odd n this is iota(c). For even n it is trivial, and the corrected
    image from flat_lift squares to iota(c) instead.
    """
    datum = component_datum('B', rank)
    g = fundamental_group(datum).generator_element(0)
    square = tits_power(sigma(datum, g.weyl), 2)
    half = [Fraction(rank * int(i == 0), 2) for i in range(rank)]
    done = [_require(square == torus_element(datum, half), 'b-sigma-square', datum)]
    if rank % 2:
        done.append(_require(square.torus == reduce_torus(datum, iota(g)), 'b-iota', datum))
    else:
        corrected = tits_power(flat_lift('B', rank).images[0], 2)
        done.append(_require(corrected.torus == reduce_torus(datum, iota(g)), 'b-corrected-iota', datum))
    return done


def _d_words(rank: int):
    alpha = _word(range(1, rank))
    beta = _word([0] + list(range(2, rank)))
    return alpha, beta


def type_d_even_checks(rank: int) -> list[str]:
    """The braid identities behind tau(a) = ts(c b), tau(b) = ts(c a)."""
    datum = component_datum('D', rank)
    system = datum.system
    group = fundamental_group(datum)
    a, b = group.generator_element(0).weyl, group.generator_element(1).weyl
    c = a * b
    w0 = longest_element(datum)
    done = [_require(c == w0 * longest_element(datum, range(rank - 1)), 'd-vector-generator', datum)]

    alpha, beta = _d_words(rank)
    inner = list(range(2, rank))
    w_i = lift_weyl(longest_element(datum, inner))
    alpha_w, beta_w = alpha.weyl_image(system), beta.weyl_image(system)
    done.append(_require(c == beta_w.inverse * alpha_w == alpha_w.inverse * beta_w, 'd-c-factorisation', datum))

    w_alpha = lift_weyl(longest_element(datum, range(1, rank)))
    w_beta = lift_weyl(longest_element(datum, [0] + inner))
    done.append(_require(braid_equal(datum, w_alpha, w_i * alpha)
                         and braid_equal(datum, w_alpha, reverse(alpha) * w_i), 'd-parabolic-alpha', datum))
    done.append(_require(braid_equal(datum, w_beta, w_i * beta)
                         and braid_equal(datum, w_beta, reverse(beta) * w_i), 'd-parabolic-beta', datum))

    lift_a, lift_b, lift_c = lift_weyl(a), lift_weyl(b), lift_weyl(c)
    done.append(_require(braid_equal(datum, lift_c, reverse(beta) * alpha)
                         and braid_equal(datum, lift_c, reverse(alpha) * beta), 'd-c-braid', datum))
    done.append(_require(braid_equal(datum, lift_c * lift_a * lift_c * lift_b, lift_c * lift_b * lift_c * lift_a),
                         'd-cacb', datum))
    tau_a, tau_b = ts(datum, lift_c * lift_b), ts(datum, lift_c * lift_a)
    done.append(_require(tau_a * tau_b == tau_b * tau_a, 'd-commuting-lifts', datum))
    return done


def type_d_odd_checks(rank: int) -> list[str]:
    """(beta~ a beta~^-1)^2 is reverse-invariant and its ts-image to the 4th is iota(a^2)."""
    datum = component_datum('D', rank)
    group = fundamental_group(datum)
    g = group.generator_element(0)
    _, beta = _d_words(rank)
    beta_tilde = reverse(beta)
    conjugated = beta_tilde * lift_weyl(g.weyl) * beta_tilde.inverse()
    square = conjugated.power(2)
    done = [_require(braid_equal(datum, reverse(square), square), 'd-reverse-invariance', datum)]

    fourth = tits_power(ts(datum, conjugated), 4)
    half = [Fraction(int(i < 2), 2) for i in range(rank)]
    done.append(_require(fourth == torus_element(datum, half), 'd-odd-fourth-power', datum))
    done.append(_require(fourth.torus == reduce_torus(datum, iota(group.power(g, 2))), 'd-odd-iota', datum))
    done.append(_require(tits_power(sigma(datum, g.weyl), 4) == fourth, 'd-odd-sigma', datum))
    return done


def type_e6_checks() -> list[str]:
    """c^3 = w0^2 w_J^-2 with J of type D4, and sigma(c)^3 = 1."""
    datum = component_datum('E', 6)
    c = fundamental_group(datum).generator_element(0).weyl
    delta = lift_weyl(longest_element(datum))
    w_j = lift_weyl(longest_element(datum, [1, 2, 3, 4]))
    done = [_require(braid_equal(datum, lift_weyl(c).power(3), delta.power(2) * w_j.power(-2)), 'e6-braid', datum)]
    done.append(_require(tits_power(sigma(datum, c), 3).is_identity, 'e6-sigma-cube', datum))
    return done


def type_e7_checks() -> list[str]:
    """rho^vee = (alpha_2^vee + alpha_5^vee + alpha_7^vee)/2 = iota(c) modulo Y."""
    datum = component_datum('E', 7)
    g = fundamental_group(datum).generator_element(0)
    half = [Fraction(int(i in (1, 4, 6)), 2) for i in range(7)]
    rho = reduce_torus(datum, datum.rho_check())
    return [
        _require(rho == reduce_torus(datum, half), 'e7-rho-class', datum),
        _require(rho == reduce_torus(datum, iota(g)), 'e7-iota', datum),
        _require(tits_power(sigma(datum, g.weyl), 2).torus == rho, 'e7-sigma-square', datum),
    ]
