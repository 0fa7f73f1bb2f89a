"""Verification suites behind `csplit verify`.

Each suite expands into a list of cases (plain tuples, so they can be sent
to worker processes). A case returns the instances it checked; a
VerificationError, or any unexpected exception, becomes a failure record
instead of stopping the run.
Results are aggregated in case order, so reports do not depend on --jobs.
"""

import random
from dataclasses import dataclass, field
from multiprocessing import Pool
from typing import Callable

from core.config import get_oracle_limit
from core.errors import InvalidArgumentError, VerificationError
from models.braid import BraidWord, lift_weyl
from models.centralizer import SemisimpleClass, alcove_points, brute_force_w_of_s, invariant_factors_of_a_w
from models.frobenius import FrobeniusAction, centralizer_F_stable, f_stable_splitting, iota_is_equivariant
from models.lattice import format_vector
from models.lifting import (component_datum, flat_lift, flat_lift_generic, splitting_certificate, type_a_checks,
                            type_b_checks, type_d_even_checks, type_d_odd_checks, type_e6_checks, type_e7_checks)
from models.rootdata import CartanType, parse_datum, standard_isogenies
from models.symplectic import check_braid_relations, check_type_c_square
from models.tits import adams_vogan, involution_torus
from models.types import SuiteDocument
from models.weyl import enumerate_weyl, weyl_group_order

CATALOG = (
    ('A', 1), ('A', 2), ('A', 3), ('A', 4), ('A', 5), ('A', 6), ('A', 7),
    ('B', 2), ('B', 3), ('B', 4),
    ('C', 2), ('C', 3), ('C', 4),
    ('D', 4), ('D', 5), ('D', 6),
    ('E', 6), ('E', 7), ('E', 8),
    ('F', 4), ('G', 2),
)

EXHAUSTIVE_RANK = 4
RANDOM_TYPES = (('D', 6), ('E', 6), ('E', 7))
RANDOM_WORDS = 1000
RANDOM_LENGTH = 30
ORACLE_ORDER = 51840
MAX_DENOMINATOR = 4
ODD_Q = (3, 5, 7, 9, 27)
EVEN_Q = (2, 4, 8)
DEFAULT_MAX_RANK = 8

Case = tuple


@dataclass
class SuiteResult:
    name: str
    passed: bool = True
    count: int = 0
    failures: list[dict] = field(default_factory=list)
    instances: list[dict] = field(default_factory=list)

    def to_document(self) -> SuiteDocument:
        return {
            'name': self.name,
            'passed': self.passed,
            'count': self.count,
            'failures': self.failures,
            'instances': self.instances,
        }


def _catalog(max_rank: int) -> list[tuple[str, int]]:
    return [(family, rank) for family, rank in CATALOG if rank <= max_rank]


def _isogeny_labels(family: str, rank: int) -> list[str]:
    isogenies = standard_isogenies(CartanType(((family, rank),)))
    data = [isogenies['sc']] + isogenies['intermediate']
    if isogenies['ad'] != isogenies['sc']:
        data.append(isogenies['ad'])
    return [d.label for d in data]


# ===== adams-vogan =====

def _adams_vogan_cases(max_rank: int, seed: int) -> list[Case]:
    cases = [('adams-vogan', family, rank, 'exhaustive', seed)
             for family, rank in _catalog(min(max_rank, EXHAUSTIVE_RANK))]
    cases += [('adams-vogan', family, rank, 'random', seed)
              for family, rank in RANDOM_TYPES if rank <= max_rank]
    return cases


def random_signed_word(rng: random.Random, rank: int, max_length: int) -> BraidWord:
    length = rng.randint(0, max_length)
    return BraidWord(tuple((rng.randrange(rank), rng.choice((1, -1))) for _ in range(length)))


def _adams_vogan_case(case: Case) -> list[dict]:
    _, family, rank, mode, seed = case
    datum = component_datum(family, rank)
    if mode == 'exhaustive':
        words = [lift_weyl(w) for w in enumerate_weyl(datum, get_oracle_limit())]
    else:
        rng = random.Random(f"{seed}:{family}{rank}")
        words = [random_signed_word(rng, rank, RANDOM_LENGTH) for _ in range(RANDOM_WORDS)]
    for b in words:
        adams_vogan(datum, b)
    return [{'datum': datum.label, 'mode': mode, 'words': len(words)}]


# ===== involution =====

def _involution_cases(max_rank: int, seed: int) -> list[Case]:
    return [('involution', family, rank) for family, rank in _catalog(min(max_rank, EXHAUSTIVE_RANK))]


def _involution_case(case: Case) -> list[dict]:
    _, family, rank = case
    datum = component_datum(family, rank)
    instances = []
    for mask in range(1 << rank):
        subset = [i for i in range(rank) if mask >> i & 1]
        torus = involution_torus(datum, subset)
        instances.append({'datum': datum.label, 'subset': [i + 1 for i in subset], 'torus': format_vector(torus)})
    return instances


# ===== flat =====

def _flat_cases(max_rank: int, seed: int) -> list[Case]:
    return [('flat', family, rank) for family, rank in _catalog(max_rank)]


def _flat_case(case: Case) -> list[dict]:
    _, family, rank = case
    datum = component_datum(family, rank)
    lift = flat_lift(family, rank)
    generic = flat_lift_generic(family, rank)
    checks = ['flat-lift', 'generic-flat-lift']
    if family == 'A':
        rho_in_y = datum.lattice.contains(datum.rho_check())
        if rho_in_y != (rank % 2 == 0):
            raise VerificationError('a-rho-parity', {'datum': datum.label})
        checks.append('a-rho-parity')
    if (family, rank) == ('E', 7):
        checks += type_e7_checks()
    return [{
        'datum': datum.label,
        'provenance': list(lift.provenance),
        'generic_provenance': list(generic.provenance),
        'checks': checks,
    }]


# ===== braid =====

def _braid_cases(max_rank: int, seed: int) -> list[Case]:
    cases = [('braid', 'A', rank) for rank in range(1, 6) if rank <= max_rank]
    cases += [('braid', 'B', rank) for rank in range(2, 5) if rank <= max_rank]
    cases += [('braid', 'D', rank) for rank in (4, 5, 6, 7) if rank <= max_rank]
    return cases


def _braid_case(case: Case) -> list[dict]:
    _, family, rank = case
    if family == 'A':
        checks = type_a_checks(rank)
    elif family == 'B':
        checks = type_b_checks(rank)
    elif rank % 2 == 0:
        checks = type_d_even_checks(rank)
    else:
        checks = type_d_odd_checks(rank)
    return [{'datum': f"{family}{rank}:sc", 'checks': checks}]


def _e6_braid_cases(max_rank: int, seed: int) -> list[Case]:
    return [('e6-braid',)] if max_rank >= 6 else []


def _e6_braid_case(case: Case) -> list[dict]:
    return [{'datum': 'E6:sc', 'checks': type_e6_checks()}]


# ===== theorem1 =====

def _theorem1_cases(max_rank: int, seed: int) -> list[Case]:
    return [('theorem1', label) for family, rank in _catalog(max_rank) for label in _isogeny_labels(family, rank)]


def _theorem1_case(case: Case) -> list[dict]:
    _, label = case
    datum = parse_datum(label)
    use_oracle = weyl_group_order(datum.cartan_type) <= min(ORACLE_ORDER, get_oracle_limit())
    instances = []
    for point in alcove_points(datum, MAX_DENOMINATOR):
        s = SemisimpleClass.create(datum, point)
        certificate = splitting_certificate(s)
        instance = {
            'datum': label,
            'lambda': format_vector(point),
            'a_g_s': invariant_factors_of_a_w(certificate.normalized, certificate.a_w_s),
            'oracle': use_oracle,
        }
        if use_oracle:
            oracle = brute_force_w_of_s(certificate.normalized)
            if (oracle.quotient_order != len(certificate.a_w_s)
                    or oracle.invariant_factors != instance['a_g_s']):
                raise VerificationError('oracle-agreement', {
                    **instance,
                    'w_s': oracle.w_s_order,
                    'w0_s': oracle.w0_s_order,
                    'oracle_factors': oracle.invariant_factors,
                })
        instances.append(instance)
    return instances


# ===== type-c-matrix =====

def _type_c_cases(max_rank: int, seed: int) -> list[Case]:
    return [('type-c-matrix', rank) for rank in (2, 3, 4) if rank <= max_rank]


def _type_c_case(case: Case) -> list[dict]:
    _, rank = case
    check_braid_relations(rank)
    square = check_type_c_square(rank)
    return [{'datum': f"C{rank}:sc", 'square_sign': int(square[0, 0])}]


# ===== theorem2 =====

def _theorem2_cases(max_rank: int, seed: int) -> list[Case]:
    cases = [('theorem2', label, q) for _, label in _theorem1_cases(max_rank, seed) for q in ODD_Q + EVEN_Q]
    if max_rank >= 2:
        cases.append(('theorem2', 'A2:sc', 'iota-control'))
    return cases


def _theorem2_case(case: Case) -> list[dict]:
    _, label, q = case
    datum = parse_datum(label)
    if q == 'iota-control':
        # iota does not commute with F for A2 sc and q = 2; the check must notice
        if iota_is_equivariant(datum, 2):
            raise VerificationError('iota-equivariance-control', {'datum': label, 'q': 2})
        return [{'datum': label, 'q': 2, 'iota_equivariant': False}]

    F = FrobeniusAction(q)
    stable = skipped = 0
    for point in alcove_points(datum, MAX_DENOMINATOR):
        s = SemisimpleClass.create(datum, point)
        if not centralizer_F_stable(s, F):
            skipped += 1
            continue
        f_stable_splitting(s, F)
        stable += 1
    return [{'datum': label, 'q': q, 'f_stable': stable, 'not_f_stable': skipped}]


# ===== Registry and runner =====

SUITES: dict[str, tuple[Callable[[int, int], list[Case]], Callable[[Case], list[dict]]]] = {
    'adams-vogan': (_adams_vogan_cases, _adams_vogan_case),
    'involution': (_involution_cases, _involution_case),
    'flat': (_flat_cases, _flat_case),
    'braid': (_braid_cases, _braid_case),
    'e6-braid': (_e6_braid_cases, _e6_braid_case),
    'theorem1': (_theorem1_cases, _theorem1_case),
    'type-c-matrix': (_type_c_cases, _type_c_case),
    'theorem2': (_theorem2_cases, _theorem2_case),
}


def resolve_suites(names: list[str]) -> list[str]:
    """Expand 'all' and validate names, keeping registry order.

    Raises:
        InvalidArgumentError: For an unknown suite name
    """
    if not names or 'all' in names:
        return list(SUITES)
    for name in names:
        if name not in SUITES:
            raise InvalidArgumentError(f"Invalid suite: '{name}'. Expected one of: all, {', '.join(SUITES)}")
    return [name for name in SUITES if name in names]


def run_case(case: Case) -> tuple[list[dict], dict | None]:
    """Run one case; a failed identity or any other error is returned, not raised."""
    _, check = SUITES[case[0]]
    try:
        return check(case), None
    except VerificationError as e:
        return [], {'identity': e.identity, 'instance': e.instance, 'case': list(case[1:])}
    except Exception as e:
        return [], {'identity': type(e).__name__, 'instance': {'error': str(e)}, 'case': list(case[1:])}


def run_suites(names: list[str], max_rank: int = DEFAULT_MAX_RANK, seed: int = 0,
               jobs: int = 1) -> list[SuiteResult]:
    """Run the named suites and aggregate in case order.

    Args:
        names: Suite names, or ['all']
        max_rank: Skip catalog types of larger rank
        seed: Seed for the randomised words
        jobs: Worker processes (1 runs in-process)
    """
    selected = resolve_suites(names)
    cases = [case for name in selected for case in SUITES[name][0](max_rank, seed)]
    if jobs > 1 and len(cases) > 1:
        with Pool(jobs) as pool:
            outcomes = pool.map(run_case, cases, chunksize=1)
    else:
        outcomes = [run_case(case) for case in cases]

    results = {name: SuiteResult(name) for name in selected}
    for case, (instances, failure) in zip(cases, outcomes):
        result = results[case[0]]
        result.instances.extend(instances)
        result.count += sum(i.get('words', 1) for i in instances)
        if failure is not None:
            result.failures.append(failure)
            result.passed = False
    return [results[name] for name in selected]
