"""Type definitions for component-split.

TypedDicts for the JSON documents the CLI writes. Rationals are always
"p/q" strings and Weyl words are 1-based node lists.
"""

from typing import TypedDict


class GeneratorDocument(TypedDict):
    """One cyclic generator of A_0."""
    weyl_word: list[int]
    torus_class: list[str]
    order: int


class CertificateDocument(TypedDict):
    generators: list[GeneratorDocument]
    checks: list[str]


class ConjugatorDocument(TypedDict):
    weyl_word: list[int]
    translation: list[str]


class SubsystemDocument(TypedDict):
    """Type of Phi(s) and the order of W^0(s)."""
    type: str
    order: int
    basis: list[list[int]]


# 'lambda' is a keyword, hence the functional syntax
CentralizerDocument = TypedDict('CentralizerDocument', {
    'version': int,
    'datum': str,
    'lambda': list[str],
    'projected': bool,
    'normalized': list[str],
    'conjugator': ConjugatorDocument,
    'phi_s': int,
    'w0s': SubsystemDocument,
    'a_g_s': list[int],
    'certificate': CertificateDocument,
}, total=False)


class DescribeDocument(TypedDict):
    version: int
    datum: str
    type: str
    roots: int
    weyl_order: int
    connection_index: int
    a: list[int]
    a_g: list[int]
    minuscule_nodes: list[int]
    rho_check: list[str]


FrobeniusDocument = TypedDict('FrobeniusDocument', {
    'version': int,
    'datum': str,
    'lambda': list[str],
    'q': int,
    'centralizer_F_stable': bool,
    'fixed': list[bool],
    'certificate': CertificateDocument,
})


class SuiteDocument(TypedDict):
    """One verification suite: counts plus every instance checked."""
    name: str
    passed: bool
    count: int
    failures: list[dict]
    instances: list[dict]


class VerifyDocument(TypedDict):
    version: int
    seed: int
    max_rank: int
    passed: bool
    suites: list[SuiteDocument]
