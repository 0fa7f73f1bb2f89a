"""JSON documents for the CLI.

Every document carries SCHEMA_VERSION, rationals are "p/q" strings and Weyl
words are 1-based. Nothing here depends on time or ordering of dict
insertion: callers dump with sort_keys=True.
"""

import json

from core.config import SCHEMA_VERSION
from models.centralizer import CentralizerData, SemisimpleClass
from models.frobenius import FStableSplitting
from models.fundgroup import a_sub_G, fundamental_group, group_invariants
from models.lattice import format_vector
from models.lifting import SplittingCertificate
from models.rootdata import RootDatum, minuscule_coweights
from models.types import (CentralizerDocument, CertificateDocument, DescribeDocument, FrobeniusDocument,
                          GeneratorDocument, SubsystemDocument)
from models.utils import one_based
from models.weyl import weyl_group_order


def dumps(document: dict) -> str:
    """Canonical serialisation: sorted keys, two-space indent, no trailing spaces."""
    return json.dumps(document, indent=2, sort_keys=True)


def describe_document(datum: RootDatum) -> DescribeDocument:
    group = fundamental_group(datum)
    return {
        'version': SCHEMA_VERSION,
        'datum': datum.label,
        'type': str(datum.cartan_type),
        'roots': len(datum.roots),
        'weyl_order': weyl_group_order(datum.cartan_type),
        'connection_index': datum.connection_index,
        'a': group_invariants(datum.system, list(group)),
        'a_g': group_invariants(datum.system, a_sub_G(datum)),
        'minuscule_nodes': [j + 1 for j, _ in minuscule_coweights(datum)],
        'rho_check': format_vector(datum.rho_check()),
    }


def certificate_document(certificate: SplittingCertificate) -> CertificateDocument:
    generators: list[GeneratorDocument] = [
        {
            'weyl_word': one_based(g.image.weyl.reduced_word),
            'torus_class': format_vector(g.image.torus),
            'order': g.order,
        }
        for g in certificate.generators
    ]
    return {'generators': generators, 'checks': list(certificate.checks)}


def centralizer_document(s: SemisimpleClass, data: CentralizerData,
                         certificate: SplittingCertificate | None = None) -> CentralizerDocument:
    w0s: SubsystemDocument = {
        'type': str(data.w0s_type),
        'order': data.w0s_order,
        'basis': [list(r.coords) for r in data.basis],
    }
    document: CentralizerDocument = {
        'version': SCHEMA_VERSION,
        'datum': s.datum.label,
        'lambda': format_vector(s.lam),
        'projected': s.projected,
        'normalized': format_vector(data.normalized.lam),
        'conjugator': {
            'weyl_word': one_based(data.conjugator.weyl.reduced_word),
            'translation': format_vector(data.conjugator.translation),
        },
        'phi_s': len(data.phi_s),
        'w0s': w0s,
        'a_g_s': list(data.a_w_invariants),
    }
    if certificate is not None:
        document['certificate'] = certificate_document(certificate)
    return document


def frobenius_document(splitting: FStableSplitting) -> FrobeniusDocument:
    certificate = splitting.certificate
    document = certificate_document(certificate)
    document['checks'] = document['checks'] + list(splitting.checks)
    return {
        'version': SCHEMA_VERSION,
        'datum': certificate.datum.label,
        'lambda': format_vector(certificate.original.lam),
        'q': splitting.frobenius.q,
        'centralizer_F_stable': True,
        'fixed': list(splitting.fixed),
        'certificate': document,
    }
