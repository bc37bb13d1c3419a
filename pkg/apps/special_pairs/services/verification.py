"""
Certificate re-verification.

A certificate is accepted only if it is internally consistent and
regenerating it from its recorded map and level reproduces its canonical
text exactly.
"""
from typing import Union
import logging

from apps.pair_sets.services import successor_for_case
from apps.free_words.services import generator
from apps.special_pairs.services.certificate import SpecialPairCertificate
from apps.special_pairs.services.selector import classify_case, select_special_pair
from utils.exceptions import Case4Error, CertificateError, SolutionMapError

logger = logging.getLogger(__name__)


def check_consistency(cert: SpecialPairCertificate):
    """
    Check the recorded fields against each other without regenerating.

    Raises:
        CertificateError: On the first inconsistency found
    """
    if len(cert.levels) != cert.n - 1:
        raise CertificateError(f"Expected {cert.n - 1} level records, found {len(cert.levels)}")
    if not cert.base.d4_zero or not cert.final.d4_zero:
        raise CertificateError("Property 1 fails: a pair involves x4")
    if any(e.is_zero for e in cert.base.evidence):
        raise CertificateError("Base evidence vanishes")

    pair = cert.base.pair
    x = generator(1, pair.rank)
    for expected_k, record in enumerate(cert.levels, start=1):
        if record.k != expected_k:
            raise CertificateError(f"Level record {record.k} out of order")
        if record.pair != pair:
            raise CertificateError(f"Level {record.k}: pair does not continue the chain")
        try:
            case = classify_case(record.y_trivial, record.z_trivial, record.k)
        except Case4Error as exc:
            raise CertificateError(f"Level {record.k} records both images trivial") from exc
        if case != record.case:
            raise CertificateError(f"Level {record.k}: case {record.case} contradicts its verdicts")
        if record.successor != successor_for_case(pair, case, x):
            raise CertificateError(f"Level {record.k}: successor is not the case {case} pair")
        if any(e.is_zero for e in record.evidence):
            raise CertificateError(f"Level {record.k}: evidence element is zero")
        if not all(v.is_zero for v in record.vanishing):
            raise CertificateError(f"Level {record.k}: vanishing coefficient is nonzero")
        pair = record.successor

    if cert.final.k != cert.n or cert.final.pair != pair:
        raise CertificateError("Final pair does not end the chain")
    if cert.relation.nonzero == cert.relation.coordinate.is_zero:
        raise CertificateError("Relation verdict contradicts its coordinate")


def verify_certificate(cert: Union[str, SpecialPairCertificate]) -> SpecialPairCertificate:
    """
    Verify a certificate given as text or as parsed records.

    Raises:
        CertificateError: If parsing, consistency or regeneration fails
    """
    from apps.special_pairs.serializers import format_certificate, parse_certificate

    if isinstance(cert, str):
        text = cert
        cert = parse_certificate(text)
    else:
        text = format_certificate(cert)

    check_consistency(cert)
    try:
        regenerated = select_special_pair(cert.solution_map, cert.n)
    except (SolutionMapError, Case4Error) as exc:
        raise CertificateError(f"Recorded map no longer yields a certificate: {exc}") from exc

    if format_certificate(regenerated) != format_certificate(cert):
        logger.warning(
            "Certificate differs from regenerated certificate",
            extra={'level': cert.n, 'target_rank': cert.solution_map.target_rank}
        )
        raise CertificateError("Certificate does not match its regeneration")
    if text.strip() != format_certificate(regenerated).strip():
        raise CertificateError("Certificate text is not canonical")
    return cert
