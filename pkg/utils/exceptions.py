from django.core.management.base import CommandError
import logging

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERDICT_FAILURE = 1
EXIT_USAGE_ERROR = 2
EXIT_RESOURCE_CAP = 3


class ConcordiaError(Exception):
    """Base class for every domain error raised by the toolkit."""
    exit_code = EXIT_USAGE_ERROR
    default_detail = 'Computation failed.'
    default_code = 'concordia_error'

    def __init__(self, detail: str = None):
        self.detail = detail or self.default_detail
        super().__init__(self.detail)


class InvalidWordError(ConcordiaError):
    """Exception raised when a word has an out-of-range index or bad syntax."""
    default_detail = 'Invalid word.'
    default_code = 'invalid_word'


class RankMismatchError(ConcordiaError):
    """Exception raised when words from free groups of different rank meet."""
    default_detail = 'Words belong to free groups of different rank.'
    default_code = 'rank_mismatch'


class LevelMismatchError(ConcordiaError):
    """Exception raised when group-ring elements live at different quotient levels."""
    default_detail = 'Group-ring elements live at different quotient levels.'
    default_code = 'level_mismatch'


class ResourceCapExceeded(ConcordiaError):
    """
    Exception raised when a computation would exceed a configured cap.

    Signals a desk-scale limit, never a wrong answer.
    """
    exit_code = EXIT_RESOURCE_CAP
    default_detail = 'Resource cap exceeded.'
    default_code = 'resource_cap'

    def __init__(self, cap: str, limit: int, requested: int):
        self.cap = cap
        self.limit = limit
        self.requested = requested
        super().__init__(
            f"{cap} cap exceeded: requested {requested}, limit {limit}. "
            f"Raise CONCORDIA_MAX_{cap.upper()} to allow it."
        )


class InvalidSeifertMatrixError(ConcordiaError):
    """Exception raised when V - V^T is not unimodular or V has odd size."""
    default_detail = 'Matrix is not a Seifert matrix.'
    default_code = 'invalid_seifert'


class InvalidFormError(ConcordiaError):
    """Exception raised for non-Hermitian forms, points off the circle, degenerate determinants."""
    default_detail = 'Invalid Hermitian form.'
    default_code = 'invalid_form'


class SolutionMapError(ConcordiaError):
    """Exception raised when a solution map violates condition 1 or is malformed."""
    exit_code = EXIT_VERDICT_FAILURE
    default_detail = 'Solution map does not satisfy condition 1.'
    default_code = 'solution_map'


class Case4Error(ConcordiaError):
    """Exception raised when both pair images are trivial at some level."""
    exit_code = EXIT_VERDICT_FAILURE
    default_detail = 'Both images are trivial.'
    default_code = 'case4'

    def __init__(self, k: int):
        self.k = k
        super().__init__(
            f"CASE4({k}): both images are trivial in G/G^({k + 1}); "
            f"the map is not an algebraic solution at level {k}."
        )


class CertificateError(ConcordiaError):
    """Exception raised when a certificate cannot be parsed or fails re-verification."""
    exit_code = EXIT_VERDICT_FAILURE
    default_detail = 'Certificate is invalid.'
    default_code = 'certificate_invalid'


class PlanError(ConcordiaError):
    """Exception raised for malformed plan inputs."""
    default_detail = 'Invalid plan input.'
    default_code = 'plan_error'


def exit_code_for(exc: Exception) -> int:
    """Map an exception to the CLI exit status."""
    if isinstance(exc, ConcordiaError):
        return exc.exit_code
    if isinstance(exc, CommandError):
        return exc.returncode
    return EXIT_USAGE_ERROR


def as_command_error(exc: ConcordiaError) -> CommandError:
    """
    Wrap a domain error for a management command.

    Logs the failure with its code so batch runs leave a trace.
    """
    logger.error(
        f"Command failed: {exc.__class__.__name__}",
        extra={'code': exc.default_code, 'detail': exc.detail, 'exit_code': exc.exit_code}
    )
    return CommandError(exc.detail, returncode=exc.exit_code)
