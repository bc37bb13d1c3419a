"""
Decorators shared by the management commands.

`domain_errors_as_command_errors` turns a domain exception raised inside a
command's `handle` into a `CommandError` carrying the CLI exit status.
"""
from functools import wraps
import logging

from utils.exceptions import ConcordiaError, as_command_error

logger = logging.getLogger(__name__)


def domain_errors_as_command_errors(handle):
    """
    Wrap BaseCommand.handle.

    Usage:
        class Command(BaseCommand):
            @domain_errors_as_command_errors
            def handle(self, *args, **options):
                ...
    """
    @wraps(handle)
    def wrapper(self, *args, **options):
        try:
            return handle(self, *args, **options)
        except ConcordiaError as exc:
            raise as_command_error(exc) from exc
        except (ValueError, OSError) as exc:
            logger.warning(
                f"Usage error in {self.__class__.__module__}: {exc}",
                extra={'error_type': exc.__class__.__name__}
            )
            raise as_command_error(ConcordiaError(str(exc))) from exc
    return wrapper
