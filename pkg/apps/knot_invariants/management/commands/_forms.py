"""
Form selection shared by the knot invariant commands.
"""
from pathlib import Path

from django.core.management.base import CommandError

from apps.knot_invariants.serializers import parse_seifert
from apps.knot_invariants.services import lambda_J, lambda_J_flipped
from utils.exceptions import EXIT_USAGE_ERROR


def add_form_arguments(parser, seifert_only: bool = False):
    parser.add_argument('--seifert', help='Seifert matrix file (comma-separated rows)')
    if not seifert_only:
        parser.add_argument('--lambda-j', action='store_true', help='Use the intersection form λ_J')
        parser.add_argument(
            '--lambda-j-flipped',
            action='store_true',
            help='Use λ_J with both diagonal entries negated'
        )


def load_seifert(options):
    if not options.get('seifert'):
        raise CommandError('--seifert is required', returncode=EXIT_USAGE_ERROR)
    return parse_seifert(Path(options['seifert']).read_text())


def load_form(options):
    chosen = [name for name in ('seifert', 'lambda_j', 'lambda_j_flipped') if options.get(name)]
    if len(chosen) != 1:
        raise CommandError(
            'Give exactly one of --seifert, --lambda-j, --lambda-j-flipped',
            returncode=EXIT_USAGE_ERROR
        )
    if options.get('lambda_j'):
        return lambda_J()
    if options.get('lambda_j_flipped'):
        return lambda_J_flipped()
    return load_seifert(options)
