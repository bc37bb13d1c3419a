"""
Print the pair set P_n.

Usage:
    python manage.py pairs --n 1 --count
    python manage.py pairs --n 2 > p2.tsv
    python manage.py pairs --n 3 --audit
"""
from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from apps.pair_sets.serializers import format_pair_set
from apps.pair_sets.services import audit_pair_set, generate_pair_set
from utils.decorators import domain_errors_as_command_errors
from utils.exceptions import EXIT_VERDICT_FAILURE


class Command(BaseCommand):
    help = 'Generate the recursive pair set P_n'

    def add_arguments(self, parser):
        parser.add_argument('--n', type=int, required=True, help='Level of the pair set')
        parser.add_argument('--rank', type=int, default=settings.CONCORDIA_DEFAULT_RANK)
        parser.add_argument('--count', action='store_true', help='Print only the number of pairs')
        parser.add_argument(
            '--audit',
            action='store_true',
            help='Check every component lies in F^(n); exit 1 on any failure'
        )

    @domain_errors_as_command_errors
    def handle(self, *args, **options):
        pair_set = generate_pair_set(options['n'], options['rank'])

        if options['audit']:
            audit = audit_pair_set(pair_set)
            self.stdout.write(
                f"level={audit.level} checked={audit.checked} failures={len(audit.failures)}"
            )
            if not audit.passed:
                raise CommandError('pair set audit failed', returncode=EXIT_VERDICT_FAILURE)
            return

        if options['count']:
            self.stdout.write(str(len(pair_set)))
            return

        self.stdout.write(format_pair_set(pair_set), ending='')
