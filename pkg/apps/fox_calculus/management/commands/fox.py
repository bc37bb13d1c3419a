"""
Print a right-multiplied Fox derivative.

Usage:
    python manage.py fox --i 2 --word "[x1,x2]"
    python manage.py fox --i 4 --word "[x1,x2][x3,x4]" --level 2
    python manage.py fox --i 2 --word "[x1,x2]" --expanded
"""
from django.conf import settings
from django.core.management.base import BaseCommand

from apps.free_words.serializers import parse_word
from apps.fox_calculus.serializers import format_ring
from apps.fox_calculus.services import as_level, fox_derivative
from utils.decorators import domain_errors_as_command_errors


class Command(BaseCommand):
    help = 'Print ∂_i w in Z[F/F^(level)] (right-multiplied convention)'

    def add_arguments(self, parser):
        parser.add_argument('--i', type=int, required=True, help='Generator index')
        parser.add_argument('--word', required=True, help='Word in the word grammar')
        parser.add_argument('--level', default='inf', help="Quotient level k or 'inf' (default)")
        parser.add_argument('--rank', type=int, default=settings.CONCORDIA_DEFAULT_RANK)
        parser.add_argument(
            '--expanded', action='store_true',
            help='Print every word as its reduced letter list'
        )

    @domain_errors_as_command_errors
    def handle(self, *args, **options):
        w = parse_word(options['word'], options['rank'])
        derivative = fox_derivative(options['i'], w, as_level(options['level']))
        self.stdout.write(format_ring(derivative, compact=not options['expanded']))
