"""
Decide membership of a word in the k-th derived subgroup.

Prints `true` or `false`; exits 1 on `false`.

Usage:
    python manage.py member --word "[[x1,x2],[x1,x3]]" --k 2
"""
from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from apps.free_words.serializers import parse_word
from apps.fox_calculus.services import derived_member
from utils.decorators import domain_errors_as_command_errors
from utils.exceptions import EXIT_VERDICT_FAILURE


class Command(BaseCommand):
    help = 'Decide w ∈ F^(k)'

    def add_arguments(self, parser):
        parser.add_argument('--word', required=True, help='Word in the word grammar')
        parser.add_argument('--k', type=int, required=True, help='Derived-series level')
        parser.add_argument('--rank', type=int, default=settings.CONCORDIA_DEFAULT_RANK)

    @domain_errors_as_command_errors
    def handle(self, *args, **options):
        w = parse_word(options['word'], options['rank'])
        member = derived_member(w, options['k'])
        self.stdout.write('true' if member else 'false')
        if not member:
            raise CommandError(f"word is not in F^({options['k']})", returncode=EXIT_VERDICT_FAILURE)
