"""
Print the infection axes: the distinct components of P_{n-1}.

Usage:
    python manage.py axes --n 2
    python manage.py axes --n 3 --count
"""
from django.conf import settings
from django.core.management.base import BaseCommand

from apps.free_words.serializers import format_word
from apps.pair_sets.services import axes
from utils.decorators import domain_errors_as_command_errors


class Command(BaseCommand):
    help = 'List the axes alpha_1..alpha_m of level n'

    def add_arguments(self, parser):
        parser.add_argument('--n', type=int, required=True)
        parser.add_argument('--rank', type=int, default=settings.CONCORDIA_DEFAULT_RANK)
        parser.add_argument('--count', action='store_true', help='Print only m')

    @domain_errors_as_command_errors
    def handle(self, *args, **options):
        words = axes(options['n'], options['rank'])
        if options['count']:
            self.stdout.write(str(len(words)))
            return
        for w in words:
            self.stdout.write(format_word(w))
