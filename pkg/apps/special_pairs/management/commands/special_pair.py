"""
Select a special pair for a solution map and emit its certificate.

Usage:
    python manage.py special_pair --images "x1, e, x2, e" --target-rank 2 --n 2
    python manage.py special_pair --images "x1, x2, x2, x1" --target-rank 2 --n 2 --cert cert.txt
"""
from pathlib import Path

from django.core.management.base import BaseCommand, CommandError

from apps.free_words.serializers import format_pair, parse_word_list
from apps.special_pairs.serializers import format_certificate
from apps.special_pairs.services import SolutionMap, select_special_pair
from utils.decorators import domain_errors_as_command_errors
from utils.exceptions import EXIT_VERDICT_FAILURE


class Command(BaseCommand):
    help = 'Run the special-pair induction for a solution map'

    def add_arguments(self, parser):
        parser.add_argument(
            '--images',
            required=True,
            help='Comma-separated images of x1..x4 in the target free group'
        )
        parser.add_argument('--target-rank', type=int, required=True)
        parser.add_argument('--n', type=int, required=True, help='Final level')
        parser.add_argument('--cert', help='Write the certificate here instead of stdout')

    @domain_errors_as_command_errors
    def handle(self, *args, **options):
        target_rank = options['target_rank']
        r = SolutionMap.from_images(parse_word_list(options['images'], target_rank), target_rank)
        cert = select_special_pair(r, options['n'])
        text = format_certificate(cert)

        if options['cert']:
            Path(options['cert']).write_text(text)
            self.stdout.write(f"final={format_pair(cert.final_pair.components())}")
        else:
            self.stdout.write(text, ending='')

        if not cert.relation.nonzero:
            raise CommandError(
                f"relation coordinate vanishes at level {options['n']}",
                returncode=EXIT_VERDICT_FAILURE
            )
