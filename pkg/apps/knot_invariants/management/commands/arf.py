"""
Print the Arf invariant of a Seifert matrix.

Usage:
    python manage.py arf --seifert trefoil.txt
"""
from django.core.management.base import BaseCommand

from apps.knot_invariants.management.commands._forms import add_form_arguments, load_seifert
from apps.knot_invariants.services import arf
from utils.decorators import domain_errors_as_command_errors


class Command(BaseCommand):
    help = 'Arf invariant from Δ(-1) mod 8'

    def add_arguments(self, parser):
        add_form_arguments(parser, seifert_only=True)

    @domain_errors_as_command_errors
    def handle(self, *args, **options):
        self.stdout.write(str(arf(load_seifert(options))))
