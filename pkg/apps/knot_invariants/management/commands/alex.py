"""
Print the Alexander polynomial of a Seifert matrix.

Usage:
    python manage.py alex --seifert trefoil.txt
"""
from django.core.management.base import BaseCommand

from apps.knot_invariants.management.commands._forms import add_form_arguments, load_seifert
from apps.knot_invariants.services import alexander_poly
from utils.decorators import domain_errors_as_command_errors


class Command(BaseCommand):
    help = 'Alexander polynomial det(V - tV^T), normalised'

    def add_arguments(self, parser):
        add_form_arguments(parser, seifert_only=True)

    @domain_errors_as_command_errors
    def handle(self, *args, **options):
        self.stdout.write(str(alexander_poly(load_seifert(options))))
