"""
Print the rho invariant ρ_ℤ of a form.

Usage:
    python manage.py rho --lambda-j
    python manage.py rho --seifert trefoil.txt --profile
"""
from django.core.management.base import BaseCommand

from apps.knot_invariants.management.commands._forms import add_form_arguments, load_form
from apps.knot_invariants.serializers import format_rho
from apps.knot_invariants.services import SignatureCalculator
from utils.decorators import domain_errors_as_command_errors


class Command(BaseCommand):
    help = 'Integral of the signature over the circle minus the signature at 1'

    def add_arguments(self, parser):
        add_form_arguments(parser)
        parser.add_argument('--numeric', action='store_true', help='Force the floating-point integral')
        parser.add_argument('--profile', action='store_true', help='Also print jump angles and arc values')

    @domain_errors_as_command_errors
    def handle(self, *args, **options):
        form = load_form(options)
        calculator = SignatureCalculator()
        profile = calculator.profile(form, exact=not options['numeric'])
        rho = profile.integral - calculator.signature(form, 1)

        if options['profile']:
            self.stdout.write('jumps=' + ','.join(f"{a:.12f}" for a in profile.jump_angles))
            self.stdout.write('arc_values=' + ','.join(str(v) for v in profile.arc_values))
        self.stdout.write(format_rho(rho, profile.error_bound))
