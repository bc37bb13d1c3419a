"""
Levine-Tristram signatures.

Usage:
    python manage.py ltsig --lambda-j --theta 3.141592653589793
    python manage.py ltsig --seifert trefoil.txt --samples 1024 --csv sig.csv
"""
from pathlib import Path
import cmath
import math

from django.core.management.base import BaseCommand

from apps.knot_invariants.management.commands._forms import add_form_arguments, load_form
from apps.knot_invariants.serializers import format_samples_csv
from apps.knot_invariants.services import lt_signature, sample_signatures
from utils.decorators import domain_errors_as_command_errors


class Command(BaseCommand):
    help = 'Signature of the form at ω = e^{iθ}, or sampled around the circle'

    def add_arguments(self, parser):
        add_form_arguments(parser)
        parser.add_argument('--theta', type=float, default=math.pi, help='Angle θ in radians')
        parser.add_argument('--samples', type=int, help='Sample the circle at this many midpoints')
        parser.add_argument('--csv', help='Write sampled signatures to this CSV file')

    @domain_errors_as_command_errors
    def handle(self, *args, **options):
        form = load_form(options)

        if options['samples']:
            samples = sample_signatures(form, options['samples'])
            text = format_samples_csv(samples)
            if options['csv']:
                Path(options['csv']).write_text(text)
                self.stdout.write(f"riemann_integral={samples.riemann_integral:.12f}")
            else:
                self.stdout.write(text, ending='')
            return

        theta = options['theta']
        omega = 1 if theta % (2 * math.pi) == 0 else cmath.exp(1j * theta)
        self.stdout.write(str(lt_signature(form, omega)))
