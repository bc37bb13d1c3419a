"""
Infection budget for level n against a bound C.

Usage:
    python manage.py plan --n 1 --C 100
    python manage.py plan --n 2 --C 10,100,7/2
    python manage.py plan --n 1 --C 100 --epsilons "0,1;1,1" --strict
    python manage.py plan --n 1 --C 100 --out plan.txt
"""
from pathlib import Path

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from apps.infection_planner.serializers import format_plan, parse_plan
from apps.infection_planner.services import (
    INFECTION_J,
    INFECTIONS,
    ObstructionVerdict,
    obstruction_check,
    plan_batch,
)
from utils.decorators import domain_errors_as_command_errors
from utils.exceptions import EXIT_VERDICT_FAILURE, PlanError


def parse_epsilons(text: str):
    """`0,1;1,1` -> [[0, 1], [1, 1]], one copy per `;` group."""
    try:
        return [[int(e) for e in group.split(',')] for group in text.split(';') if group.strip()]
    except ValueError as exc:
        raise PlanError(f"Bad epsilons {text!r}") from exc


class Command(BaseCommand):
    help = 'Least even infection budget N with N·ρ_ℤ(J) > C'

    def add_arguments(self, parser):
        parser.add_argument('--n', type=int, help='Level of the axes')
        parser.add_argument('--C', dest='bound', help='Positive rational bound; comma-separated for a batch')
        parser.add_argument('--rank', type=int, default=settings.CONCORDIA_DEFAULT_RANK)
        parser.add_argument('--infection', choices=INFECTIONS, default=INFECTION_J)
        parser.add_argument('--out', help='Write the plan file here instead of stdout')
        parser.add_argument('--plan', help='Read an existing plan file instead of building one')
        parser.add_argument('--epsilons', help="Obstruction check, e.g. '0,1;1,1' (one group per copy)")
        parser.add_argument('--strict', action='store_true', help='Require every copy to exceed C on its own')

    @domain_errors_as_command_errors
    def handle(self, *args, **options):
        if options['plan']:
            plans = [parse_plan(Path(options['plan']).read_text(), options['rank'])]
        else:
            if options['n'] is None or not options['bound']:
                raise PlanError('--n and --C are required unless --plan is given')
            bounds = [b for b in options['bound'].split(',') if b.strip()]
            plans = plan_batch(options['n'], bounds, options['rank'], options['infection'])

        if options['epsilons']:
            if len(plans) != 1:
                raise PlanError('--epsilons needs a single bound')
            result = obstruction_check(plans[0], parse_epsilons(options['epsilons']), options['strict'])
            self.stdout.write(str(result))
            if result.verdict != ObstructionVerdict.CONTRADICTION:
                raise CommandError('budget does not force a contradiction', returncode=EXIT_VERDICT_FAILURE)
            return

        text = '\n'.join(format_plan(p) for p in plans)
        if options['out']:
            Path(options['out']).write_text(text)
            self.stdout.write(' '.join(f"N_minimal={p.N_minimal}" for p in plans))
        else:
            self.stdout.write(text, ending='')
