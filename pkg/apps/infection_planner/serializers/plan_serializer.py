"""
Plan file codec: one `key=value` per line in a fixed order.

    n=1
    m=2
    axis[1]=x1
    axis[2]=x2
    C=100
    infection=J
    rho_per_copy=4/3
    N_minimal=76
    N_paper=102
    total_rho=304/3
    arf_total=0
"""
from fractions import Fraction
from typing import List, Tuple

from apps.free_words.serializers import format_word, parse_word
from apps.free_words.services import DEFAULT_RANK
from apps.infection_planner.services import InfectionPlan, load_infection
from utils.exceptions import InvalidWordError, PlanError
from utils.validators import RationalValidator


def format_plan(plan: InfectionPlan) -> str:
    lines = [f"n={plan.n}", f"m={plan.m}"]
    lines.extend(f"axis[{i}]={format_word(w)}" for i, w in enumerate(plan.axes, start=1))
    lines.extend([
        f"C={plan.C}",
        f"infection={plan.infection}",
        f"rho_per_copy={plan.rho_per_copy}",
        f"N_minimal={plan.N_minimal}",
        f"N_paper={plan.N_paper}",
        f"total_rho={plan.total_rho}",
        f"arf_total={plan.arf_total}",
    ])
    return '\n'.join(lines) + '\n'


class _Fields:
    """Sequential reader over `key=value` lines."""

    def __init__(self, text: str):
        self.lines: List[Tuple[str, str]] = []
        for number, line in enumerate(text.splitlines(), start=1):
            if not line.strip():
                continue
            key, sep, value = line.partition('=')
            if not sep:
                raise PlanError(f"Line {number}: expected key=value, got {line!r}")
            self.lines.append((key.strip(), value.strip()))
        self.position = 0

    def take(self, key: str) -> str:
        if self.position >= len(self.lines):
            raise PlanError(f"Missing field {key}")
        found, value = self.lines[self.position]
        if found != key:
            raise PlanError(f"Expected field {key}, found {found}")
        self.position += 1
        return value

    def finish(self):
        if self.position != len(self.lines):
            raise PlanError(f"Unexpected field {self.lines[self.position][0]}")


def _integer(fields: _Fields, key: str) -> int:
    value = fields.take(key)
    try:
        return int(value)
    except ValueError as exc:
        raise PlanError(f"{key}={value!r} is not an integer") from exc


def _rational(fields: _Fields, key: str) -> Fraction:
    value = fields.take(key)
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise PlanError(f"{key}={value!r} is not a rational") from exc


def parse_plan(text: str, rank: int = DEFAULT_RANK) -> InfectionPlan:
    """
    Parse a plan file and re-check every plan invariant.

    Raises:
        PlanError: On a missing, misplaced or inconsistent field
    """
    fields = _Fields(text)
    n = _integer(fields, 'n')
    m = _integer(fields, 'm')
    axis_texts = [fields.take(f"axis[{i}]") for i in range(1, m + 1)]
    try:
        axis_words = tuple(parse_word(text, rank) for text in axis_texts)
    except InvalidWordError as exc:
        raise PlanError(f"Bad axis: {exc.detail}") from exc
    C = RationalValidator.parse_positive(fields.take('C'))
    infection = fields.take('infection')
    known = load_infection(infection)
    plan = InfectionPlan(
        n=n,
        axes=axis_words,
        C=C,
        infection=infection,
        rho_per_copy=_rational(fields, 'rho_per_copy'),
        N_minimal=_integer(fields, 'N_minimal'),
        N_paper=_integer(fields, 'N_paper'),
        arf_per_copy=known.arf_per_copy,
    )
    total_rho = _rational(fields, 'total_rho')
    arf_total = _integer(fields, 'arf_total')
    fields.finish()
    if plan.rho_per_copy != known.rho_per_copy:
        raise PlanError(f"rho_per_copy={plan.rho_per_copy} but ρ_ℤ({infection}) = {known.rho_per_copy}")
    if total_rho != plan.total_rho:
        raise PlanError(f"total_rho={total_rho} but N_minimal·rho_per_copy = {plan.total_rho}")
    if arf_total != 0:
        raise PlanError(f"arf_total={arf_total}; an even number of copies has Arf invariant 0")
    return plan
