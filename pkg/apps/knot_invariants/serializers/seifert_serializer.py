"""
Seifert matrix files: one row per line, comma-separated integers.

    1, -1
    0, 1

Blank lines and lines starting with `#` are ignored; an empty file is the
unknot.
"""
from apps.knot_invariants.services import SeifertMatrix
from utils.exceptions import InvalidSeifertMatrixError


def parse_seifert(text: str) -> SeifertMatrix:
    """
    Raises:
        InvalidSeifertMatrixError: On non-integer entries or a non-Seifert matrix
    """
    rows = []
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith('#'):
            continue
        try:
            rows.append([int(value) for value in line.split(',')])
        except ValueError as exc:
            raise InvalidSeifertMatrixError(f"Line {number}: {line!r} is not a row of integers") from exc
    return SeifertMatrix.from_rows(rows)


def format_seifert(V: SeifertMatrix) -> str:
    return ''.join(', '.join(str(v) for v in row) + '\n' for row in V.entries)
