"""
Signature output: CSV samples and the rho summary line.
"""
from fractions import Fraction
from io import StringIO
import csv

from apps.knot_invariants.services import SignatureSamples
from apps.knot_invariants.services.signature import Rho

CSV_HEADER = ('theta', 'omega_re', 'omega_im', 'signature')


def format_samples_csv(samples: SignatureSamples) -> str:
    buffer = StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(CSV_HEADER)
    for theta, re, im, sigma in samples.rows():
        writer.writerow((f"{theta:.12f}", f"{re:.12f}", f"{im:.12f}", sigma))
    return buffer.getvalue()


def format_rho(value: Rho, error_bound: float = 0.0) -> str:
    """`rho_z=4/3` when exact, `rho_z=-1.539876...±2e-16` otherwise."""
    if isinstance(value, Fraction):
        return f"rho_z={value}"
    return f"rho_z={value:.15f}±{error_bound:.1e}"
