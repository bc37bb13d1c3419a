"""
Re-verify a special-pair certificate bit for bit.

Usage:
    python manage.py verify_cert --cert cert.txt
"""
from pathlib import Path

from django.core.management.base import BaseCommand

from apps.special_pairs.services import verify_certificate
from utils.decorators import domain_errors_as_command_errors


class Command(BaseCommand):
    help = 'Verify a special-pair certificate; exit 1 if it does not reproduce'

    def add_arguments(self, parser):
        parser.add_argument('--cert', required=True, help='Certificate file')

    @domain_errors_as_command_errors
    def handle(self, *args, **options):
        cert = verify_certificate(Path(options['cert']).read_text())
        self.stdout.write(f"verified n={cert.n} levels={len(cert.levels)}")
