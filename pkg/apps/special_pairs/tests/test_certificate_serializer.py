"""
Tests for the certificate codec, re-verification and the special_pair and
verify_cert commands.
"""
import pytest
from io import StringIO
from random import Random
from django.core.management import call_command
from django.core.management.base import CommandError

from apps.free_words.serializers import parse_word_list
from apps.free_words.services import random_word
from apps.special_pairs.serializers import format_certificate, parse_certificate
from apps.special_pairs.services import (
    SolutionMap,
    check_condition1,
    select_special_pair,
    verify_certificate,
)
from utils.exceptions import Case4Error, CertificateError


def certificate_text(images='x1, e, x2, e', target_rank=2, n=2):
    r = SolutionMap.from_images(parse_word_list(images, target_rank), target_rank)
    return format_certificate(select_special_pair(r, n))


class TestCertificateFormat:
    """Canonical text layout."""

    def setup_method(self):
        self.text = certificate_text()

    def test_header(self):
        assert self.text.startswith(
            'n=2\n'
            'rank=4\n'
            'target_rank=2\n'
            'images=x1, e, x2, e\n'
            'reordering=identity\n'
            '[base]\n'
            'pair=x1 x2 x1^-1 x2^-1 | x1 x3 x1^-1 x3^-1\n'
            'd4_zero=true\n'
        )

    def test_sections(self):
        lines = self.text.splitlines()
        assert [line for line in lines if line.startswith('[')] == [
            '[base]', '[level 1]', '[final]', '[relation]'
        ]
        assert 'case=2' in lines
        assert 'vanishing[1]=0' in lines
        assert lines[-1] == 'nonzero=true'

    def test_parse_format_is_stable(self):
        assert format_certificate(parse_certificate(self.text)) == self.text


class TestVerifyCertificate:
    """Re-verification accepts exactly the regenerated text."""

    def setup_method(self):
        self.text = certificate_text()

    def test_accepts_canonical_text(self):
        cert = verify_certificate(self.text)
        assert cert.n == 2

    def test_case_one_certificate(self):
        cert = verify_certificate(certificate_text('x1, x2, x2, x1'))
        assert cert.levels[0].case == 1

    def test_rejects_wrong_case(self):
        with pytest.raises(CertificateError):
            verify_certificate(self.text.replace('case=2', 'case=3'))

    def test_rejects_zeroed_evidence(self):
        lines = self.text.splitlines()
        index = next(i for i, line in enumerate(lines) if line.startswith('evidence[1]='))
        lines[index] = 'evidence[1]=0'
        with pytest.raises(CertificateError):
            verify_certificate('\n'.join(lines) + '\n')

    def test_rejects_flipped_verdict(self):
        with pytest.raises(CertificateError):
            verify_certificate(self.text.replace('nonzero=true', 'nonzero=false'))

    def test_rejects_changed_map(self):
        with pytest.raises(CertificateError):
            verify_certificate(self.text.replace('images=x1, e, x2, e', 'images=x1, x2, x2, x1'))

    def test_rejects_missing_line(self):
        with pytest.raises(CertificateError):
            verify_certificate(self.text.replace('d4_zero=true\n', '', 1))

    def test_rejects_unknown_section(self):
        with pytest.raises(CertificateError):
            verify_certificate(self.text.replace('[final]', '[last]'))

    def test_rejects_non_canonical_text(self):
        with pytest.raises(CertificateError):
            verify_certificate(self.text.replace('images=x1, e, x2, e', 'images=x1, e, x2, x1 x1^-1'))

    def test_random_maps_verify(self):
        rng = Random(5)
        verified = 0
        for _ in range(50):
            r = SolutionMap.from_images([random_word(2, 3, rng) for _ in range(4)], 2)
            if not check_condition1(r)[0]:
                continue
            try:
                cert = select_special_pair(r, 2)
            except Case4Error:
                continue
            verify_certificate(format_certificate(cert))
            verified += 1
        assert verified > 0


class TestSpecialPairCommands:
    """special_pair writes a certificate that verify_cert accepts."""

    def test_prints_certificate(self):
        out = StringIO()
        call_command('special_pair', '--images', 'x1, e, x2, e', '--target-rank', '2', '--n', '2', stdout=out)
        assert out.getvalue() == certificate_text()

    def test_round_trip_through_file(self, tmp_path):
        path = tmp_path / 'cert.txt'
        out = StringIO()
        call_command(
            'special_pair', '--images', 'x1, x2, x2, x1', '--target-rank', '2', '--n', '2',
            '--cert', str(path), stdout=out
        )
        assert out.getvalue().startswith('final=')
        out = StringIO()
        call_command('verify_cert', '--cert', str(path), stdout=out)
        assert out.getvalue().strip() == 'verified n=2 levels=1'

    def test_corrupted_file_exits_one(self, tmp_path):
        path = tmp_path / 'cert.txt'
        path.write_text(certificate_text().replace('case=2', 'case=1'))
        with pytest.raises(CommandError) as excinfo:
            call_command('verify_cert', '--cert', str(path), stdout=StringIO())
        assert excinfo.value.returncode == 1

    def test_condition1_failure_exits_one(self):
        with pytest.raises(CommandError) as excinfo:
            call_command(
                'special_pair', '--images', 'e, e, e, e', '--target-rank', '2', '--n', '2',
                stdout=StringIO()
            )
        assert excinfo.value.returncode == 1

    def test_case_four_exits_one(self):
        with pytest.raises(CommandError) as excinfo:
            call_command(
                'special_pair', '--images', 'x1, e, x1, x2', '--target-rank', '2', '--n', '2',
                stdout=StringIO()
            )
        assert excinfo.value.returncode == 1

    def test_missing_file_is_usage_error(self, tmp_path):
        with pytest.raises(CommandError) as excinfo:
            call_command('verify_cert', '--cert', str(tmp_path / 'absent.txt'), stdout=StringIO())
        assert excinfo.value.returncode == 2
