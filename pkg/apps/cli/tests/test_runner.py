"""
Tests for the unified command-line entry point.
"""
import pytest
from io import StringIO

from django.core.management import get_commands

from apps.cli.services import SUBCOMMANDS, command_name, run


def invoke(*argv):
    out, err = StringIO(), StringIO()
    status = run(list(argv), stdout=out, stderr=err)
    return status, out.getvalue(), err.getvalue()


class TestDispatch:

    def test_every_subcommand_is_a_management_command(self):
        commands = get_commands()
        for subcommand in SUBCOMMANDS:
            assert command_name(subcommand) in commands

    def test_hyphenated_names(self):
        assert command_name('special-pair') == 'special_pair'
        assert command_name('verify-cert') == 'verify_cert'

    def test_unknown_subcommand(self):
        status, _, err = invoke('frobnicate')
        assert status == 2
        assert err.startswith('usage: concordia')

    def test_no_subcommand(self):
        assert invoke()[0] == 2


class TestExamples:
    """Worked invocations and their exit status."""

    def test_fox(self):
        status, out, _ = invoke('fox', '--i', '2', '--word', '[x1,x2]')
        assert status == 0
        assert out.strip() == '1*x1^-1 + -1*[x2,x1]'

    def test_rho(self):
        status, out, _ = invoke('rho', '--lambda-j')
        assert status == 0
        assert out.strip() == 'rho_z=4/3'

    def test_pairs_count(self):
        status, out, _ = invoke('pairs', '--n', '1', '--count')
        assert status == 0
        assert out.strip() == '24'

    def test_plan(self):
        status, out, _ = invoke('plan', '--n', '1', '--C', '100')
        assert status == 0
        assert 'N_minimal=76' in out.splitlines()


class TestExitStatus:

    def test_argument_error(self):
        assert invoke('fox', '--word', '[x1,x2]')[0] == 2

    def test_bad_word(self):
        status, _, err = invoke('fox', '--i', '2', '--word', '[x1,')
        assert status == 2
        assert 'CommandError' in err

    def test_verdict_failure(self, tmp_path):
        path = tmp_path / 'cert.txt'
        path.write_text('n=1\n')
        assert invoke('verify-cert', '--cert', str(path))[0] == 1

    def test_resource_cap(self, settings):
        settings.CONCORDIA_MAX_DEPTH = 1
        assert invoke('member', '--word', '[x1,x2]', '--k', '3')[0] == 3

    @pytest.mark.slow
    def test_special_pair_round_trip(self, tmp_path):
        path = tmp_path / 'cert.txt'
        status, out, _ = invoke(
            'special-pair', '--images', 'x1, e, x2, e', '--target-rank', '2', '--n', '2',
            '--cert', str(path)
        )
        assert status == 0
        assert out.startswith('final=')
        status, out, _ = invoke('verify-cert', '--cert', str(path))
        assert status == 0
        assert out.strip() == 'verified n=2 levels=1'
