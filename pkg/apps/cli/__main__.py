"""
python -m apps.cli <subcommand> [options]
"""
import os
import sys


def main():
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'base.settings')
    import django
    django.setup()

    from apps.cli.services import run
    sys.exit(run(sys.argv[1:]))


if __name__ == '__main__':
    main()
