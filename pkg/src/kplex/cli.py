"""
The ``kplex`` console script.

It runs the ``solvekplex`` management command and turns its errors into
exit codes, configuring minimal Django settings when it is not run from
inside a project.
"""
import sys

import django
from django.conf import settings
from django.core.management import call_command
from django.core.management.base import CommandError

from .management.commands.utils import EXIT_INVALID_ARGS, EXIT_OK

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'plain': {'format': '%(asctime)s %(levelname)s %(name)s: %(message)s'},
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'stream': 'ext://sys.stderr',
            'formatter': 'plain',
        },
    },
    'loggers': {
        'kplex': {'handlers': ['console'], 'level': 'INFO'},
    },
}


def setup_env():
    if not settings.configured:
        settings.configure(
            INSTALLED_APPS=['kplex'],
            LOGGING=LOGGING,
        )
    django.setup()


def run_cli(argv=None):
    """
    Run ``solvekplex`` with command line arguments.

    :param argv: The arguments, without the program name.
        Default: ``sys.argv[1:]``
    :return: The exit code
    """
    if argv is None:
        argv = sys.argv[1:]
    setup_env()
    try:
        call_command('solvekplex', *argv)
    except CommandError as e:
        sys.stderr.write('{}\n'.format(e))
        # the argument parser raises with the default code
        if e.returncode == 1:
            return EXIT_INVALID_ARGS
        return e.returncode
    return EXIT_OK


def main():
    sys.exit(run_cli())
