import logging
import os
import sys
from importlib import import_module

import django
from django.apps import apps
from django.core.management.base import CommandError

logger = logging.getLogger(__name__)

# subcommand -> module under cli/management/commands
COMMANDS = {
    "pn": "pn",
    "count-nonbirational": "count_nonbirational",
    "windex": "windex",
    "residual": "residual",
    "in-w": "in_w",
    "example7": "example7",
    "chern": "chern",
    "verify": "verify",
    "ext-order": "ext_order",
    "mukai-middle": "mukai_middle",
    "mu-kernel": "mu_kernel",
    "discriminant": "discriminant",
    "verify-all": "verify_all",
}


def setup():
    """Configures Django (settings, installed apps, LOGGING) once per process."""
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'k3_project.settings')
    if not apps.ready:
        django.setup()


def load_command(name, stdout=None, stderr=None):
    setup()
    module = import_module(f"cli.management.commands.{COMMANDS[name]}")
    return module.Command(stdout=stdout, stderr=stderr)


def usage():
    lines = ["usage: manage.py <command> [options]", "", "commands:"]
    for name in COMMANDS:
        module = import_module(f"cli.management.commands.{COMMANDS[name]}")
        lines.append(f"  {name:<20} {module.Command.help}")
    return "\n".join(lines)


def execute(argv):
    """Parses and builds the Report without printing; bad arguments raise CommandError."""
    if not argv or argv[0] not in COMMANDS:
        raise CommandError(f"Unknown command: {argv[0] if argv else ''!r}", returncode=2)
    name, *rest = argv
    command = load_command(name)
    options = command.create_parser("manage.py", name).parse_args(rest)
    return command.build_report(vars(options))


def run(argv=None, stream=None):
    """Runs one subcommand and returns the exit code: 0 ok, 1 failed check or lattice error, 2 usage error."""
    argv = sys.argv[1:] if argv is None else list(argv)
    if not argv or argv[0] not in COMMANDS:
        print(usage(), file=sys.stderr)
        return 2

    command = load_command(argv[0], stdout=stream or sys.stdout)
    try:
        command.run_from_argv(["manage.py", *argv])
    except SystemExit as exc:
        logger.debug(f"{argv[0]} exited with {exc.code!r}")
        return exc.code if isinstance(exc.code, int) else 2
    return 0
