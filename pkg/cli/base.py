import json
import logging
from argparse import Namespace

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from intlat import LatticeError, make_standard

logger = logging.getLogger(__name__)

LEMMAS = ("sigma-linear", "twist", "newton")
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


def lattice(name):
    """argparse type for --lattice {hilb:N|mukai|k3}."""
    return make_standard(name)


def apply_log_level(level):
    if not level:
        return
    for name in settings.PACKAGE_LOGGERS:
        logging.getLogger(name).setLevel(level)


def render(report, options, stream):
    if options.get("json"):
        stream.write(json.dumps(report.dump()["outputs"], separators=(",", ":")) + "\n")
        return
    if options.get("report"):
        stream.write(json.dumps(report.dump(), indent=2) + "\n")
        return

    inputs = " ".join(f"{key}={value}" for key, value in report.inputs.items())
    stream.write(f"{report.command} {inputs}".rstrip() + "\n")
    outputs = report.dump()["outputs"]
    if isinstance(outputs, dict):
        for key, value in outputs.items():
            stream.write(f"  {key}: {value}\n")
    else:
        stream.write(f"  {outputs}\n")
    for check in report.checks:
        status = "PASS" if check.passed else "FAIL"
        stream.write(f"  [{status}] {check.name}: expected {check.expected}, got {check.actual}\n")


class ReportCommand(BaseCommand):
    """
    A management command that builds one Report and prints it.

    Subclasses set `name` and `build` (a function of the parsed options as a
    Namespace) and add their own arguments. A LatticeError or a failed check
    becomes CommandError with return code 1; an unreadable input file exits 2.
    """

    requires_system_checks = []
    name = None
    build = None

    def add_arguments(self, parser):
        output = parser.add_mutually_exclusive_group()
        output.add_argument("--json", action="store_true", help="print the outputs as compact JSON")
        output.add_argument("--report", action="store_true", help="print the whole report, checks included, as JSON")
        parser.add_argument(
            "--log-level", type=str.upper, choices=LOG_LEVELS, default=None, help="overrides K3_LOG_LEVEL for this run"
        )

    def build_report(self, options):
        apply_log_level(options.get("log_level"))
        return type(self).build(Namespace(**options))

    def handle(self, *args, **options):
        try:
            report = self.build_report(options)
        except LatticeError as e:
            logger.error(f"{self.name} failed: {str(e)}", exc_info=True)
            raise CommandError(str(e), returncode=1)
        except OSError as e:
            logger.error(f"{self.name} could not read its input: {str(e)}")
            raise CommandError(str(e), returncode=2)

        render(report, options, self.stdout)
        failures = report.failures()
        if failures:
            for check in failures:
                logger.warning(f"{self.name}: check failed: {check.name}")
            raise CommandError(f"{len(failures)} check(s) failed", returncode=1)
