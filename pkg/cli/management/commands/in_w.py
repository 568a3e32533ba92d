from pathlib import Path

from cli import reports
from cli.base import ReportCommand, lattice


class Command(ReportCommand):
    help = "Membership of an isometry in the reflection group."
    name = "in-w"
    build = staticmethod(reports.in_w_report)

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--lattice", type=lattice, required=True)
        parser.add_argument("--matrix", type=Path, required=True)
