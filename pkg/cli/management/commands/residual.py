from pathlib import Path

from cli import reports
from cli.base import ReportCommand


class Command(ReportCommand):
    help = "Residual orthogonal group, or the action of one isometry on it."
    name = "residual"
    build = staticmethod(reports.residual_report)

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--n", type=int, required=True)
        parser.add_argument("--matrix", type=Path, help="isometry of Hilb(n) in 'rows cols' text format")
