from cli import reports
from cli.base import ReportCommand


class Command(ReportCommand):
    help = "Convert between Chern classes and the Chern character."
    name = "chern"
    build = staticmethod(reports.chern_report)

    def add_arguments(self, parser):
        super().add_arguments(parser)
        direction = parser.add_mutually_exclusive_group(required=True)
        direction.add_argument("--to-character", type=int, metavar="K")
        direction.add_argument("--to-chern", type=int, metavar="K")
