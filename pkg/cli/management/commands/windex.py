from cli import reports
from cli.base import ReportCommand


class Command(ReportCommand):
    help = "Index of the monodromy reflection group."
    name = "windex"
    build = staticmethod(reports.windex_report)

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--n", type=int, required=True)
