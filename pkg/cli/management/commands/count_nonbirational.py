from cli import reports
from cli.base import ReportCommand


class Command(ReportCommand):
    help = "Count P_n."
    name = "count-nonbirational"
    build = staticmethod(reports.count_nonbirational_report)

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--n", type=int, required=True)
