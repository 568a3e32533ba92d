from cli import reports
from cli.base import ReportCommand


class Command(ReportCommand):
    help = "Run the whole acceptance battery."
    name = "verify-all"
    build = staticmethod(reports.verify_all_report)

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--skip-slow", action="store_true", help="leave out the Mukai middle sampling")
