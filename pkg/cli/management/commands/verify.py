from cli import reports
from cli.base import LEMMAS, ReportCommand


class Command(ReportCommand):
    help = "Check a universal Chern class identity."
    name = "verify"
    build = staticmethod(reports.verify_report)

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--lemma", choices=LEMMAS, required=True)
        parser.add_argument("--i", type=int, required=True)
