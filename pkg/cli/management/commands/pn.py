from cli import reports
from cli.base import ReportCommand


class Command(ReportCommand):
    help = "List P_n, the orbits of non-birational moduli embeddings."
    name = "pn"
    build = staticmethod(reports.pn_report)

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--n", type=int, required=True)
