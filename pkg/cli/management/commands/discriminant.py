from cli import reports
from cli.base import ReportCommand, lattice


class Command(ReportCommand):
    help = "Discriminant group and form of a standard lattice."
    name = "discriminant"
    build = staticmethod(reports.discriminant_report)

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--lattice", type=lattice, required=True)
