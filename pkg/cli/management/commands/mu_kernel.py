from cli import reports
from cli.base import ReportCommand


class Command(ReportCommand):
    help = "Kernel of the restriction map to Hilb(n)."
    name = "mu-kernel"
    build = staticmethod(reports.mu_kernel_report)

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--n", type=int, required=True)
