from cli import reports
from cli.base import ReportCommand


class Command(ReportCommand):
    help = "Order of the extension class by the gcd formula."
    name = "ext-order"
    build = staticmethod(reports.ext_order_report)

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--n", type=int, required=True)
        parser.add_argument("--i", type=int, required=True)
