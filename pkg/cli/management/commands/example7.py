from cli import reports
from cli.base import ReportCommand


class Command(ReportCommand):
    help = "Genus-two reflections on Hilb(7)."
    name = "example7"
    build = staticmethod(reports.example7_report)
