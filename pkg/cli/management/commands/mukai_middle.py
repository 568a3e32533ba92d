from django.conf import settings

from cli import reports
from cli.base import ReportCommand


class Command(ReportCommand):
    help = "Extension order with the Mukai lattice in the middle, from sampled reflections."
    name = "mukai-middle"
    build = staticmethod(reports.mukai_middle_report)

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--n", type=int, required=True)
        parser.add_argument("--gens", type=int, default=settings.GENERATOR_COUNT)
        parser.add_argument("--seed", type=int, default=settings.SEED)
        parser.add_argument("--batch", type=int, default=settings.GENERATOR_BATCH)
