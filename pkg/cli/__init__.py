from .main import COMMANDS, execute, load_command, run, setup
from .matrices import format_matrix, parse_matrix, read_matrix
from .serializers import Check, Report
