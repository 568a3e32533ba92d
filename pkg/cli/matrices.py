import logging
from pathlib import Path

from intlat import DimensionMismatchError, LatticeError

logger = logging.getLogger(__name__)


def parse_matrix(text):
    """
    Reads "rows cols" followed by rows·cols integers in row-major order.
    Line breaks carry no meaning beyond separating tokens.
    """
    tokens = text.split()
    if len(tokens) < 2:
        raise DimensionMismatchError("Matrix text needs a 'rows cols' header")
    try:
        values = [int(t) for t in tokens]
    except ValueError as exc:
        raise LatticeError(f"Matrix entries must be integers: {exc}") from exc

    rows, cols = values[0], values[1]
    entries = values[2:]
    if rows < 0 or cols < 0 or len(entries) != rows * cols:
        raise DimensionMismatchError(f"Header says {rows}x{cols} but {len(entries)} entries follow")
    return [entries[i * cols:(i + 1) * cols] for i in range(rows)]


def read_matrix(path):
    matrix = parse_matrix(Path(path).read_text())
    logger.debug(f"Read a {len(matrix)}-row matrix from {path}")
    return matrix


def format_matrix(matrix):
    rows = [list(row) for row in matrix]
    cols = len(rows[0]) if rows else 0
    lines = [f"{len(rows)} {cols}"] + [" ".join(str(x) for x in row) for row in rows]
    return "\n".join(lines) + "\n"
