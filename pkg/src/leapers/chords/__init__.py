from leapers.chords.figures import (
    Figure,
    is_connected,
    random_figure,
    random_snake,
    realized_set,
    realizes,
)
from leapers.chords.forcing import chord_check, is_strictly_convex, quad_check
from leapers.chords.fork import (
    Basis,
    ForkCertificate,
    GoodPair,
    fork_quadrilateral,
    fork_trace,
    normalize_fork_input,
)
from leapers.chords.polyomino import fixed_polyominoes

__all__ = [
    "Basis", "Figure", "ForkCertificate", "GoodPair", "chord_check", "fixed_polyominoes",
    "fork_quadrilateral", "fork_trace", "is_connected", "is_strictly_convex",
    "normalize_fork_input", "quad_check", "random_figure", "random_snake", "realized_set",
    "realizes",
]
