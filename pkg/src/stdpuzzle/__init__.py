"""Exact enumeration of 2 x n standard puzzles."""

from .core import (CODES, PIECES, Piece, Puzzle, Support, is_standard, minimal_support,
                   piece_from_code, code_from_piece, pieces_of, reduce)
from .count import (BoundaryProfile, SequenceTerms, brute_force_count, dp_count, dp_step,
                    exact_support_count, inverse_reduction, profile, sequence)
from .support import enumerate_connected_classes, is_connected, orbit, t1, t2, t3

__version__ = "0.1.0"
