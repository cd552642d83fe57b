"""Exact determinants and permanents of signed digraphs via block decompositions."""

try:
    from ._blockdet import *  # noqa: F401,F403
    from ._blockdet import InvalidGraph, ParseError, PreconditionError
except ImportError:  # in-tree build: the extension sits next to the package
    from _blockdet import *  # noqa: F401,F403
    from _blockdet import InvalidGraph, ParseError, PreconditionError

__all__ = [
    "det", "per", "det_bpartition", "per_bpartition", "det_cycle_cover", "per_cycle_cover",
    "block_count", "cut_vertices", "is_balanced", "family_matrix", "closed_form_det",
    "closed_form_per", "parse_sdg", "InvalidGraph", "ParseError", "PreconditionError",
]
