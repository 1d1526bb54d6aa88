# Core expression layer init
from core.expr import Expr, diff, equal, eval_float, evaluate, format_expr
from core.parser import parse_expr
from core.rational import format_matrix, format_rational, to_matrix, to_point, to_rational
from core.ring import coordinate_ring, default_vars

__all__ = [
    "Expr",
    "diff",
    "equal",
    "eval_float",
    "evaluate",
    "format_expr",
    "parse_expr",
    "format_matrix",
    "format_rational",
    "to_matrix",
    "to_point",
    "to_rational",
    "coordinate_ring",
    "default_vars",
]
