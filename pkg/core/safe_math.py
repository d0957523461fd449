# core/safe_math.py
"""
Parsing of Laurent polynomials in the grading variable q.
"""
import sympy as sp

from core.exceptions import ParseError

Q = sp.Symbol("q")

_ALLOWED = {"q": Q}


def parse_expr(src: str) -> sp.Expr:
    """Parse a polynomial expression in q, nothing else; `^` means power."""
    try:
        expr = sp.sympify(src, locals=_ALLOWED, convert_xor=True)
    except (sp.SympifyError, SyntaxError, TypeError) as exc:
        raise ParseError(f"Bad polynomial '{src}': {exc}") from exc
    if not isinstance(expr, sp.Expr) or expr.free_symbols - {Q}:
        raise ParseError(f"Bad polynomial '{src}': only the variable q is allowed")
    return expr
