"""Exact integer and mod-2 linear algebra."""
from .abelian import AbelianGroup, Subquotient, direct_sum, subquotient
from .smith import BACKEND, SmithForm, smith_normal_form

__all__ = [
    "AbelianGroup",
    "BACKEND",
    "SmithForm",
    "Subquotient",
    "direct_sum",
    "smith_normal_form",
    "subquotient",
]
