"""Loop torsors over Laurent polynomial rings: exact classification tools."""

from .exact_linalg import FinAb, FinAbHom, IntMatrix, InvariantViolation, smith_normal_form
from .nullity2_classifier import classify_k, classify_r2, eala_table
from .root_catalog import SimpleType

__all__ = [
    "FinAb",
    "FinAbHom",
    "IntMatrix",
    "InvariantViolation",
    "SimpleType",
    "classify_k",
    "classify_r2",
    "eala_table",
    "smith_normal_form",
]
