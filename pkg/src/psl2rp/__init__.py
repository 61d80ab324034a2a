"""Replacement-property laboratory for PSL(2,p) and PSL(2,p^2)."""

__version__ = "0.1.0"

from .gf import FieldCtx, FqElem, make_field
from .psl2 import GroupCtx, Mat2, make_group
from .groups import Subgroup, closure, generated_order, identify
from .genseq import GenSequence, max_irredundant_length, rp_check
from .witness import BUILDERS, build_theorem21, build_theorem24, build_theorem26

__all__ = [
    "BUILDERS", "FieldCtx", "FqElem", "GenSequence", "GroupCtx", "Mat2", "Subgroup",
    "build_theorem21", "build_theorem24", "build_theorem26", "closure",
    "generated_order", "identify", "make_field", "make_group",
    "max_irredundant_length", "rp_check",
]
