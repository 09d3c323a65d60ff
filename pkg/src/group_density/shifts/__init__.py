"""Shift spaces, their languages, return words and extension graphs."""

from group_density.shifts.blocks import HigherBlockPresentation, higher_block
from group_density.shifts.extension import DendricCheck, ExtensionGraph, dendric_up_to, extension_graph
from group_density.shifts.language import LanguageOracle
from group_density.shifts.letters import LetterCoder
from group_density.shifts.returns import ReturnWordCertificate, return_words
from group_density.shifts.spaces import (
    PeriodicShift,
    SFTShift,
    ShiftSpace,
    SubstitutionShift,
    build_shift,
    is_primitive,
)

__all__ = [
    "ShiftSpace",
    "SFTShift",
    "SubstitutionShift",
    "PeriodicShift",
    "build_shift",
    "is_primitive",
    "LanguageOracle",
    "LetterCoder",
    "ReturnWordCertificate",
    "return_words",
    "ExtensionGraph",
    "DendricCheck",
    "extension_graph",
    "dendric_up_to",
    "HigherBlockPresentation",
    "higher_block",
]
