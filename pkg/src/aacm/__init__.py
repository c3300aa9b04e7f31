"""Ankeny-Artin-Chowla type congruences for real quadratic fields, checked mechanically."""

from .errors import (
    AACMError,
    DomainError,
    InternalConsistencyError,
    PoleError,
    ResourceError,
    UnsupportedCharacterError,
    UnsupportedPrecisionError,
)
from .kernels import BACKEND
from .quadfield import class_number_imag, class_number_real, fundamental_unit, fundamental_unit_mod
from .report import VerificationReport
from .verify import (
    check_caacm,
    verify_all,
    verify_cor_aac,
    verify_cor_mordell,
    verify_cor_p3,
    verify_lemma51,
    verify_thm1,
    verify_thm2,
)

__all__ = [
    "AACMError",
    "BACKEND",
    "DomainError",
    "InternalConsistencyError",
    "PoleError",
    "ResourceError",
    "UnsupportedCharacterError",
    "UnsupportedPrecisionError",
    "VerificationReport",
    "check_caacm",
    "class_number_imag",
    "class_number_real",
    "fundamental_unit",
    "fundamental_unit_mod",
    "verify_all",
    "verify_cor_aac",
    "verify_cor_mordell",
    "verify_cor_p3",
    "verify_lemma51",
    "verify_thm1",
    "verify_thm2",
]
