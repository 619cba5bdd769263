"""Named forms, matrices and exact checks for the quartic families and their automorphism groups."""

from .registry import (
    ALIASES, CHECKS, FORMS, MATRICES, CatalogId, Checker, UnknownCatalogId, VerificationReport, check, form,
    form_catalog, matrix, matrix_catalog, resolve_check, run_all, split_args, theorem_check, to_jsonable,
)

# Import family modules to register their forms, matrices and checks
from . import order80, order1920, quintic, screens, septic  # noqa: F401
from .order1920 import verify_s5_coxeter
from .septic import make_Z, verify_psl27

__all__ = [
    'ALIASES', 'CHECKS', 'FORMS', 'MATRICES', 'CatalogId', 'Checker', 'UnknownCatalogId', 'VerificationReport',
    'check', 'form', 'form_catalog', 'make_Z', 'matrix', 'matrix_catalog', 'resolve_check', 'run_all', 'split_args',
    'theorem_check', 'to_jsonable', 'verify_psl27', 'verify_s5_coxeter',
]
