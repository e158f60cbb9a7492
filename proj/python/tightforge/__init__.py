"""Tight spectra, tight groupoids and consonance of finite inverse semigroups."""

from ._tightforge import (
    Error,
    InputError,
    InvalidStructure,
    InverseSemigroup,
    Semilattice,
    SizeCapExceeded,
    brandt,
    chain,
    check_hom,
    consonant,
    cyclic_with_zero,
    diamond,
    run_suite,
    space_duality,
    symmetric_inverse_monoid,
)

__all__ = [
    "Error",
    "InputError",
    "InvalidStructure",
    "InverseSemigroup",
    "Semilattice",
    "SizeCapExceeded",
    "brandt",
    "chain",
    "check_hom",
    "consonant",
    "cyclic_with_zero",
    "diamond",
    "run_suite",
    "space_duality",
    "symmetric_inverse_monoid",
]
