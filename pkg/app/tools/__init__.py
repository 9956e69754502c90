"""Computational tools: lattice, series, distributions and their applications."""

from app.tools.applications import (
    check_bab_free_from_a,
    compress,
    conjugate_by_semicircular,
    semigroup_t,
    verify_compression_freeness,
)
from app.tools.freeprob import (
    cross_term_check,
    free_additive,
    from_r_series,
    is_tracial,
    m_series,
    multiply_free_tuples,
    r_transform,
)
from app.tools.nc_lattice import enumerate_nc, enumerate_ncp, kreweras, relative_kreweras
from app.tools.oracle import FreeProductOracle, free_product_centering
from app.tools.s_transform import s_transform_1d
from app.tools.series import boxstar, boxstar_inverse, moebius, sum_series, zeta

__all__ = [
    # Lattice
    "enumerate_nc",
    "enumerate_ncp",
    "kreweras",
    "relative_kreweras",
    # Series
    "boxstar",
    "boxstar_inverse",
    "moebius",
    "sum_series",
    "zeta",
    # Distributions
    "cross_term_check",
    "free_additive",
    "from_r_series",
    "is_tracial",
    "m_series",
    "multiply_free_tuples",
    "r_transform",
    "FreeProductOracle",
    "free_product_centering",
    "s_transform_1d",
    # Applications
    "check_bab_free_from_a",
    "compress",
    "conjugate_by_semicircular",
    "semigroup_t",
    "verify_compression_freeness",
]
