"""Cesàro summability, Tauberian conditions and Fourier series on the circle.

Thin Python layer over the C++ core.  Reports come back as plain dicts with
the same layout as the JSON written by the ``tauber`` command-line tool.
"""

from ._core import (
    catalog_names,
    cesaro_means,
    check_condition,
    delayed_mean,
    exp_norm_growth,
    fejer_kernel,
    fourier_coefficients,
    homogeneity,
    kernel_audit,
    modulus_over_space,
    scalar_series_names,
    verify,
)

__all__ = [
    "catalog_names",
    "cesaro_means",
    "check_condition",
    "delayed_mean",
    "exp_norm_growth",
    "fejer_kernel",
    "fourier_coefficients",
    "homogeneity",
    "kernel_audit",
    "modulus_over_space",
    "scalar_series_names",
    "verify",
]
