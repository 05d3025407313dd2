"""
PCA index package initialization
"""
from .models import NormalizedWindow, CorrelationMatrix, EigenPair, GepuSeries
from .normalization import normalize_window, correlation_matrix
from .eigen import leading_eigenpair, eigen_spectrum
from .gepu import (
    eigenportfolio_index,
    compute_gepu_pca,
    compute_gepu_gdp,
    standardize_over_base,
    window_start_month,
)

__all__ = [
    "NormalizedWindow",
    "CorrelationMatrix",
    "EigenPair",
    "GepuSeries",
    "normalize_window",
    "correlation_matrix",
    "leading_eigenpair",
    "eigen_spectrum",
    "eigenportfolio_index",
    "compute_gepu_pca",
    "compute_gepu_gdp",
    "standardize_over_base",
    "window_start_month",
]
