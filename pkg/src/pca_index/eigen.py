"""
Leading eigenpair of a correlation matrix by deterministic power iteration
"""
import warnings
from typing import Iterator, Optional, Union

import numpy as np

from src.config.settings import settings
from src.pca_index.models import CorrelationMatrix, EigenPair
from src.utils import get_logger
from src.utils.errors import ConvergenceError, DegenerateSpectrumWarning

logger = get_logger("pca_index.eigen")

MatrixLike = Union[CorrelationMatrix, np.ndarray]


def _entries(c: MatrixLike) -> np.ndarray:
    if isinstance(c, CorrelationMatrix):
        return c.entries
    return np.asarray(c, dtype=float)


def eigen_spectrum(c: MatrixLike) -> np.ndarray:
    """All eigenvalues of the symmetric matrix, largest first"""
    return np.linalg.eigvalsh(_entries(c))[::-1]


def _start_vectors(n: int) -> Iterator[np.ndarray]:
    # (1,...,1)/sqrt(N) first; the rest only matter when it is orthogonal to u1
    yield np.full(n, 1.0 / np.sqrt(n))
    ramp = np.arange(1, n + 1, dtype=float)
    yield ramp / np.linalg.norm(ramp)
    for k in range(n):
        basis = np.zeros(n)
        basis[k] = 1.0
        yield basis


def _fix_sign(v: np.ndarray) -> np.ndarray:
    total = v.sum()
    if total < 0:
        return -v
    if total == 0:
        lead = v[np.flatnonzero(v)[0]] if np.any(v) else 1.0
        return -v if lead < 0 else v
    return v


def _power_iterate(c: np.ndarray, start: np.ndarray, tol: float, max_iter: int, residual_tol: float):
    v = start
    lam = float(v @ c @ v)
    residual = np.inf
    for iteration in range(1, max_iter + 1):
        w = c @ v
        norm = np.linalg.norm(w)
        if norm == 0.0:
            return 0.0, v, iteration, float(np.max(np.abs(w)))
        v_next = w / norm
        cv = c @ v_next
        lam_next = float(v_next @ cv)
        residual = float(np.max(np.abs(cv - lam_next * v_next)))
        converged = abs(lam_next - lam) < tol and residual < residual_tol
        v, lam = v_next, lam_next
        if converged:
            return lam, v, iteration, residual
    raise ConvergenceError(
        f"power iteration did not converge in {max_iter} iterations (residual {residual:.3e})",
        operation="leading_eigenpair",
    )


def leading_eigenpair(
    c: MatrixLike,
    tol: float = settings.EIGEN_TOL,
    max_iter: int = settings.EIGEN_MAX_ITER,
    spectrum: Optional[np.ndarray] = None,
) -> EigenPair:
    """Largest eigenvalue and its unit eigenvector, with sum(u) > 0.

    Power iteration starts from (1,...,1)/sqrt(N). The full spectrum from the
    symmetric solver confirms the iteration reached the top eigenvalue and
    supplies the gap used to flag near-degenerate spectra.
    """
    matrix = _entries(c)
    n = matrix.shape[0]
    if spectrum is None:
        spectrum = eigen_spectrum(matrix)
    top = float(spectrum[0])
    gap = float(spectrum[0] - spectrum[1]) if n > 1 else np.inf
    match_tol = 1e-8 * max(1.0, abs(top))
    degenerate = gap < settings.DEGENERATE_GAP
    # near-tied pair: only the eigenvalue has to settle
    residual_tol = np.inf if degenerate else settings.EIGEN_RESIDUAL_TOL

    result = None
    for start in _start_vectors(n):
        lam, v, iterations, residual = _power_iterate(matrix, start, tol, max_iter, residual_tol)
        if abs(lam - top) <= match_tol:
            result = (lam, v, iterations, residual)
            break
        logger.debug(f"start vector reached eigenvalue {lam:.6g} instead of {top:.6g}; restarting")
    if result is None:
        raise ConvergenceError(
            f"power iteration never reached the largest eigenvalue {top:.6g}",
            operation="leading_eigenpair",
        )

    lam, v, iterations, residual = result
    v = _fix_sign(v / np.linalg.norm(v))
    if degenerate:
        warnings.warn(
            f"gap between the two largest eigenvalues is {gap:.3e}; leading eigenvector is not unique",
            DegenerateSpectrumWarning,
            stacklevel=2,
        )
    return EigenPair(
        eigenvalue=lam,
        eigenvector=v,
        iterations=iterations,
        residual=residual,
        spectral_gap=gap,
        degenerate=degenerate,
    )
