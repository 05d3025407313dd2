"""
Windowed z-scoring of EPU series and the cross-correlation matrix C = X X' / T
"""
import numpy as np

from src.ingest.models import EpuPanel, as_month, month_key
from src.pca_index.models import CorrelationMatrix, NormalizedWindow
from src.utils.errors import InsufficientHistoryError, ZeroVarianceError

# sigma below this fraction of the window's scale counts as constant
_RELATIVE_SIGMA_FLOOR = 1e-12


def normalize_window(panel: EpuPanel, window_end, window_size: int) -> NormalizedWindow:
    """Z-score each economy over the right-aligned window ending at ``window_end``.

    Uses the population standard deviation (divide by T), so every row of the
    result has zero mean and unit population variance and C has an exact
    unit diagonal.
    """
    op = "normalize_window"
    window_end = as_month(window_end)
    if window_size < 2:
        raise InsufficientHistoryError(f"window size must be >= 2, got {window_size}", operation=op)
    window_start = window_end - (window_size - 1)
    label = f"{month_key(window_start)}..{month_key(window_end)}"
    if window_start < panel.first_month or window_end > panel.last_month:
        raise InsufficientHistoryError(
            f"panel {month_key(panel.first_month)}..{month_key(panel.last_month)} "
            f"does not cover window {label}",
            operation=op,
            location=label,
        )

    block = np.ascontiguousarray(panel.values.loc[window_start:window_end].to_numpy(dtype=float).T)
    means = block.mean(axis=1)
    sigmas = block.std(axis=1, ddof=0)

    scale = np.maximum(np.abs(means), 1.0)
    flat = sigmas <= _RELATIVE_SIGMA_FLOOR * scale
    if flat.any():
        constant = [panel.economies[i] for i in np.flatnonzero(flat)]
        raise ZeroVarianceError(
            f"constant EPU over window for {', '.join(constant)}",
            operation=op,
            location=label,
        )

    x = (block - means[:, None]) / sigmas[:, None]
    return NormalizedWindow(
        window_end=window_end,
        window_size=window_size,
        economies=panel.economies,
        x=x,
        means=means,
        sigmas=sigmas,
    )


def correlation_matrix(nw: NormalizedWindow) -> CorrelationMatrix:
    """Pairwise cross-correlations <x_i x_j> over the window"""
    x = nw.x
    c = (x @ x.T) / nw.window_size
    c = 0.5 * (c + c.T)
    np.fill_diagonal(c, 1.0)
    np.clip(c, -1.0, 1.0, out=c)
    return CorrelationMatrix(entries=c, economies=list(nw.economies))
