"""Dense query grid construction."""

import logging

import numpy as np

from sensorfit.exceptions import TooFewPointsError
from sensorfit.series.models import ArrayLike

logger = logging.getLogger(__name__)


def make_dense_grid(times: ArrayLike, n_points: int) -> np.ndarray:
    """Build n_points evenly spaced times from t0 - (t1 - t0) to t_last.

    The first grid point lies one sample step before the data; callers that
    report on the grid should flag it as extrapolated.

    Args:
        times: Strictly increasing sample times, at least two.
        n_points: Number of grid points, at least two.

    Returns:
        Float64 array of n_points increasing times.

    Raises:
        TooFewPointsError: If times or n_points is below two.
    """
    times = np.asarray(times, dtype=np.float64)
    if times.size < 2:
        raise TooFewPointsError(2, int(times.size), "make_dense_grid times")
    if n_points < 2:
        raise TooFewPointsError(2, int(n_points), "make_dense_grid n_points")

    start = times[0] - (times[1] - times[0])
    grid = np.linspace(start, times[-1], int(n_points))
    logger.debug("dense grid of %d points on [%r, %r]", n_points, grid[0], grid[-1])
    return grid


def extrapolated_mask(grid: ArrayLike, times: ArrayLike) -> np.ndarray:
    """Boolean mask of grid points outside [times[0], times[-1]]."""
    grid = np.asarray(grid, dtype=np.float64)
    times = np.asarray(times, dtype=np.float64)
    return (grid < times[0]) | (grid > times[-1])
