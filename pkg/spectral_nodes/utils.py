from concurrent.futures import ThreadPoolExecutor

import numpy as np
from scipy import optimize

from spectral_nodes import config


def parallel_map(func, items):
    """Map `func` over `items` on at most `config.threads()` threads, keeping input order."""
    items = list(items)
    workers = min(config.threads(), len(items))
    if workers <= 1:
        return [func(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, items))


def as_float_array(x):
    return np.asarray(x, dtype=float)


def scalar_or_array(result, x):
    if np.ndim(x) == 0:
        return float(result)
    return result


def refine_maximum(func, grid, values, index, xatol):
    """
    Polish the sampled maximum `values[index]` of `func` on the neighbouring grid cells.

    The sample itself is returned when refinement does not improve on it, so maxima sitting
    on a grid endpoint survive.
    """
    lo = grid[max(index - 1, 0)]
    hi = grid[min(index + 1, len(grid) - 1)]
    best_x, best_value = float(grid[index]), float(values[index])
    if hi <= lo:
        return best_x, best_value

    result = optimize.minimize_scalar(
        lambda t: -func(t), bounds=(lo, hi), method="bounded", options={"xatol": xatol}
    )
    if -result.fun > best_value:
        return float(result.x), float(-result.fun)
    return best_x, best_value
