"""Barycentric Lagrange interpolation, Lebesgue functions and interpolation error curves.

Interpolants use the second (true) barycentric form. A point within 1e-15 (relative) of a
node returns the sample at that node, so interpolants reproduce their data exactly.
"""
import logging
import math
from dataclasses import dataclass

import numpy as np

from spectral_nodes import config
from spectral_nodes.exceptions import LengthMismatchError
from spectral_nodes.functions import resolve_function
from spectral_nodes.nodes import NodeFamily, NodeSet, node_product_max
from spectral_nodes.utils import as_float_array, parallel_map, refine_maximum, scalar_or_array


logger = logging.getLogger(__name__)

_COINCIDENCE = 1e-15
_RESCALE_ABOVE = 40


def barycentric_weights(points):
    """
    w_i = 1 / prod_{j != i} (c_i - c_j).

    Above s = 40 the differences are multiplied by 4 / (interval length) and the weights
    are normalized by their largest magnitude, which keeps them finite. Any common factor
    cancels in the barycentric quotient and in the ratios w_j / w_i.
    """
    points = as_float_array(points)
    differences = points[:, np.newaxis] - points
    rescale = len(points) - 1 > _RESCALE_ABOVE
    if rescale:
        differences = differences * (4.0 / (points.max() - points.min()))
    np.fill_diagonal(differences, 1.0)
    weights = 1.0 / np.prod(differences, axis=1)
    if rescale:
        weights = weights / np.max(np.abs(weights))
    return weights


@dataclass(frozen=True, eq=False)
class Interpolant:
    nodes: NodeSet
    values: np.ndarray
    weights: np.ndarray

    def __call__(self, x):
        return evaluate(self, x)


@dataclass(frozen=True)
class LebesgueReport:
    """
    `lambda_paper` is max F - 1, the convention of the published Lebesgue table;
    `lambda_conventional` is max F itself.
    """

    family: NodeFamily
    s: int
    max_F: float
    argmax: float
    lambda_paper: float
    lambda_conventional: float


@dataclass(frozen=True, eq=False)
class Curve:
    x: np.ndarray
    values: np.ndarray

    def __iter__(self):
        return zip(self.x.tolist(), self.values.tolist())

    def __len__(self):
        return len(self.x)

    def max(self):
        return float(np.max(self.values))


def build_interpolant(nodes, values):
    values = np.array(values, dtype=float)
    if values.shape != (len(nodes),):
        raise LengthMismatchError(f"expected {len(nodes)} sample values, got {values.shape}")
    values.setflags(write=False)
    weights = barycentric_weights(nodes.nodes)
    weights.setflags(write=False)
    return Interpolant(nodes=nodes, values=values, weights=weights)


def lagrange_basis(nodes, x, weights=None):
    """
    Values of every Lagrange basis polynomial at `x`.

    Returns an array of shape (len(x), s+1), or (s+1,) for a scalar `x`.
    """
    points = np.atleast_1d(as_float_array(x))
    c = nodes.nodes
    if weights is None:
        weights = barycentric_weights(c)

    differences = points[:, np.newaxis] - c
    exact = np.abs(differences) <= _COINCIDENCE * np.maximum(1.0, np.abs(c))
    with np.errstate(divide="ignore", invalid="ignore"):
        terms = weights / differences
        basis = terms / terms.sum(axis=1, keepdims=True)

    hits = exact.any(axis=1)
    basis[hits] = exact[hits]
    if np.ndim(x) == 0:
        return basis[0]
    return basis


def evaluate(ip, x):
    basis = lagrange_basis(ip.nodes, x, weights=ip.weights)
    return scalar_or_array(basis @ ip.values, x)


def lebesgue_function(nodes, x, weights=None):
    """F(x) = sum_k |l_k(x)|."""
    basis = lagrange_basis(nodes, x, weights=weights)
    return scalar_or_array(np.abs(basis).sum(axis=-1), x)


def lebesgue_function_curve(nodes, grid_size):
    grid = np.linspace(*nodes.interval, grid_size)
    return Curve(x=grid, values=lebesgue_function(nodes, grid))


def lebesgue_constant(nodes):
    """
    Maximize F gap by gap: a fixed scan of each gap between consecutive nodes (and the
    interval ends) followed by a bounded scalar refinement of the best sample.
    """
    weights = barycentric_weights(nodes.nodes)
    density = config.lebesgue_scan_density()
    edges = np.unique(np.concatenate([[nodes.interval[0]], nodes.nodes, [nodes.interval[1]]]))

    def func(t):
        return lebesgue_function(nodes, t, weights=weights)

    def gap_maximum(gap):
        grid = np.linspace(gap[0], gap[1], density + 2)
        values = func(grid)
        return refine_maximum(func, grid, values, int(np.argmax(values)), xatol=1e-9)

    candidates = parallel_map(gap_maximum, zip(edges[:-1], edges[1:]))
    argmax, max_F = max(candidates, key=lambda candidate: candidate[1])
    max_F = max(max_F, 1.0)
    logger.debug(
        "lebesgue %s s=%d: max F %.12g at %.12g", nodes.family.value, nodes.s, max_F, argmax
    )
    return LebesgueReport(
        family=nodes.family,
        s=nodes.s,
        max_F=max_F,
        argmax=argmax,
        lambda_paper=max_F - 1.0,
        lambda_conventional=max_F,
    )


def lebesgue_asymptotic(family, n):
    """Leading asymptotics of the conventional Lebesgue constant for CGL and scaled Chebyshev."""
    family = NodeFamily(family)
    base = math.log(n) + np.euler_gamma + math.log(8.0 / math.pi)
    if family is NodeFamily.CGL:
        return 2.0 / math.pi * base
    if family is NodeFamily.SCALED_CHEB:
        return 2.0 / math.pi * (base - 2.0 / 3.0)
    raise ValueError(f"no Lebesgue asymptotics for family {family.value}")


def lebesgue_optimal_asymptotic(n):
    """Leading asymptotics of the smallest Lebesgue constant over all node sets."""
    return 2.0 / math.pi * (math.log(n) + np.euler_gamma + math.log(4.0 / math.pi))


def interp_error_curve(nodes, f, grid_size):
    """|f(x) - L(f)(x)| on a uniform grid of the node interval."""
    if grid_size < 2:
        raise ValueError(f"grid_size must be at least 2, got {grid_size}")
    target = resolve_function(f)
    interpolant = build_interpolant(nodes, target(nodes.nodes))
    grid = np.linspace(*nodes.interval, grid_size)
    return Curve(x=grid, values=np.abs(target(grid) - interpolant(grid)))


def interpolation_error_bound(nodes, bound):
    """M / (s+1)! * max |W|, valid for any f with |f^{(s+1)}| <= M."""
    return bound / math.factorial(nodes.s + 1) * node_product_max(nodes).value
