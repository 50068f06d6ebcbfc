"""Collocation for first-kind Volterra equations int_0^t K(t, xi) u(xi) dxi = f(t).

u is replaced by its Lagrange interpolant on nodes spanning [0, T] and the equation is
enforced at every node. At c_0 = 0 the collocation equation degenerates to 0 = 0, so that row
is replaced by the differentiated equation at t = 0: K(0, 0) u(0) = f'(0).
"""
import logging
from dataclasses import dataclass
from typing import Callable, NamedTuple

import numpy as np
from scipy import linalg

from spectral_nodes import config
from spectral_nodes.exceptions import (
    IntervalError,
    KernelSingularError,
    QuadratureFailureError,
    SingularMatrixError,
)
from spectral_nodes.functions import resolve_problem
from spectral_nodes.interp import Curve, barycentric_weights, lagrange_basis
from spectral_nodes.nodes import NodeSet, generate, map_to_interval
from spectral_nodes.utils import parallel_map


logger = logging.getLogger(__name__)

_PIVOT_TOLERANCE = 1e-14
_RESIDUAL_TOLERANCE = 1e-8


@dataclass(frozen=True, eq=False)
class VolterraProblem:
    """
    `kernel(t, xi)` must accept an array of xi for a scalar t; `rhs` and `rhs_derivative`
    must accept arrays of t.
    """

    kernel: Callable
    rhs: Callable
    rhs_derivative: Callable
    nodes: NodeSet

    def __post_init__(self):
        start, end = self.nodes.interval
        if start != 0.0:
            raise IntervalError(f"collocation nodes must start at t = 0, got {start}")
        if self.nodes[0] != 0.0 or self.nodes[-1] != end:
            raise IntervalError(
                f"family {self.nodes.family.value} does not place nodes on both ends of [0, {end}]"
            )

    @classmethod
    def from_family(cls, family, s, kernel, rhs, rhs_derivative, end=1.0):
        nodes = map_to_interval(generate(family, s), 0.0, end)
        return cls(kernel=kernel, rhs=rhs, rhs_derivative=rhs_derivative, nodes=nodes)

    @classmethod
    def from_benchmark(cls, benchmark, family, s, end=1.0):
        benchmark = resolve_problem(benchmark)
        return cls.from_family(
            family, s, benchmark.kernel, benchmark.rhs, benchmark.rhs_derivative, end=end
        )

    @property
    def end(self):
        return self.nodes.interval[1]


class Assembly(NamedTuple):
    matrix: np.ndarray
    rhs: np.ndarray


@dataclass(frozen=True, eq=False)
class VolterraSolution:
    nodes: NodeSet
    nodal_values: np.ndarray
    matrix: np.ndarray
    rhs: np.ndarray
    condition_estimate: float
    residual: float


def assemble(problem):
    """
    a_ij = int_0^{c_i} l_j(xi) K(c_i, xi) dxi by Gauss-Legendre quadrature on [0, c_i];
    row 0 is the unit row with right-hand side f'(0) / K(0, 0).
    """
    k00 = float(problem.kernel(0.0, 0.0))
    if k00 == 0.0 or not np.isfinite(k00):
        raise KernelSingularError(f"K(0, 0) = {k00!r}; the first collocation row is singular")

    nodes = problem.nodes
    c = nodes.nodes
    weights = barycentric_weights(c)
    abscissae, quadrature_weights = np.polynomial.legendre.leggauss(config.quadrature_order())

    def row(i):
        half = 0.5 * c[i]
        xi = half * (abscissae + 1.0)
        kernel_values = np.broadcast_to(np.asarray(problem.kernel(c[i], xi), dtype=float), xi.shape)
        integrand = kernel_values[:, np.newaxis] * lagrange_basis(nodes, xi, weights=weights)
        if not np.all(np.isfinite(integrand)):
            raise QuadratureFailureError(f"non-finite integrand on [0, {c[i]!r}] (row {i})")
        return half * (quadrature_weights @ integrand)

    matrix = np.zeros((len(c), len(c)))
    matrix[0, 0] = 1.0
    if len(c) > 1:
        matrix[1:] = parallel_map(row, range(1, len(c)))

    rhs = np.empty(len(c))
    rhs[0] = float(problem.rhs_derivative(0.0)) / k00
    rhs[1:] = problem.rhs(c[1:])
    logger.debug(
        "assembled %dx%d collocation system on %s nodes",
        len(c),
        len(c),
        nodes.family.value,
    )
    return Assembly(matrix=matrix, rhs=rhs)


def solve(problem):
    matrix, rhs = assemble(problem)
    lu, pivots = linalg.lu_factor(matrix)
    scale = np.max(np.abs(matrix))
    smallest_pivot = np.min(np.abs(np.diag(lu)))
    if smallest_pivot < _PIVOT_TOLERANCE * scale:
        raise SingularMatrixError(
            f"pivot {smallest_pivot:.3g} below {_PIVOT_TOLERANCE:g} * {scale:.3g}; "
            "the discretization is ill-posed"
        )

    values = linalg.lu_solve((lu, pivots), rhs)
    residual = float(np.max(np.abs(matrix @ values - rhs)))
    condition = float(np.linalg.cond(matrix, 1))

    logger.debug(
        "collocation matrix for %s s=%d: 1-norm condition %.3g, residual %.3g",
        problem.nodes.family.value,
        problem.nodes.s,
        condition,
        residual,
    )
    if residual > _RESIDUAL_TOLERANCE * max(1.0, float(np.max(np.abs(rhs)))):
        logger.warning("collocation residual %.3g exceeds the solve tolerance", residual)

    return VolterraSolution(
        nodes=problem.nodes,
        nodal_values=values,
        matrix=matrix,
        rhs=rhs,
        condition_estimate=condition,
        residual=residual,
    )


def error_report(problem, truth, solution=None):
    """|u(c_i) - u~_i| at every collocation node."""
    if solution is None:
        solution = solve(problem)
    c = problem.nodes.nodes
    exact = np.broadcast_to(np.asarray(truth(c), dtype=float), c.shape)
    return Curve(x=c.copy(), values=np.abs(exact - solution.nodal_values))


def benchmark_errors(benchmark, family, s, end=1.0):
    """Solve a builtin benchmark and return its solution with the per-node errors."""
    benchmark = resolve_problem(benchmark)
    problem = VolterraProblem.from_benchmark(benchmark, family, s, end=end)
    solution = solve(problem)
    return solution, error_report(problem, benchmark.solution, solution=solution)
