"""Spectral differentiation matrices d_ij = l'_j(c_i) for arbitrary node sets.

Node sets are ascending; the explicit Chebyshev-Gauss-Lobatto matrix is built in the
classical descending order cos(i pi / s), and every matrix records the ordering of its rows.
"""
import enum
import math
from dataclasses import dataclass

import numpy as np

from spectral_nodes.functions import resolve_function
from spectral_nodes.interp import Curve, barycentric_weights
from spectral_nodes.nodes import NodeFamily, NodeSet, generate, node_product_derivative


class Ordering(enum.Enum):
    ASCENDING = "ascending"
    DESCENDING = "descending"


@dataclass(frozen=True, eq=False)
class DiffMatrix:
    nodes: NodeSet
    entries: np.ndarray
    ordering: Ordering = Ordering.ASCENDING

    @property
    def points(self):
        """The nodes in the order of the matrix rows."""
        if self.ordering is Ordering.DESCENDING:
            return self.nodes.nodes[::-1]
        return self.nodes.nodes

    @property
    def size(self):
        return self.entries.shape[0]

    def apply(self, values):
        """Map samples at `points` to samples of the interpolant's derivative."""
        return self.entries @ np.asarray(values, dtype=float)

    def ascending(self):
        if self.ordering is Ordering.ASCENDING:
            return self
        return DiffMatrix(self.nodes, _frozen(self.entries[::-1, ::-1]), Ordering.ASCENDING)

    def row_sums(self):
        return self.entries.sum(axis=1)


def build_general(nodes, ordering=Ordering.ASCENDING):
    """
    Off-diagonal entries (w_j / w_i) / (c_i - c_j) from the barycentric weights; diagonal
    entries sum_{k != i} 1 / (c_i - c_k).
    """
    ordering = Ordering(ordering)
    points = nodes.nodes[::-1] if ordering is Ordering.DESCENDING else nodes.nodes
    weights = barycentric_weights(points)

    differences = points[:, np.newaxis] - points
    np.fill_diagonal(differences, 1.0)
    entries = (weights / weights[:, np.newaxis]) / differences

    reciprocals = 1.0 / differences
    np.fill_diagonal(reciprocals, 0.0)
    np.fill_diagonal(entries, reciprocals.sum(axis=1))
    return DiffMatrix(nodes, _frozen(entries), ordering)


def build_cgl_explicit(s):
    """Closed-form matrix on c_i = cos(i pi / s), rows in that (descending) order."""
    nodes = generate(NodeFamily.CGL, s)
    c = nodes.nodes[::-1]

    a = np.ones(s + 1)
    a[0] = a[-1] = 2.0
    index = np.arange(s + 1)
    signs = np.where((index[:, np.newaxis] + index) % 2 == 0, 1.0, -1.0)

    differences = c[:, np.newaxis] - c
    np.fill_diagonal(differences, 1.0)
    entries = (a[:, np.newaxis] / a) * signs / differences

    interior = c[1:-1]
    entries[index[1:-1], index[1:-1]] = -interior / (2.0 * (1.0 - interior**2))
    corner = (2.0 * s * s + 1.0) / 6.0
    entries[0, 0] = corner
    entries[s, s] = -corner
    return DiffMatrix(nodes, _frozen(entries), Ordering.DESCENDING)


def derivative_error_at_nodes(family, s, f):
    """|f'(c_i) - (D f)_i| at every node of the `family` node set."""
    target = resolve_function(f)
    nodes = generate(family, s)
    matrix = build_general(nodes)
    approximation = matrix.apply(target(nodes.nodes))
    errors = np.abs(target.derivative(nodes.nodes) - approximation)
    return Curve(x=nodes.nodes.copy(), values=errors)


def derivative_error_bound(nodes, bound):
    """M / (s+1)! * |W'(c_k)| at every node, for any f with |f^{(s+1)}| <= M."""
    factor = bound / math.factorial(nodes.s + 1)
    values = factor * np.abs(node_product_derivative(nodes, nodes.nodes))
    return Curve(x=nodes.nodes.copy(), values=values)


def _frozen(array):
    array = np.array(array, dtype=float)
    array.setflags(write=False)
    return array
