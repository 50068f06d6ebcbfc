"""Node distributions on [-1, 1] and their affine images.

Closed-form families are computed from their cosine formulas. ND1, ND2 and the scaled-Q
family are the zeros of the node polynomials in `spectral_nodes.chebyshev`, located by Brent's
method on sign-change brackets between consecutive zeros of T_s. Every family is symmetric,
so only the positive half is computed and the rest is mirrored.
"""
import enum
import logging
import math
from dataclasses import dataclass, field
from typing import NamedTuple, Tuple

import numpy as np
from scipy import optimize

from spectral_nodes import config
from spectral_nodes.chebyshev import NodePolynomial, NodePolynomialKind
from spectral_nodes.exceptions import BracketError, IntervalError, InvalidDegreeError, ParityError
from spectral_nodes.utils import as_float_array, refine_maximum, scalar_or_array


logger = logging.getLogger(__name__)

CANONICAL_INTERVAL = (-1.0, 1.0)

_ROOT_XTOL = 5e-16
_ROOT_RTOL = 4 * np.finfo(float).eps
_RESIDUAL_TOLERANCE = 1e-13
_OUTER_BRACKET = (1.0, 1.5)


class NodeFamily(enum.Enum):
    EQUI = "equi"
    CHEB_ZEROS = "cheb-zeros"
    CGL = "cgl"
    SCALED_CHEB = "scaled-cheb"
    ND1 = "nd1"
    ND2 = "nd2"
    QSCALED = "q-scaled"

    @property
    def parity(self):
        """1 for families defined for odd s only, 0 for even s only, None otherwise."""
        if self is NodeFamily.ND1:
            return 1
        if self in (NodeFamily.ND2, NodeFamily.QSCALED):
            return 0
        return None

    @property
    def includes_endpoints(self):
        return self is not NodeFamily.CHEB_ZEROS

    def check(self, s):
        if int(s) != s or s < 1:
            raise InvalidDegreeError(f"s must be a positive integer, got {s}")
        if self.parity is not None and s % 2 != self.parity:
            wanted = "odd" if self.parity else "even"
            raise ParityError(f"family {self.value} needs {wanted} s, got s={s}")
        if self is NodeFamily.ND1 and s < 3:
            raise InvalidDegreeError(f"family {self.value} needs s >= 3, got s={s}")


@dataclass(frozen=True, eq=False)
class NodeSet:
    family: NodeFamily
    s: int
    nodes: np.ndarray
    interval: Tuple[float, float] = CANONICAL_INTERVAL
    scale: float = field(default=1.0)

    def __post_init__(self):
        nodes = np.array(self.nodes, dtype=float)
        nodes.setflags(write=False)
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "interval", (float(self.interval[0]), float(self.interval[1])))

        a, b = self.interval
        if not a < b:
            raise IntervalError(f"interval ({a}, {b}) is empty")
        if nodes.shape != (self.s + 1,):
            raise ValueError(f"expected {self.s + 1} nodes, got shape {nodes.shape}")
        if np.any(np.diff(nodes) <= 0.0):
            raise ValueError(f"{self.family.value} nodes are not strictly increasing")

    def __len__(self):
        return len(self.nodes)

    def __iter__(self):
        return iter(self.nodes)

    def __getitem__(self, index):
        return self.nodes[index]

    @property
    def is_canonical(self):
        return self.interval == CANONICAL_INTERVAL

    @property
    def midpoint(self):
        return 0.5 * (self.interval[0] + self.interval[1])


class ProductMaximum(NamedTuple):
    value: float
    argmax: float


def generate(family, s):
    """Return the `family` node set with s+1 nodes on [-1, 1], sorted ascending."""
    family = NodeFamily(family)
    family.check(s)
    half, scale = _HALF_BUILDERS[family](s)
    return NodeSet(family=family, s=s, nodes=_mirror(half, s), scale=scale)


def map_to_interval(ns, a, b):
    a, b = float(a), float(b)
    if not a < b:
        raise IntervalError(f"interval ({a}, {b}) is empty")
    if (a, b) == ns.interval:
        return ns

    alpha, beta = ns.interval
    nodes = a + (b - a) * (ns.nodes - alpha) / (beta - alpha)
    if ns.family.includes_endpoints:
        nodes[0], nodes[-1] = a, b
    return NodeSet(family=ns.family, s=ns.s, nodes=nodes, interval=(a, b), scale=ns.scale)


def node_product(ns, x):
    """W(x) = prod_i (x - c_i)."""
    points = as_float_array(x)
    return scalar_or_array(np.prod(points[..., np.newaxis] - ns.nodes, axis=-1), x)


def node_product_derivative(ns, x):
    """W'(x) by the product rule, valid at the nodes themselves."""
    points = as_float_array(x)
    differences = points[..., np.newaxis] - ns.nodes
    total = np.zeros(points.shape)
    for k in range(len(ns)):
        total += np.prod(np.delete(differences, k, axis=-1), axis=-1)
    return scalar_or_array(total, x)


def node_product_max(ns):
    """Return the maximum of |W| over the node interval and where it is attained."""
    a, b = ns.interval
    grid = np.linspace(a, b, config.product_scan_density() * (ns.s + 1))
    values = np.abs(node_product(ns, grid))
    index = int(np.argmax(values))
    argmax, value = refine_maximum(
        lambda t: abs(node_product(ns, t)), grid, values, index, xatol=1e-12
    )
    return ProductMaximum(value=value, argmax=argmax)


def minimax_value(s):
    """
    The smallest possible max |W| on [-1, 1] over node sets that contain +-1, attained by the
    scaled Chebyshev nodes: 2^{-s} [cos(pi / (2(s+1)))]^{-(s+1)}.
    """
    return math.ldexp(math.cos(math.pi / (2 * (s + 1))) ** -(s + 1), -s)


def _mirror(half, s):
    """Build the full ascending node array from its positive half."""
    half = np.asarray(half, dtype=float)
    middle = [0.0] if s % 2 == 0 else []
    return np.concatenate([-half[::-1], middle, half])


def _equi_half(s):
    indices = np.arange(s // 2 + 1, s + 1)
    return (2.0 * indices - s) / s, 1.0


def _cgl_half(s):
    indices = np.arange((s + 1) // 2 - 1, -1, -1)
    half = np.cos(indices * np.pi / s)
    half[-1] = 1.0
    return half, 1.0


def _cheb_zeros_half(s):
    indices = np.arange((s + 1) // 2 - 1, -1, -1)
    return np.cos((2 * indices + 1) * np.pi / (2 * (s + 1))), 1.0


def _scaled_cheb_half(s):
    zeros, _ = _cheb_zeros_half(s)
    # the largest zero is cos(pi / (2(s+1)))
    stretch = zeros[-1]
    half = zeros / stretch
    half[-1] = 1.0
    return half, 1.0 / stretch


def _nd1_half(s):
    poly = NodePolynomial(NodePolynomialKind.P, s)
    roots = [_find_root(poly, lo, hi) for lo, hi in _interior_brackets(s)]
    return np.array(sorted(roots) + [1.0]), 1.0


def _nd2_half(s):
    poly = NodePolynomial(NodePolynomialKind.QTILDE, s)
    roots = [_find_root(poly, lo, hi) for lo, hi in _interior_brackets(s)]
    return np.array(sorted(roots) + [1.0]), 1.0


def _qscaled_half(s):
    poly = NodePolynomial(NodePolynomialKind.QSCALED, s)
    roots = sorted(_find_root(poly, lo, hi) for lo, hi in _interior_brackets(s))
    outer = _find_root(poly, *_OUTER_BRACKET)
    half = np.array(roots + [outer]) / outer
    half[-1] = 1.0
    return half, outer


def _interior_brackets(s):
    """
    Brackets [x_{i+1}, x_i] around the positive interior zeros, where x_i = cos((2i+1)pi/(2s))
    are the zeros of T_s. The node polynomials alternate in sign on these points.
    """
    points = np.cos((2 * np.arange(s) + 1) * np.pi / (2 * s))
    count = (s - 1) // 2 if s % 2 else s // 2 - 1
    brackets = []
    for i in range(count):
        brackets.append((max(float(points[i + 1]), 0.0), float(points[i])))
    return brackets


def _find_root(poly, lo, hi):
    f_lo, f_hi = poly(lo), poly(hi)
    if np.sign(f_lo) * np.sign(f_hi) >= 0:
        raise BracketError(
            f"no sign change for {poly.kind.value} (s={poly.s}) on [{lo!r}, {hi!r}]: "
            f"values {f_lo!r}, {f_hi!r}"
        )

    root = optimize.brentq(poly, lo, hi, xtol=_ROOT_XTOL, rtol=_ROOT_RTOL, maxiter=200)
    residual = abs(poly(root))
    logger.debug(
        "%s s=%d: root %r in [%r, %r], residual %.3g",
        poly.kind.value,
        poly.s,
        root,
        lo,
        hi,
        residual,
    )
    if residual > _RESIDUAL_TOLERANCE * max(1.0, poly.derivative_scale):
        raise BracketError(
            f"root {root!r} of {poly.kind.value} (s={poly.s}) has residual {residual:.3g}"
        )
    return root


_HALF_BUILDERS = {
    NodeFamily.EQUI: _equi_half,
    NodeFamily.CHEB_ZEROS: _cheb_zeros_half,
    NodeFamily.CGL: _cgl_half,
    NodeFamily.SCALED_CHEB: _scaled_cheb_half,
    NodeFamily.ND1: _nd1_half,
    NodeFamily.ND2: _nd2_half,
    NodeFamily.QSCALED: _qscaled_half,
}
