import math

import numpy as np
import pytest

from spectral_nodes.chebyshev import (
    NodePolynomial,
    NodePolynomialKind,
    cheb_eval,
    node_poly_derivative_eval,
)
from spectral_nodes.exceptions import IntervalError, InvalidDegreeError, ParityError
from spectral_nodes.nodes import (
    NodeFamily,
    NodeSet,
    generate,
    map_to_interval,
    minimax_value,
    node_product,
    node_product_derivative,
    node_product_max,
)


SQRT_HALF = math.sqrt(0.5)

VALID = [
    (NodeFamily.EQUI, 7),
    (NodeFamily.CHEB_ZEROS, 6),
    (NodeFamily.CGL, 9),
    (NodeFamily.SCALED_CHEB, 10),
    (NodeFamily.ND1, 11),
    (NodeFamily.ND2, 12),
    (NodeFamily.QSCALED, 14),
]


def chebyshev_zeros(s):
    """Zeros of T_s in ascending order."""
    return np.sort(np.cos((2 * np.arange(s) + 1) * np.pi / (2 * s)))


class TestGenerate:
    @pytest.mark.parametrize(
        "family, s, expected",
        [
            (NodeFamily.CGL, 2, [-1.0, 0.0, 1.0]),
            (NodeFamily.SCALED_CHEB, 2, [-1.0, 0.0, 1.0]),
            (NodeFamily.ND1, 3, [-1.0, -SQRT_HALF, SQRT_HALF, 1.0]),
            (NodeFamily.ND2, 2, [-1.0, 0.0, 1.0]),
            (NodeFamily.QSCALED, 2, [-1.0, 0.0, 1.0]),
            (NodeFamily.EQUI, 4, [-1.0, -0.5, 0.0, 0.5, 1.0]),
            (NodeFamily.CGL, 4, [-1.0, -SQRT_HALF, 0.0, SQRT_HALF, 1.0]),
            (NodeFamily.ND2, 4, [-1.0, -math.sqrt(2 / 3), 0.0, math.sqrt(2 / 3), 1.0]),
            (NodeFamily.CHEB_ZEROS, 1, [-SQRT_HALF, SQRT_HALF]),
        ],
    )
    def test_examples(self, family, s, expected):
        np.testing.assert_allclose(generate(family, s).nodes, expected, rtol=0, atol=1e-14)

    def test_nd1_s5_closed_form(self):
        # P = (x^2 - 1)(y^2 - 7y/8 + 1/16) with y = x^2
        squares = np.array([(7 - math.sqrt(33)) / 16, (7 + math.sqrt(33)) / 16])
        nodes = generate(NodeFamily.ND1, 5).nodes
        np.testing.assert_allclose(nodes[3:5], np.sqrt(squares), atol=1e-14)

    def test_qscaled_s2_scale(self):
        assert generate(NodeFamily.QSCALED, 2).scale == pytest.approx(math.sqrt(1.5), abs=1e-14)

    @pytest.mark.parametrize("family, s", VALID)
    def test_node_set_shape(self, family, s):
        ns = generate(family, s)
        assert ns.family is family
        assert ns.s == s
        assert len(ns) == s + 1
        assert ns.is_canonical
        assert np.all(np.diff(ns.nodes) > 0.0)

    @pytest.mark.parametrize("family, s", VALID)
    def test_endpoints_are_exact(self, family, s):
        ns = generate(family, s)
        if family is NodeFamily.CHEB_ZEROS:
            assert -1.0 < ns[0] and ns[-1] < 1.0
        else:
            assert ns[0] == -1.0
            assert ns[-1] == 1.0

    @pytest.mark.parametrize("family, s", VALID)
    def test_symmetric(self, family, s):
        nodes = generate(family, s).nodes
        np.testing.assert_allclose(nodes + nodes[::-1], 0.0, atol=1e-14)

    def test_nodes_are_read_only(self, cgl_nodes):
        with pytest.raises(ValueError):
            cgl_nodes.nodes[0] = 0.0

    def test_accepts_family_value(self):
        assert generate("nd1", 3).family is NodeFamily.ND1

    @pytest.mark.parametrize(
        "family, s, error",
        [
            (NodeFamily.ND1, 4, ParityError),
            (NodeFamily.ND1, 1, InvalidDegreeError),
            (NodeFamily.ND2, 3, ParityError),
            (NodeFamily.QSCALED, 5, ParityError),
            (NodeFamily.CGL, 0, InvalidDegreeError),
            (NodeFamily.EQUI, 2.5, InvalidDegreeError),
        ],
    )
    def test_invalid_degree(self, family, s, error):
        with pytest.raises(error):
            generate(family, s)


class TestRootFamilies:
    @pytest.mark.parametrize("s", [3, 5, 7, 9, 11, 15, 21])
    def test_nd1_residuals(self, s):
        poly = NodePolynomial(NodePolynomialKind.P, s)
        assert np.max(np.abs(poly(generate(NodeFamily.ND1, s).nodes))) <= 1e-12

    @pytest.mark.parametrize("s", [2, 4, 6, 10, 16, 20])
    def test_nd2_residuals(self, s):
        poly = NodePolynomial(NodePolynomialKind.QTILDE, s)
        assert np.max(np.abs(poly(generate(NodeFamily.ND2, s).nodes))) <= 1e-12

    @pytest.mark.parametrize("s", [2, 4, 8, 14])
    def test_qscaled_are_scaled_roots(self, s):
        ns = generate(NodeFamily.QSCALED, s)
        poly = NodePolynomial(NodePolynomialKind.QSCALED, s)
        assert ns.scale > 1.0
        assert np.max(np.abs(poly(ns.scale * ns.nodes))) <= 1e-12

    @pytest.mark.parametrize(
        "family, s",
        [(NodeFamily.ND1, 5), (NodeFamily.ND1, 9), (NodeFamily.ND2, 6), (NodeFamily.ND2, 12)],
    )
    def test_interlace_chebyshev_zeros(self, family, s):
        nodes = generate(family, s).nodes
        zeros = chebyshev_zeros(s)
        for k in range(1, s):
            assert zeros[k - 1] <= nodes[k] <= zeros[k]

    @pytest.mark.parametrize("s", [3, 5, 7, 9, 11])
    def test_nd1_derivative_equioscillates(self, s):
        poly = NodePolynomial(NodePolynomialKind.P, s)
        peak = (s + 1) / 2 ** (s - 1)
        grid = np.linspace(-1.0, 1.0, 20001)
        assert np.max(np.abs(node_poly_derivative_eval(poly, grid))) == pytest.approx(
            peak, abs=1e-10
        )

        extrema = np.cos(np.arange(s + 1) * np.pi / s)
        values = node_poly_derivative_eval(poly, extrema)
        np.testing.assert_allclose(np.abs(values), peak, atol=1e-10)
        assert np.all(np.sign(values[1:]) == -np.sign(values[:-1]))

    @pytest.mark.parametrize("s", [2, 4, 6, 10])
    def test_qscaled_product_derivative(self, s):
        # W(x) = d^{-(s+1)} Q(d x), so W'(x) = d^{-s} (s+1) / 2^{s-1} T_s(d x)
        ns = generate(NodeFamily.QSCALED, s)
        d = ns.scale
        x = np.linspace(-0.97, 0.97, 17)
        expected = d**-s * (s + 1) / 2 ** (s - 1) * cheb_eval(s, d * x)
        np.testing.assert_allclose(node_product_derivative(ns, x), expected, atol=1e-13)

    @pytest.mark.parametrize("s", [1, 2, 5, 8, 13])
    def test_scaled_cheb_divides_chebyshev_zeros(self, s):
        scaled = generate(NodeFamily.SCALED_CHEB, s)
        zeros = generate(NodeFamily.CHEB_ZEROS, s)
        np.testing.assert_allclose(
            scaled.nodes, zeros.nodes / math.cos(math.pi / (2 * (s + 1))), rtol=0, atol=1e-15
        )
        assert scaled.scale == pytest.approx(1.0 / math.cos(math.pi / (2 * (s + 1))))


class TestMapToInterval:
    def test_midpoint_maps_to_midpoint(self):
        mapped = map_to_interval(generate(NodeFamily.CGL, 2), 0.0, 1.0)
        np.testing.assert_array_equal(mapped.nodes, [0.0, 0.5, 1.0])
        assert mapped.interval == (0.0, 1.0)
        assert mapped.midpoint == 0.5
        assert not mapped.is_canonical

    def test_identity_map_is_unchanged(self, nd1_nodes):
        assert map_to_interval(nd1_nodes, -1, 1) is nd1_nodes

    def test_equispaced(self):
        mapped = map_to_interval(generate(NodeFamily.EQUI, 2), 0.0, 2.0)
        np.testing.assert_array_equal(mapped.nodes, [0.0, 1.0, 2.0])

    @pytest.mark.parametrize("family, s", VALID)
    def test_preserves_family_and_endpoints(self, family, s):
        mapped = map_to_interval(generate(family, s), 0.0, 3.0)
        assert mapped.family is family
        assert mapped.s == s
        assert np.all(np.diff(mapped.nodes) > 0.0)
        np.testing.assert_allclose(mapped.nodes + mapped.nodes[::-1], 3.0, atol=1e-14)
        if family.includes_endpoints:
            assert mapped[0] == 0.0
            assert mapped[-1] == 3.0

    def test_keeps_scale(self):
        ns = generate(NodeFamily.QSCALED, 4)
        assert map_to_interval(ns, 0.0, 1.0).scale == ns.scale

    @pytest.mark.parametrize("a, b", [(1.0, 0.0), (0.5, 0.5)])
    def test_empty_interval(self, cgl_nodes, a, b):
        with pytest.raises(IntervalError):
            map_to_interval(cgl_nodes, a, b)

    def test_node_set_rejects_empty_interval(self):
        with pytest.raises(IntervalError):
            NodeSet(family=NodeFamily.EQUI, s=1, nodes=[0.0, 1.0], interval=(1.0, 1.0))

    def test_node_set_rejects_unsorted_nodes(self):
        with pytest.raises(ValueError):
            NodeSet(family=NodeFamily.EQUI, s=2, nodes=[-1.0, 0.5, 0.0])


class TestNodeProduct:
    def test_product_at_nodes_is_zero(self, nd2_nodes):
        np.testing.assert_array_equal(node_product(nd2_nodes, nd2_nodes.nodes), 0.0)

    def test_product_examples(self):
        ns = generate(NodeFamily.EQUI, 2)
        assert node_product(ns, 0.5) == pytest.approx(-0.375)
        assert node_product_derivative(ns, 0.0) == pytest.approx(-1.0)
        assert node_product_derivative(ns, 1.0) == pytest.approx(2.0)

    @pytest.mark.parametrize(
        "family, s, expected",
        [
            (NodeFamily.SCALED_CHEB, 1, 1.0),
            (NodeFamily.SCALED_CHEB, 5, 2**-5 * math.cos(math.pi / 12) ** -6),
            (NodeFamily.CHEB_ZEROS, 5, 2**-5),
        ],
    )
    def test_max_examples(self, family, s, expected):
        assert node_product_max(generate(family, s)).value == pytest.approx(expected, abs=1e-12)

    def test_max_location(self):
        assert node_product_max(generate(NodeFamily.SCALED_CHEB, 1)).argmax == pytest.approx(
            0.0, abs=1e-9
        )

    @pytest.mark.parametrize("s", range(1, 13))
    def test_scaled_cheb_attains_minimax_value(self, s):
        value = node_product_max(generate(NodeFamily.SCALED_CHEB, s)).value
        assert value == pytest.approx(minimax_value(s), abs=1e-10)

    @pytest.mark.parametrize("s", [3, 4, 5, 6])
    def test_scaled_cheb_is_locally_optimal(self, s):
        reference = generate(NodeFamily.SCALED_CHEB, s)
        best = node_product_max(reference).value
        rng = np.random.default_rng(20 + s)
        for _ in range(200):
            nodes = reference.nodes.copy()
            nodes[1:-1] += rng.uniform(-1e-2, 1e-2, size=s - 1)
            perturbed = NodeSet(family=NodeFamily.SCALED_CHEB, s=s, nodes=nodes)
            assert node_product_max(perturbed).value > best

    @pytest.mark.parametrize("s", [3, 5, 9])
    def test_endpoint_families_stay_above_minimax(self, s):
        for family in (NodeFamily.CGL, NodeFamily.EQUI, NodeFamily.ND1):
            assert node_product_max(generate(family, s)).value >= minimax_value(s) - 1e-12

    def test_minimax_value_small_cases(self):
        assert minimax_value(1) == pytest.approx(1.0)
        assert minimax_value(2) == pytest.approx(0.25 * math.cos(math.pi / 6) ** -3)
