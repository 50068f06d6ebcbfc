import pytest

from spectral_nodes.functions import functions, problems
from spectral_nodes.nodes import NodeFamily, generate


@pytest.fixture(autouse=True)
def cleanup_registries():
    """
    Builtin registries are module level. This fixture drops anything a test registers
    and restores anything a test unregisters.
    """
    saved = {registry: dict(registry._entries) for registry in (functions, problems)}
    try:
        yield
    finally:
        for registry, entries in saved.items():
            registry._entries.clear()
            registry._entries.update(entries)


@pytest.fixture
def cgl_nodes():
    return generate(NodeFamily.CGL, 8)


@pytest.fixture
def nd1_nodes():
    return generate(NodeFamily.ND1, 9)


@pytest.fixture
def nd2_nodes():
    return generate(NodeFamily.ND2, 10)
