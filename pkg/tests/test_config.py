from spectral_nodes import config


def test_threads_setting(settings):
    setattr(settings, "SPECTRAL_NODES", {"THREADS": 3})
    assert config.threads() == 3


def test_threads_falls_back_to_environment(settings, monkeypatch):
    setattr(settings, "SPECTRAL_NODES", {})
    monkeypatch.setenv("SPECTRAL_NODES_THREADS", "5")
    assert config.threads() == 5


def test_threads_is_at_least_one(settings):
    setattr(settings, "SPECTRAL_NODES", {"THREADS": -2})
    assert config.threads() == 1


def test_default_grid_setting(settings):
    assert config.default_grid() == 2001
    setattr(settings, "SPECTRAL_NODES", {"DEFAULT_GRID": 101})
    assert config.default_grid() == 101


def test_quadrature_order_setting(settings):
    assert config.quadrature_order() == 24
    setattr(settings, "SPECTRAL_NODES", {"QUADRATURE_ORDER": 40})
    assert config.quadrature_order() == 40


def test_scan_density_settings(settings):
    assert config.product_scan_density() == 4096
    assert config.lebesgue_scan_density() == 1024
    setattr(
        settings,
        "SPECTRAL_NODES",
        {"PRODUCT_SCAN_DENSITY": 16, "LEBESGUE_SCAN_DENSITY": 32},
    )
    assert config.product_scan_density() == 16
    assert config.lebesgue_scan_density() == 32


def test_condition_warning_setting(settings):
    assert config.condition_warning() == 1e12
    setattr(settings, "SPECTRAL_NODES", {"CONDITION_WARNING": 1e6})
    assert config.condition_warning() == 1e6


def test_lebesgue_table_degrees(settings):
    assert config.lebesgue_table_degrees() == (6, 8, 10, 12, 14, 16, 18)
    setattr(settings, "SPECTRAL_NODES", {"LEBESGUE_TABLE_DEGREES": [4, 6]})
    assert config.lebesgue_table_degrees() == (4, 6)
