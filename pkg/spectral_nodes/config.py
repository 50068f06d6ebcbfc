import os

from django.conf import settings


def threads():
    value = _settings().get("THREADS") or os.getenv("SPECTRAL_NODES_THREADS")
    if not value:
        return os.cpu_count() or 1
    return max(1, int(value))


def default_grid():
    return _settings().get("DEFAULT_GRID", 2001)


def quadrature_order():
    return _settings().get("QUADRATURE_ORDER", 24)


def product_scan_density():
    return _settings().get("PRODUCT_SCAN_DENSITY", 4096)


def lebesgue_scan_density():
    return _settings().get("LEBESGUE_SCAN_DENSITY", 1024)


def condition_warning():
    return _settings().get("CONDITION_WARNING", 1e12)


def lebesgue_table_degrees():
    return tuple(_settings().get("LEBESGUE_TABLE_DEGREES", (6, 8, 10, 12, 14, 16, 18)))


def _settings():
    # library callers may never configure Django
    if not settings.configured:
        return {}
    return getattr(settings, "SPECTRAL_NODES", {})
