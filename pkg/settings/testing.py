from settings.base import *  # noqa


SPECTRAL_NODES = {
    "THREADS": 1,
}

LOGGING["loggers"]["spectral_nodes"]["level"] = "DEBUG"  # noqa: F405
