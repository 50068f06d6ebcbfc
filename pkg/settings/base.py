import os


BASE_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))

SECRET_KEY = "supersecret"

INSTALLED_APPS = [
    "spectral_nodes",
]

DATABASES = {"default": {"ENGINE": "django.db.backends.dummy"}}

SPECTRAL_NODES = {
    "THREADS": os.getenv("SPECTRAL_NODES_THREADS"),
    "DEFAULT_GRID": 2001,
    "QUADRATURE_ORDER": 24,
    "CONDITION_WARNING": 1e12,
}

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "plain": {"format": "%(levelname)s %(name)s: %(message)s"},
    },
    "handlers": {
        "console": {"class": "logging.StreamHandler", "formatter": "plain"},
    },
    "loggers": {
        "spectral_nodes": {
            "handlers": ["console"],
            "level": os.getenv("SPECTRAL_NODES_LOG_LEVEL", "WARNING"),
        },
    },
}
