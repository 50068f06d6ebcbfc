from django.apps import AppConfig


class SpectralNodesConfig(AppConfig):
    name = "spectral_nodes"
    verbose_name = "Spectral Nodes"
