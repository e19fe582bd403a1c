from django.apps import AppConfig


class ModelCoreConfig(AppConfig):
    name = "apps.model_core"
    verbose_name = "Modelo y dispersión"
