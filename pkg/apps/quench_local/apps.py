from django.apps import AppConfig


class QuenchLocalConfig(AppConfig):
    name = "apps.quench_local"
    verbose_name = "Temple local y entrelazamiento"
