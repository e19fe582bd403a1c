from django.apps import AppConfig


class QuenchGlobalConfig(AppConfig):
    name = "apps.quench_global"
    verbose_name = "Temple global"
