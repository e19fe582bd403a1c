from django.apps import AppConfig


class EdOracleConfig(AppConfig):
    name = "apps.ed_oracle"
    verbose_name = "Diagonalización exacta"
