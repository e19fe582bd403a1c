from django.apps import AppConfig


class EdgeAnalysisConfig(AppConfig):
    name = "apps.edge_analysis"
    verbose_name = "Análisis de bordes causales"
