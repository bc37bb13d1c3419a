from django.apps import AppConfig


class FoxCalculusConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'apps.fox_calculus'
    verbose_name = 'Fox Calculus and Derived Quotients'
