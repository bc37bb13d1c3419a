from django.apps import AppConfig


class SpecialPairsConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'apps.special_pairs'
    verbose_name = 'Special Pair Certificates'
