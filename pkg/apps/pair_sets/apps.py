from django.apps import AppConfig


class PairSetsConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'apps.pair_sets'
    verbose_name = 'Recursive Pair Sets'
