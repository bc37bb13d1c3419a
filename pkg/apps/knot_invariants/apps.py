from django.apps import AppConfig


class KnotInvariantsConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'apps.knot_invariants'
    verbose_name = 'Seifert Forms and Signature Invariants'
