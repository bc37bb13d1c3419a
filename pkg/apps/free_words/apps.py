from django.apps import AppConfig


class FreeWordsConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'apps.free_words'
    verbose_name = 'Free Group Words'
