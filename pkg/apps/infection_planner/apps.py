from django.apps import AppConfig


class InfectionPlannerConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'apps.infection_planner'
    verbose_name = 'Infection Planner'
