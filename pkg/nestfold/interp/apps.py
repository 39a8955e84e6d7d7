from django.apps import AppConfig


class InterpConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "nestfold.interp"
