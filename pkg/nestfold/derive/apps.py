from django.apps import AppConfig


class DeriveConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "nestfold.derive"
