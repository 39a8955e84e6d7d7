from django.apps import AppConfig


class CliConfig(AppConfig):
    verbose_name = "nestfold command line"
    default_auto_field = "django.db.models.BigAutoField"
    name = "nestfold.cli"
