from django.apps import AppConfig


class DatabaseConfig(AppConfig):
    name = "apps.database"
