from django.apps import AppConfig


class FibrationsConfig(AppConfig):
    name = "apps.fibrations"
