from django.apps import AppConfig


class BlowupsConfig(AppConfig):
    name = "apps.blowups"
