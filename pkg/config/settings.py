"""
Django settings for the fano95 project.

Generated by 'django-admin startproject' using Django 4.2.27.

For more information on this file, see
https://docs.djangoproject.com/en/4.2/topics/settings/

For the full list of settings and their values, see
https://docs.djangoproject.com/en/4.2/ref/settings/
"""

from pathlib import Path
from decouple import config

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent


SECRET_KEY = config('SECRET_KEY', default='django-insecure-change-this-in-production')
DEBUG = config('DEBUG', default=True, cast=bool)


# Application definition

INSTALLED_APPS = [
    "django.contrib.contenttypes",
    "django.contrib.auth",

    # Third-party apps
    'rest_framework',

    # Local apps
    'apps.arithmetic',
    'apps.families',
    'apps.blowups',
    'apps.fibrations',
    'apps.database',
]

MIDDLEWARE = []


# Database
# Nothing is persisted through the ORM; the default entry keeps manage.py happy.

DATABASES = {
    "default": {
        "ENGINE": "django.db.backends.sqlite3",
        "NAME": BASE_DIR / "db.sqlite3",
    }
}


# Internationalization
# https://docs.djangoproject.com/en/4.2/topics/i18n/

LANGUAGE_CODE = "en-us"

TIME_ZONE = "UTC"

USE_I18N = True

USE_TZ = True

# REST Framework Configuration
# Serializers only; there are no views.
REST_FRAMEWORK = {
    'UNAUTHENTICATED_USER': None,
}

# Engine Configuration
FANO95_DMAX = config('FANO95_DMAX', default=100, cast=int)
FANO95_EXPORT_PATH = config('FANO95_EXPORT_PATH', default=str(BASE_DIR / 'families.json'))
FANO95_LOG_LEVEL = config('FANO95_LOG_LEVEL', default='INFO')

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '%(levelname)s %(asctime)s %(name)s %(message)s',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'verbose',
        },
    },
    'loggers': {
        'apps': {
            'handlers': ['console'],
            'level': FANO95_LOG_LEVEL,
            'propagate': False,
        },
        'core': {
            'handlers': ['console'],
            'level': FANO95_LOG_LEVEL,
            'propagate': False,
        },
    },
}
