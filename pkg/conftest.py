import os

import django
from hypothesis import HealthCheck, settings

# cli tests run management commands against k3_project.settings
os.environ.setdefault("DJANGO_SETTINGS_MODULE", "k3_project.settings")
django.setup()

# Deterministic examples so every CI run checks the same cases
settings.register_profile(
    "ci",
    derandomize=True,
    max_examples=50,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile("dev", max_examples=200, deadline=None)
settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "ci"))
