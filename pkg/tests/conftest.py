from __future__ import annotations

from hypothesis import HealthCheck, settings

# exact arithmetic makes individual examples slow; wall-clock deadlines
# only produce flaky failures here
settings.register_profile(
    "exact",
    deadline=None,
    max_examples=40,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("exact")
