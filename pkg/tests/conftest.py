from hypothesis import HealthCheck, settings

settings.register_profile(
    "carrierlab",
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("carrierlab")
