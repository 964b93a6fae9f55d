from hypothesis import HealthCheck, settings

# exact ordinal arithmetic has uneven cost; wall-clock deadlines only add noise
settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow], derandomize=True)
settings.load_profile("default")
