import random

from hypothesis import HealthCheck, settings, strategies as st

settings.register_profile(
    "default",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

seeds = st.integers(min_value=0, max_value=2**32 - 1)


def rng_from(seed: int) -> random.Random:
    return random.Random(seed)
