import hypothesis
import pytest

from helpers import small_corpus

hypothesis.settings.register_profile(
    "suite", max_examples=100, deadline=None,
    suppress_health_check=[hypothesis.HealthCheck.too_slow])
hypothesis.settings.load_profile("suite")


@pytest.fixture(scope="session")
def corpus():
    """Labeled small polytopes; session-scoped so face/volume caches persist."""
    return small_corpus()
