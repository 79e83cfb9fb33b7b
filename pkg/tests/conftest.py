import numpy as np
import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "repo",
    derandomize=True,
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repo")


@pytest.fixture(scope="session")
def reference_img():
    from lorenzcipher import reference_image
    return reference_image()


def make_image(values):
    """Build a GrayImage from a nested list or array of small ints."""
    from lorenzcipher import GrayImage
    return GrayImage.from_array(np.asarray(values, dtype=np.uint8))
