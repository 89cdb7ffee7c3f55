import pytest
from hypothesis import settings

settings.register_profile("repo", max_examples=60, deadline=None)
settings.load_profile("repo")


@pytest.fixture
def unit_box():
    from pqlab import ConvexBody

    return ConvexBody.box(0, 0, 1, 1)
