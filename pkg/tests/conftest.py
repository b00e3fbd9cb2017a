import pytest

from heunlame.utils.config import Settings, set_settings


@pytest.fixture(autouse=True)
def default_settings():
    """Every test starts from the built-in tolerances; the CLI installs its own."""
    set_settings(Settings())
    yield
    set_settings(Settings())
