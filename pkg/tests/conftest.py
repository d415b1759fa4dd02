import logfire
import pytest
from hypothesis import settings

from gclt.config import DEFAULT_ENUMERATION_BOUND, set_enumeration_bound

logfire.configure(send_to_logfire=False, console=False)

settings.register_profile("gclt", max_examples=40, deadline=None)
settings.load_profile("gclt")


@pytest.fixture(autouse=True)
def default_bound():
    """Every test starts from the default enumeration bound."""
    set_enumeration_bound(DEFAULT_ENUMERATION_BOUND)
    yield
    set_enumeration_bound(DEFAULT_ENUMERATION_BOUND)
