import pytest
from mpmath import mp


@pytest.fixture(autouse=True)
def high_precision():
    # reference constants are parsed inside tests; keep them at full length
    with mp.workdps(50):
        yield
