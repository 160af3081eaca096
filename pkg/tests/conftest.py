import pytest

from curvecal import words


@pytest.fixture(autouse=True)
def _reset_exponent_limit():
    # CLI/env tests mutate the module-level limit; restore the default.
    yield
    words.set_max_exponent(words.DEFAULT_MAX_EXPONENT)
