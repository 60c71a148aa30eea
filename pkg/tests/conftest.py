import pytest

from bellxtalk import _kernels


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    # compile the jitted kernels up front so timed tests measure the
    # algorithms, not one-off JIT compilation
    _kernels.warm_up()
