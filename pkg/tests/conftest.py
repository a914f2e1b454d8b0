import pytest

from bracelab.algebras import catalog, to_brace


@pytest.fixture(scope="session")
def sixdim_brace():
    """The order-729 brace of the six-dimensional wedge algebra at p = 3.

    Building its circle table and validating the law takes a few seconds,
    so every test shares one copy.
    """
    return to_brace(catalog("sixdim_wedge", 3))
