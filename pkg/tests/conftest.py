import pytest

from reflect3 import defaults


@pytest.fixture(scope="session")
def pack():
    """The default parameter systems, keyed by label."""
    return {p.label(): p for p in defaults.default_pack()}


@pytest.fixture(scope="session")
def extended():
    """The extended pack (defaults plus the extra edge systems)."""
    return {p.label(): p for p in defaults.extended_pack()}


@pytest.fixture(scope="session")
def reducible_systems(extended):
    return [p for p in extended.values() if p.is_reducible()]
