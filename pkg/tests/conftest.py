import pytest

from ocelmill import bundled_dataset_path
from ocelmill.pipeline import load_dataset


@pytest.fixture(scope="session")
def bundled_root():
    return bundled_dataset_path()


@pytest.fixture(scope="session")
def bundle(bundled_root):
    """The bundled procurement dataset, loaded once for the whole run."""
    return load_dataset(bundled_root)
