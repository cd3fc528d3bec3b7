import pytest

from finring.catalog import default_catalog


@pytest.fixture(scope="session")
def catalog():
    """The default catalog, built once for the whole run."""
    cat = default_catalog()
    cat.build()
    return cat


@pytest.fixture(scope="session")
def catalog_rings(catalog):
    """Built (entry, ring) pairs in catalog order."""
    return catalog.rings()


@pytest.fixture(scope="session")
def small_rings(catalog_rings):
    """Catalog rings small enough for the brute-force oracles."""
    return [(entry, ring) for entry, ring in catalog_rings
            if ring.order <= 64]
