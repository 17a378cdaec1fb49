import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "exact", max_examples=100, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("exact")


@pytest.fixture(scope="session")
def registry():
    from tetraquartic.lattice import standard_registry

    return standard_registry()


@pytest.fixture(scope="session")
def disc(registry):
    from tetraquartic.discform import build_disc_group

    return build_disc_group(registry.lattice)


@pytest.fixture(scope="session")
def printed(registry):
    from tetraquartic.isometry import load_printed_matrices

    return load_printed_matrices(registry)


@pytest.fixture(scope="session")
def reference():
    from tetraquartic.quartic import REFERENCE_SAMPLE, build_quartic

    return build_quartic(REFERENCE_SAMPLE)


@pytest.fixture(scope="session")
def reference_lines(reference):
    from tetraquartic.quartic import enumerate_lines

    return enumerate_lines(reference)


@pytest.fixture(scope="session")
def reference_fibrations(reference):
    from tetraquartic.quartic import all_fibrations

    return {rep.pencil: rep for rep in all_fibrations(reference)}
