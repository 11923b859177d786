import pytest

from sparsedigraph import (
    BollobasParams,
    RandomStream,
    SdgParams,
    SedgeParams,
    bollobas_generate,
    sdg,
    sedge,
)


@pytest.fixture(scope="session", autouse=True)
def _warm_kernels():
    # The first call into each compiled kernel pays compilation (or cache
    # load) cost.  Do it once up front so timed tests measure generation.
    rng = RandomStream(0)
    g = sdg(10, 20, SdgParams(0.5, 0.4), rng)
    sedge(g, 3, 6, SedgeParams(0.4, 0.4, 0.5, 0.4), rng)
    bollobas_generate(15, BollobasParams(0.2, 0.6, 0.2, 1.0, 1.0), rng)
