import numpy as np
import pytest

from magnoncavity import (CavityConfig, EmitterConfig, MaterialParams,
                          kittel_frequency, state_from_internal, tesla_to_field)

MU0_MS_T = 0.178
MU0_H0_T = 0.5
R_30NM = 30e-9


@pytest.fixture(scope="session")
def yig():
    """YIG-like material at the standard working point, Gamma = 1e7 rad/s."""
    return MaterialParams(Ms=tesla_to_field(MU0_MS_T), Gamma=1e7)


@pytest.fixture(scope="session")
def yig_narrow():
    """Same material with the narrower linewidth used for dynamics runs."""
    return MaterialParams(Ms=tesla_to_field(MU0_MS_T), Gamma=1e6)


@pytest.fixture(scope="session")
def yig_lossless():
    return MaterialParams(Ms=tesla_to_field(MU0_MS_T), Gamma=0.0)


@pytest.fixture(scope="session")
def fields(yig):
    return state_from_internal(tesla_to_field(MU0_H0_T), yig)


@pytest.fixture(scope="session")
def cavity(yig, fields):
    return CavityConfig(R=R_30NM, mat=yig, fields=fields, n_max=7)


@pytest.fixture(scope="session")
def cavity_narrow(yig_narrow, fields):
    return CavityConfig(R=R_30NM, mat=yig_narrow, fields=fields, n_max=1)


@pytest.fixture(scope="session")
def emitter(cavity):
    """Equatorial emitter at a = 1.2R, tuned to the Kittel mode."""
    omega0 = kittel_frequency(cavity.fields, cavity.mat)
    return EmitterConfig(position=(1.2 * cavity.R, 0.0, 0.0), omega0=omega0)


@pytest.fixture(scope="session")
def rng():
    return np.random.default_rng(20260823)
