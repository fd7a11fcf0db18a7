import numpy as np
import pytest

import oracles

ORACLE_PHI_TOP = 60_000


@pytest.fixture(scope="session")
def phi_tab():
    """Reference totient table, index = n."""
    return oracles.phi_table(ORACLE_PHI_TOP)


@pytest.fixture(scope="session")
def sigma_tab():
    """Reference divisor-sum table, index = n."""
    return oracles.sigma_table(ORACLE_PHI_TOP)


@pytest.fixture(scope="session")
def rng():
    return np.random.default_rng(0xF00D)
