from __future__ import annotations

import pytest

from app.algebra.multivector import basis_vector
from app.algebra.signature import Signature, make_algebra
from app.photon.little import construct_little_algebra


@pytest.fixture
def clean_env(monkeypatch):
    """No LPA_* variables leak in from the calling shell."""
    for name in ("LPA_SEED", "LPA_TRIALS", "LPA_TOL", "LPA_LOG_LEVEL", "LPA_SLICE_TIME", "LPA_FIGURES_DIR"):
        monkeypatch.delenv(name, raising=False)


@pytest.fixture(scope="session")
def sta():
    return make_algebra(Signature(1, 3, 0))


@pytest.fixture(scope="session")
def lightcone():
    return make_algebra(Signature(1, 2, 0))


@pytest.fixture(scope="session")
def gammas(sta):
    return [basis_vector(sta, i) for i in range(4)]


@pytest.fixture(scope="session")
def photon(sta, gammas):
    """W(k) for k = gamma0 + gamma3."""
    return construct_little_algebra(sta, gammas[0] + gammas[3])


@pytest.fixture(scope="session")
def photon_2d(lightcone):
    """W(k) for k = mu0 + mu2."""
    return construct_little_algebra(lightcone, basis_vector(lightcone, 0) + basis_vector(lightcone, 2))
