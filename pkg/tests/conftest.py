import pytest

from modlat import perfect, reps, verify
from modlat.terms import D222, D4


@pytest.fixture(scope="session")
def cfg():
    return verify.Config()


@pytest.fixture(scope="session")
def pool_d222():
    return [reps.random_rep(s, p, 5, D222) for s in range(15) for p in (2, 5)]


@pytest.fixture(scope="session")
def pool_d4():
    return [reps.random_rep(s, p, 5, D4) for s in range(15) for p in (2, 5)]


@pytest.fixture(scope="session")
def bank(cfg):
    return reps.rep_bank(cfg.bank_depth, cfg.prime, D222)


@pytest.fixture(scope="session")
def usable_bank(bank):
    return perfect.usable_bank(bank)
