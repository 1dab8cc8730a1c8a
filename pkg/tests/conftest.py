import pytest

from slblocks.params import GroundParams


def params(q, eta=1, ell=None):
    return GroundParams.from_q(q, eta, ell)


@pytest.fixture
def gp():
    return params
