import pytest

from nestfold.core.declarations import Program
from nestfold.corpus.services.families import corpus_program
from nestfold.interp.carriers import Carriers
from nestfold.interp.carriers import chars
from nestfold.interp.carriers import nats


@pytest.fixture
def bush_program() -> Program:
    return corpus_program("bush")


@pytest.fixture
def d_program() -> Program:
    return corpus_program("d")


@pytest.fixture
def term_program() -> Program:
    return corpus_program("term")


@pytest.fixture
def nat_carriers() -> Carriers:
    return Carriers.of(a=nats(2))


@pytest.fixture
def char_carriers() -> Carriers:
    return Carriers.of(a=chars("W"))
