import pytest

from rackenum import fixture_path, parse_presentation

FIXTURE_ORDERS = {
    "worked_example": 2,
    "ward_stall": 3,
    "trefoil_4quandle": 6,
    "torus_link_2quandle": 4,
    "three_gen_quandle": 6,
    "link_2quandle": 24,
}

# axiom status of each bundled fixture: (is_quandle, n-fold identity or None)
FIXTURE_AXIOMS = {
    "worked_example": (False, None),
    "ward_stall": (True, 2),
    "trefoil_4quandle": (True, 4),
    "torus_link_2quandle": (True, 2),
    "three_gen_quandle": (True, None),
    "link_2quandle": (True, 2),
}


def load_fixture(name):
    return parse_presentation(fixture_path(name).read_text(encoding="utf-8"))


@pytest.fixture
def worked_example():
    return load_fixture("worked_example")


@pytest.fixture
def ward_stall():
    return load_fixture("ward_stall")


@pytest.fixture
def trefoil():
    return load_fixture("trefoil_4quandle")
