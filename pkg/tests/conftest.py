import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from knotrep.diagram import parse_braid, parse_dt, parse_pd  # noqa: E402
from knotrep.presentation import Presentation, parse_word  # noqa: E402

# standard 3-crossing trefoil, under-in first, counterclockwise
TREFOIL_PD = [(1, 4, 2, 5), (3, 6, 4, 1), (5, 2, 6, 3)]


def knot_fixtures():
    return {
        "unknot": parse_braid([], 1),
        "trefoil_braid": parse_braid([1, 1, 1], 2),
        "trefoil_dt": parse_dt([4, 6, 2]),
        "trefoil_pd": parse_pd(TREFOIL_PD),
        "figure8_braid": parse_braid([1, -2, 1, -2], 3),
        "figure8_dt": parse_dt([4, 6, 8, 2]),
        "cinquefoil": parse_braid([1, 1, 1, 1, 1], 2),
        "five_two": parse_dt([4, 8, 10, 2, 6]),
    }


def trefoil_two_gen():
    """<x, y | x y x (y x y)^-1>."""
    return Presentation(2, (parse_word("g0 g1 g0 g1^-1 g0^-1 g1^-1"),))


@pytest.fixture(scope="session")
def knots():
    return knot_fixtures()


@pytest.fixture
def trefoil2():
    return trefoil_two_gen()
