from __future__ import annotations

import copy

import pytest

from reescert.family import build_family

# Two-variable-block tower over four variables: degrees 2,3,3,5 with every
# level a full Borel set and the support chain satisfied.  The canonical
# closed rees fixture; sizes 4/9/7/3/1 including level 0.
TOWER4 = {
    "mode": "rees",
    "variables": 4,
    "levels": [
        {"degree": 2, "borel": "x3*x4"},
        {"degree": 3, "borel": "x2^2*x3"},
        {"degree": 3, "borel": "x1*x2^2"},
        {"degree": 5, "generators": ["x1^5"]},
    ],
}

# Powers of the maximal ideal in three variables: levels m, m^2, m^3.
# Level 1 equals {x1,x2,x3}, same as the injected level 0.
MAXPOWERS3 = {
    "mode": "rees",
    "variables": 3,
    "levels": [
        {"degree": 1, "borel": "x3"},
        {"degree": 2, "borel": "x3^2"},
        {"degree": 3, "borel": "x3^3"},
    ],
}

# Fiber-mode pair that is closed under comparability although neither
# level is a full Borel set: shows the structural conjunction is
# sufficient but not necessary in fiber mode.
FIBER_PAIR = {
    "mode": "fiber",
    "variables": 5,
    "embedding_degree": 4,
    "levels": [
        {"degree": 2, "generators": ["x3^2", "x3*x4", "x3*x5", "x4*x5"]},
        {"degree": 3, "generators": ["x1^3", "x1^2*x3"]},
    ],
}


def family_dict(name: str) -> dict:
    return copy.deepcopy({"tower4": TOWER4,
                          "maxpowers3": MAXPOWERS3,
                          "fiber_pair": FIBER_PAIR}[name])


@pytest.fixture
def tower4():
    return build_family(family_dict("tower4"))


@pytest.fixture
def maxpowers3():
    return build_family(family_dict("maxpowers3"))


@pytest.fixture
def fiber_pair():
    return build_family(family_dict("fiber_pair"))
