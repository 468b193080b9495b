import sys
from pathlib import Path

import pytest

from goldie_lab.stable import PitmanParams, StableParams, from_pitman

# frozen 50-digit mpmath values, computed once before the tests were written
ORACLE = {
    "h_gamma_1e-9_2": 2.000000002000000001333333,
    "kappa_2_05_2": 6.87312731383618094144115,
    "gamma_075": 1.225416702465177645129098,
    "closed_05_1": complex(1.3769963318531534387, -0.57037055599157926039),
    "closed_025_05": complex(0.76031686422883526097, -0.8319592590191349141),
    "closed_075_01": complex(3.3789496955792034751, -1.3019552245233114922),
    "sqrt_pi_over_2": 1.2533141373155002512,
    "gamma_pitman_1e-8_2_3": 2.197224543294484506613685,
}


def symmetric(alpha, c=1.0):
    return from_pitman(PitmanParams(c, 0.0, 0.0, alpha))


@pytest.fixture
def skewed():
    # f1 = -1, gamma = -0.5, lambda = 1
    return StableParams(-1.0, complex(-0.5, 1.0), -0.5)


@pytest.fixture
def sym15():
    return symmetric(1.5)


sys.path.insert(0, str(Path(__file__).parent))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.RESULTS:
        terminalreporter.write_line(line)
