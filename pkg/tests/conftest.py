from fractions import Fraction as F

import pytest

from klrcell.params import make_params

# three or more weightings per multicharge in level two
WEIGHTINGS = {
    1: [(F(0),)],
    2: [(F(0), F(1, 2)), (F(0), F(3, 2)), (F(5, 2), F(0)), (F(0), F(9, 2))],
}
CHARGES = {1: [(0,)], 2: [(0, 0), (0, 1), (0, 2), (0, 3)]}
ES = (2, 3, None)


def grid(max_n: int, min_n: int = 1):
    """Valid ``Params`` on the standard grid, ``min_n <= n <= max_n``."""
    out = []
    for e in ES:
        for ell in (1, 2):
            for kappa in CHARGES[ell]:
                if e is not None and max(kappa) >= e:
                    continue
                for theta in WEIGHTINGS[ell]:
                    for n in range(min_n, max_n + 1):
                        out.append(make_params(e, n, theta, kappa))
    return out


def pid(p) -> str:
    th = ",".join(str(x) for x in p.theta)
    ka = ",".join(map(str, p.kappa))
    return f"e{p.e_label}-th{th}-k{ka}-n{p.n}"


ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[k])


@pytest.fixture
def n2_small():
    return make_params(2, 2, (0, F(1, 2)), (0, 1))


@pytest.fixture
def n2_large():
    return make_params(2, 2, (0, F(3, 2)), (0, 1))
