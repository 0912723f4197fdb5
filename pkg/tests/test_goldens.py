import json

import pytest

from klrcell import combinatorics as cb
from klrcell import goldens
from klrcell.params import make_params

ALL = goldens.run_goldens()


@pytest.mark.parametrize("g", ALL, ids=lambda g: f"{g.criterion}-{g.name}")
def test_golden(g):
    assert g.passed, (g.expected, g.observed, g.note)


def test_goldens_serialize():
    data = json.loads(json.dumps([g.as_dict() for g in ALL]))
    assert len(data) == len(ALL)
    assert {d["criterion"] for d in data} == set(goldens.CHECK_BY_CRITERION)


def test_sign_diagonal_is_trivial():
    assert set(goldens.SIGN_DIAGONAL.values()) == {1}


def test_degree_parity_at_second_figure_weighting():
    # every standard tableau of the figure shape sharing the figure's residues has odd degree here
    p = make_params(3, 9, goldens.FIG_WEIGHTINGS["theta=(15/2,0)"], (0, 1))
    degs = {
        cb.degree(t, p)
        for t in cb.enumerate_std(goldens.FIG_SHAPE, p)
        if cb.residue_sequence(t, p) == goldens.FIG_RESIDUES
    }
    assert degs and all(d % 2 for d in degs)
