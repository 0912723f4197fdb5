from math import factorial

import pytest

from klrcell import combinatorics as cb
from klrcell import quotients as qt
from klrcell.linalg import Field

ADMISSIBLE = [(4, (0, 2), 1), (5, (0, 2), 1), (5, (0, 3), 1), (None, (0, 3), 1), (None, (0, 5), 2), (7, (0, 3), 2)]
INADMISSIBLE = [(4, (0, 1), 1), (2, (0, 1), 1), (3, (0, 2), 1), (None, (0, 1), 1), (None, (0, 2), 2), (5, (0, 2), 2)]


@pytest.mark.parametrize("e,kappa,h", ADMISSIBLE)
def test_admissible(e, kappa, h):
    assert qt.admissible(kappa, e, h)


@pytest.mark.parametrize("e,kappa,h", INADMISSIBLE)
def test_inadmissible_rejected(e, kappa, h):
    assert not qt.admissible(kappa, e, h)
    with pytest.raises(qt.InadmissibleError):
        qt.QuotientSpec.make(e, 2, 2, kappa, h)


def test_level_one_is_always_admissible():
    for e in (2, 3, None):
        for h in (1, 2, 3):
            assert qt.admissible((0,), e, h) or (e is not None and h + 1 > e)


def test_column_bounded():
    assert qt.column_bounded(((1, 1, 1), ()), 1)
    assert not qt.column_bounded(((2,), (1,)), 1)
    assert qt.column_bounded(((2, 2), (1,)), 2)


@pytest.mark.parametrize("e,kappa,h", ADMISSIBLE)
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_labels_are_saturated(e, kappa, h, n):
    spec = qt.QuotientSpec.make(e, 2, n, kappa, h)
    assert qt.check_saturated(spec)
    assert all(qt.column_bounded(lam, h) for lam in spec.label_set())


def test_blob_label_count():
    # h = 1, two components: one column each, so n + 1 labels
    for n in range(1, 6):
        spec = qt.QuotientSpec.make(None, 2, n, (0, 3), 1)
        assert len(spec.label_set()) == n + 1


@pytest.mark.parametrize("e,kappa", [(4, (0, 2)), (5, (0, 2)), (None, (0, 3))])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_ideal_equality(e, kappa, n):
    spec = qt.QuotientSpec.make(e, 2, n, kappa, 1)
    check = qt.ideal_equality_check(spec)
    assert check.equal
    total = 2 ** n * factorial(n)
    assert len(qt.quotient_basis(spec)) == total - check.cell_ideal_dimension


def test_ideal_generators_have_increasing_runs():
    spec = qt.QuotientSpec.make(5, 2, 3, (0, 2), 1)
    gens = qt.ideal_generators(spec)
    assert gens
    for i in gens:
        assert (i[0] + 1) % 5 == i[1]
    assert qt.ideal_generators(qt.QuotientSpec.make(5, 2, 1, (0, 2), 1)) == []


@pytest.mark.parametrize("field", [Field(0), Field(2)], ids=lambda f: f.label)
def test_submatrix(field):
    spec = qt.QuotientSpec.make(4, 2, 3, (0, 2), 1)
    sub = qt.quotient_decomposition_submatrix(spec, field)
    labels = spec.label_set()
    assert sub.rows == [lam for lam in labels]
    assert set(sub.columns) == set(labels)
    for lam in labels:
        assert sub.entry(lam, lam) == 1
    p = spec.params
    for (lam, mu), val in sub.entries.items():
        if lam != mu:
            assert cb.dominates(mu, lam, p) or cb.dominates(lam, mu, p)
