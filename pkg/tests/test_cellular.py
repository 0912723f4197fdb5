import itertools
import random
from fractions import Fraction as F

import pytest

from conftest import grid, pid
from klrcell import combinatorics as cb
from klrcell.engine.cellular import CellularAlgebra, DiagramElement, NotCyclicError
from klrcell.params import make_params


@pytest.fixture(scope="module", params=[make_params(3, 3, (0, F(3, 2)), (0, 1)), make_params(2, 3, (0, F(1, 2)), (0, 1)), make_params(None, 3, (F(5, 2), 0), (0, 2))], ids=pid)
def alg(request):
    return CellularAlgebra(request.param)


def _mul(a, b):
    n = len(a)
    return [[sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)] for i in range(n)]


@pytest.mark.parametrize("p", grid(2), ids=pid)
def test_basis_count(p):
    alg = CellularAlgebra(p)
    want = sum(len(alg.tableaux(lam)) ** 2 for lam in alg.multipartitions())
    assert alg.basis_count() == (want, want)


def test_gram_matrix_is_symmetric_and_graded(alg):
    for lam in alg.multipartitions():
        g = alg.gram_matrix(lam)
        tabs = alg.tableaux(lam)
        for a, s in enumerate(tabs):
            for b, t in enumerate(tabs):
                assert g[a][b] == g[b][a]
                if g[a][b]:
                    assert alg.res(s) == alg.res(t)
                    assert alg.deg(s) + alg.deg(t) == 0


def _generators(alg):
    n = alg.p.n
    gens = [[("y", r)] for r in range(1, n + 1)] + [[("psi", r)] for r in range(1, n)]
    return gens


def test_cell_action_is_a_representation(alg):
    gens = _generators(alg)
    for lam in alg.multipartitions():
        mats = {tuple(g): alg.cell_action(g, lam) for g in gens}
        for a, b in itertools.product(gens, repeat=2):
            assert alg.cell_action(a + b, lam) == _mul(mats[tuple(a)], mats[tuple(b)])


def test_cell_action_does_not_depend_on_right_tableau(alg):
    for lam in alg.multipartitions():
        for g in _generators(alg):
            mats = {str(alg.cell_action(g, lam, t)) for t in alg.tableaux(lam)}
            assert len(mats) == 1


def test_identity_acts_trivially(alg):
    for lam in alg.multipartitions():
        k = len(alg.tableaux(lam))
        assert alg.cell_action([], lam) == [[int(i == j) for j in range(k)] for i in range(k)]


def test_multiplication_is_associative(alg):
    rng = random.Random(7)
    syms = alg.symbols()
    for _ in range(40):
        a, b, c = (DiagramElement.symbol(*rng.choice(syms)) for _ in range(3))
        left = alg.multiply(alg.multiply(a, b).to_diagram(), c)
        right = alg.multiply(a, alg.multiply(b, c).to_diagram())
        assert left == right


def test_products_respect_degree(alg):
    syms = alg.symbols()
    for x, y in itertools.islice(itertools.product(syms, repeat=2), 400):
        prod = alg.multiply(DiagramElement.symbol(*x), DiagramElement.symbol(*y))
        d = sum(alg.deg(t) for t in (x[1], x[2], y[1], y[2]))
        for (lam, s, t), _ in prod.terms:
            assert alg.deg(s) + alg.deg(t) == d


def test_psi_transition_raises_without_cyclic_tableau():
    p = make_params(3, 3, (0, F(3, 2)), (0, 1))
    alg = CellularAlgebra(p)
    missing = [lam for lam in alg.multipartitions() if cb.find_cyclic_tableau(lam, p) is None]
    for lam in missing:
        with pytest.raises(NotCyclicError):
            alg.psi_basis_transition(lam)
