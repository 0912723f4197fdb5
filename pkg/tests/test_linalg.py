import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import GF, Matrix
from sympy.polys.matrices import DomainMatrix

from conftest import grid, pid
from klrcell import linalg
from klrcell.engine.cellular import CellularAlgebra
from klrcell.linalg import Field, LaurentPoly

polys = st.dictionaries(st.integers(-4, 4), st.integers(-5, 5), max_size=4).map(LaurentPoly)


@settings(max_examples=60, deadline=None)
@given(polys, polys, polys)
def test_laurent_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * (b + c) == a * b + a * c
    assert (a * b).at_one() == a.at_one() * b.at_one()
    assert (a * b).bar() == a.bar() * b.bar()
    assert a - a == LaurentPoly.zero()
    assert LaurentPoly.from_json(a.to_json()) == a


def test_laurent_basics():
    p = LaurentPoly({-1: 1, 2: F(3, 1), 5: 0})
    assert p.coeffs == {-1: 1, 2: 3}
    assert isinstance(p[2], int)
    assert (p.min_degree(), p.max_degree()) == (-1, 2)
    assert LaurentPoly.zero().min_degree() is None
    assert LaurentPoly.from_exponents([1, 1, -2]) == LaurentPoly({1: 2, -2: 1})
    assert repr(LaurentPoly({0: 1, 1: 1, 3: 2})) == "1 + t + 2*t^3"
    assert LaurentPoly.one() == 1
    assert not LaurentPoly({0: -1}).is_nonnegative()


@pytest.mark.parametrize("text,char", [("Q", 0), ("QQ", 0), ("Fp:2", 2), ("fp:7", 7), ("F3", 3)])
def test_field_parse(text, char):
    assert Field.parse(text).characteristic == char


@pytest.mark.parametrize("text", ["R", "Fp:4", "Fp:1", "F"])
def test_field_parse_rejects(text):
    with pytest.raises(ValueError):
        Field.parse(text)


def _random_matrix(rng, nr, nc):
    # low rank products make rank deficiency common
    k = rng.randint(0, min(nr, nc))
    a = [[rng.randint(-3, 3) for _ in range(k)] for _ in range(nr)]
    b = [[rng.randint(-3, 3) for _ in range(nc)] for _ in range(k)]
    return [[sum(a[i][t] * b[t][j] for t in range(k)) + (rng.random() < 0.1) for j in range(nc)] for i in range(nr)]


@pytest.mark.parametrize("seed", range(25))
def test_rank_matches_sympy(seed):
    rng = random.Random(seed)
    m = _random_matrix(rng, rng.randint(1, 6), rng.randint(1, 6))
    assert linalg.rank(m) == Matrix(m).rank()
    for p in (2, 3, 5):
        dm = DomainMatrix([[GF(p)(x) for x in row] for row in m], (len(m), len(m[0])), GF(p))
        assert linalg.rank(m, Field(p)) == dm.rank()


def test_rank_with_fractions_and_bad_denominator():
    assert linalg.rank([[F(1, 2), 1], [1, 2]]) == 1
    assert linalg.rank([[F(1, 2), 1], [1, 2]], Field(3)) == 1
    with pytest.raises(ValueError):
        linalg.rank([[F(1, 2)]], Field(2))
    assert linalg.rank([]) == 0


def test_rref_and_solve():
    red, piv = linalg.rref_rational([[2, 4, 2], [1, 2, 3]])
    assert piv == [0, 2]
    assert red[0] == [1, 2, 0]
    assert linalg.solve_rational([[1, 0], [1, 1]], [3, 2]) == [1, 2]
    assert linalg.solve_rational([[1, 1]], [1, 2]) is None
    with pytest.raises(ValueError):
        linalg.solve_rational([[1], [1]], [1])


@pytest.fixture(scope="module", params=[p for p in grid(3) if p.e is not None], ids=pid)
def alg(request):
    return CellularAlgebra(request.param)


@pytest.mark.parametrize("field", [Field(0), Field(2), Field(3)], ids=lambda f: f.label)
def test_decomposition_matrix_shape(alg, field):
    d = linalg.decomposition_matrix(alg, field)
    assert d.columns == linalg.simple_labels(alg, field)
    for mu in d.columns:
        assert d.entry(mu, mu) == 1
    for (lam, mu), val in d.entries.items():
        assert val.is_nonnegative()
        if lam != mu:
            # off-diagonal entries lie in t N[t]
            assert val.min_degree() >= 1
    # the cell characters are recovered from the simple characters
    simples = {mu: linalg.simple_character(alg, mu, field) for mu in d.columns}
    for lam in d.rows:
        total = linalg.GradedCharacter()
        for mu in d.columns:
            if d.entry(lam, mu):
                total = total + simples[mu].scale(d.entry(lam, mu))
        assert total == linalg.cell_character(alg, lam)


def test_radical_plus_rank_is_cell_dimension(alg):
    for lam in alg.multipartitions():
        rad = linalg.gram_radical_dims(alg, lam)
        assert rad.at_one() + linalg.gram_rank(alg, lam) == len(alg.tableaux(lam))
