"""The defining relations of the KLR algebra, checked on the polynomial representation."""

import itertools
from fractions import Fraction as F

import pytest

from klrcell.engine import polyrep as pr
from klrcell.engine.cellular import CellularAlgebra, DiagramElement
from klrcell.engine.cyclotomic import monomials_of_degree
from klrcell.params import make_params

ES = [2, 3, 4, None]


def labels(e):
    return range(e) if e is not None else range(4)


def act(rep, terms, state):
    """Apply ``sum c * word`` to a state; returns ``(residues, poly)``."""
    res = None
    acc = {}
    for c, word in terms:
        if not c:
            continue
        out = rep.apply_word(word, state)
        if out is None or not out[1]:
            continue
        if res is not None and out[0] != res:
            raise AssertionError("terms land in different idempotents")
        res = out[0]
        acc = pr.p_add(acc, out[1], c)
    return res, {k: v for k, v in acc.items() if v}


def agree(e, n, lhs_fn, rhs_fn, maxdeg=2):
    rep = pr.KLRRep(e, n)
    for i in itertools.product(labels(e), repeat=n):
        lhs, rhs = lhs_fn(rep, i), rhs_fn(rep, i)
        if lhs is None:
            continue
        for d in range(maxdeg + 1):
            for m in monomials_of_degree(n, d):
                st = (tuple(i), pr.p_monomial(m))
                a, b = act(rep, lhs, st), act(rep, rhs, st)
                if a[1] or b[1]:
                    assert a[1] == b[1], (e, i, m, a, b)
                    assert a[0] == b[0]


def const(terms):
    return lambda rep, i: terms


def Y(r):
    return ("y", r)


def PSI(r):
    return ("psi", r)


def E(i):
    return ("e", tuple(i))


@pytest.mark.parametrize("e", ES)
def test_idempotents_orthogonal(e):
    rep = pr.KLRRep(e, 2)
    for i in itertools.product(labels(e), repeat=2):
        for j in itertools.product(labels(e), repeat=2):
            st = (tuple(j), pr.p_one(2))
            out = rep.apply_word([E(i), E(i)], st)
            assert (out is not None) == (i == j)


@pytest.mark.parametrize("e", ES)
def test_y_commutes_with_idempotents(e):
    for r in (1, 2, 3):
        agree(e, 3, lambda rep, i, r=r: [(1, [Y(r), E(i)])], lambda rep, i, r=r: [(1, [E(i), Y(r)])])


@pytest.mark.parametrize("e", ES)
def test_psi_moves_idempotents(e):
    for r in (1, 2):
        def lhs(rep, i, r=r):
            return [(1, [PSI(r), E(i)])]

        def rhs(rep, i, r=r):
            j = list(i)
            j[r - 1], j[r] = j[r], j[r - 1]
            return [(1, [E(j), PSI(r)])]

        agree(e, 3, lhs, rhs)


@pytest.mark.parametrize("e", ES)
def test_commuting_generators(e):
    agree(e, 3, const([(1, [Y(1), Y(3)])]), const([(1, [Y(3), Y(1)])]))
    agree(e, 3, const([(1, [PSI(1), Y(3)])]), const([(1, [Y(3), PSI(1)])]))
    agree(e, 3, const([(1, [PSI(2), Y(1)])]), const([(1, [Y(1), PSI(2)])]))
    agree(e, 4, const([(1, [PSI(1), PSI(3)])]), const([(1, [PSI(3), PSI(1)])]), maxdeg=1)


@pytest.mark.parametrize("e", ES)
@pytest.mark.parametrize("r", [1, 2])
def test_dot_slides(e, r):
    def delta(i):
        return 1 if i[r - 1] == i[r] else 0

    agree(e, 3, const([(1, [Y(r), PSI(r)])]), lambda rep, i: [(1, [PSI(r), Y(r + 1)]), (delta(i), [])])
    agree(e, 3, const([(1, [Y(r + 1), PSI(r)])]), lambda rep, i: [(1, [PSI(r), Y(r)]), (-delta(i), [])])


def quadratic(e, r):
    def rhs(rep, i):
        a, b = i[r - 1], i[r]
        if a == b:
            return []
        plus = rep.mod(a + 1) == rep.mod(b)
        minus = rep.mod(a - 1) == rep.mod(b)
        if e == 2:
            # (y_{r+1} - y_r)(y_r - y_{r+1})
            return [(2, [Y(r), Y(r + 1)]), (-1, [Y(r), Y(r)]), (-1, [Y(r + 1), Y(r + 1)])]
        if minus:
            return [(1, [Y(r + 1)]), (-1, [Y(r)])]
        if plus:
            return [(1, [Y(r)]), (-1, [Y(r + 1)])]
        return [(1, [])]

    return rhs


@pytest.mark.parametrize("e", ES)
@pytest.mark.parametrize("r", [1, 2])
def test_quadratic_relation(e, r):
    agree(e, 3, const([(1, [PSI(r), PSI(r)])]), quadratic(e, r))


def braid_defect(e, sign):
    def rhs(rep, i):
        a, b, c = i
        base = [(1, [PSI(2), PSI(1), PSI(2)])]
        if a != c or a == b:
            return base
        if e == 2:
            return base + [(sign, [Y(1)]), (-2 * sign, [Y(2)]), (sign, [Y(3)])]
        if a == rep.mod(b + 1):
            return base + [(sign, [])]
        if a == rep.mod(b - 1):
            return base + [(-sign, [])]
        return base

    return rhs


@pytest.mark.parametrize("e", ES)
def test_braid_relation(e):
    # the defect sign is forced by the dot slides and quadratic relation above
    agree(e, 3, const([(1, [PSI(1), PSI(2), PSI(1)])]), braid_defect(e, -1))


@pytest.mark.parametrize("e", ES)
def test_opposite_braid_sign_is_inconsistent(e):
    with pytest.raises(AssertionError):
        agree(e, 3, const([(1, [PSI(1), PSI(2), PSI(1)])]), braid_defect(e, 1))


@pytest.mark.parametrize("e", ES)
def test_grading(e):
    rep = pr.KLRRep(e, 3)
    for i in itertools.product(labels(e), repeat=3):
        for r in (1, 2):
            a, b = i[r - 1], i[r]
            want = -2 if a == b else (
                2 if e == 2 and rep.mod(a + 1) == rep.mod(b) else
                1 if rep.mod(a + 1) == rep.mod(b) or rep.mod(a - 1) == rep.mod(b) else 0
            )
            assert rep.psi_degree(tuple(i), r) == want


# cyclotomic quotient and the cellular algebra ------------------------------------


@pytest.fixture(scope="module")
def alg_small():
    return CellularAlgebra(make_params(2, 2, (0, F(1, 2)), (0, 1)))


@pytest.fixture(scope="module")
def alg_three():
    return CellularAlgebra(make_params(3, 3, (0, F(3, 2)), (0, 1)))


def test_cyclotomic_relation(alg_small, alg_three):
    for alg in (alg_small, alg_three):
        Q = alg.Q
        for i in alg.live:
            N = Q.level(i[0])
            word = [Y(1)] * N + [E(i)]
            assert not alg.normalize(DiagramElement.word(*word))
            if N:
                lower = [Y(1)] * (N - 1) + [E(i)]
                assert alg.normalize(DiagramElement.word(*lower))


def test_idempotents_sum_to_one(alg_three):
    total = DiagramElement.from_dict({})
    for i in alg_three.live:
        total = total + DiagramElement.word(E(i))
    one = alg_three.normalize(total)
    for lam, s, t in alg_three.symbols():
        x = DiagramElement.symbol(lam, s, t)
        assert alg_three.multiply(one, x) == alg_three.normalize(x)
        assert alg_three.multiply(x, one) == alg_three.normalize(x)


def test_star_is_an_antiautomorphism(alg_three):
    words = [
        [PSI(1), Y(2), E(i)] for i in alg_three.live
    ] + [[Y(3), PSI(2), PSI(1), E(i)] for i in alg_three.live]
    for w in words:
        x = DiagramElement.word(*w)
        assert alg_three.normalize(x.star()) == alg_three.star(alg_three.normalize(x))
    for lam, s, t in alg_three.symbols():
        c = alg_three.normalize(DiagramElement.symbol(lam, s, t))
        assert alg_three.star(c).as_dict() == {(lam, t, s): 1}


def test_normalize_is_idempotent(alg_three):
    for w in ([PSI(2), PSI(1), Y(1)], [Y(2), Y(3), PSI(2)]):
        for i in alg_three.live:
            x = alg_three.normalize(DiagramElement.word(*w, E(i)))
            assert alg_three.normalize(x.to_diagram()) == x


def test_normal_forms_are_homogeneous(alg_three):
    alg = alg_three
    for i in alg.live:
        word = (PSI(1), Y(2), PSI(2), E(i))
        x = alg.normalize(DiagramElement.word(*word))
        deg = alg.word_degree(word, i)
        for (lam, s, t), _ in x.terms:
            assert alg.deg(s) + alg.deg(t) == deg


def test_klr_embed_rejects_bad_tokens(alg_small):
    with pytest.raises(IndexError):
        alg_small.klr_embed([PSI(2)])
    with pytest.raises(IndexError):
        alg_small.klr_embed([E((0, 1, 0))])
    with pytest.raises(ValueError):
        alg_small.klr_embed([("x", 1)])
