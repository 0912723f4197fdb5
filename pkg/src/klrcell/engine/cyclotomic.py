"""Cyclotomic quotients of the KLR algebra, computed block by block.

Every element of ``e(j) R e(i)`` is a ``Sym``-linear operator on the
polynomial representation, so it is determined by its values on the
staircase monomials.  Those values form a finite sparse vector, and the
cyclotomic ideal ``J`` is spanned in each graded block by the vectors of

    psi_u  y^c  y_1^{N(k_1)} e(k)  psi_v e(i)        (u, v reduced words).

A :class:`BlockSolver` stacks a basis of ``J`` with any proposed basis of the
quotient and expresses vectors in it exactly.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Callable, Iterable, Optional, Sequence

import flint

from . import polyrep as pr

Vector = dict  # (staircase index, exponent tuple) -> int | Fraction
State = tuple  # (residues, poly)
Operator = Callable[[State], Optional[State]]


class NotInSpan(ArithmeticError):
    """A vector that should lie in a computed span does not."""


def monomials_of_degree(n: int, deg: int) -> list[tuple[int, ...]]:
    if n == 0:
        return [()] if deg == 0 else []
    out = []

    def rec(k: int, left: int, acc: tuple) -> None:
        if k == n - 1:
            out.append(acc + (left,))
            return
        for x in range(left, -1, -1):
            rec(k + 1, left - x, acc + (x,))

    rec(0, deg, ())
    return out


@lru_cache(maxsize=None)
def reduced_words(n: int) -> tuple[tuple[int, ...], ...]:
    """One reduced word (in ``1..n-1``) for every permutation of ``n`` letters."""
    words = {tuple(range(n)): ()}
    frontier = [tuple(range(n))]
    while frontier:
        nxt = []
        for w in frontier:
            for r in range(1, n):
                k = r - 1
                # left multiplication by s_r: swap the values r-1 and r... in positions
                v = list(w)
                v[k], v[k + 1] = v[k + 1], v[k]
                v = tuple(v)
                if v not in words:
                    words[v] = (r,) + words[w]
                    nxt.append(v)
        frontier = nxt
    return tuple(sorted(words.values(), key=lambda x: (len(x), x)))


def psi_word(word: Sequence[int]) -> list:
    """Tokens for ``psi_{word[0]} ... psi_{word[-1]}``."""
    return [("psi", r) for r in word]


class CyclotomicQuotient:
    """``R^Lambda_n`` for ``Lambda = sum_m Lambda_{kappa_m}``."""

    def __init__(self, e: Optional[int], kappa: Sequence[int], n: int):
        self.e = e
        self.kappa = tuple(kappa)
        self.n = n
        self.rep = pr.KLRRep(e, n)
        self.stair = pr.staircase_monomials(n)
        self._j_cache: dict = {}
        self._psi_cache: dict = {}

    def mod(self, x: int) -> int:
        return self.rep.mod(x)

    def level(self, i: int) -> int:
        return sum(1 for k in self.kappa if self.mod(k) == self.mod(i))

    # -- operators as vectors --------------------------------------------
    def vector(self, op: Operator, source: tuple) -> tuple[Optional[tuple], Vector]:
        """Values of ``op`` on the staircase basis of block ``source``."""
        target = None
        vec: Vector = {}
        for idx, b in enumerate(self.stair):
            out = op((tuple(source), pr.p_monomial(b)))
            if out is None or not out[1]:
                continue
            res, f = out
            if target is None:
                target = res
            elif res != target:
                raise ValueError("operator is not homogeneous in residues")
            for ex, c in f.items():
                vec[(idx, ex)] = c
        return target, vec

    def word_vector(self, word, source: tuple):
        return self.vector(lambda st: self.rep.apply_word(word, st), source)

    # -- the ideal ---------------------------------------------------------
    def _psi_images(self, source: tuple):
        """``psi_v e(source)`` applied to each staircase monomial."""
        key = tuple(source)
        if key not in self._psi_cache:
            out = []
            for v in reduced_words(self.n):
                word = psi_word(v)
                deg = self.rep.word_degree(word, key)
                imgs = [self.rep.apply_word(word, (key, pr.p_monomial(b))) for b in self.stair]
                top = tuple(self.rep.apply_word(word, (key, pr.p_one(self.n)))[0])
                out.append((v, deg, top, imgs))
            self._psi_cache[key] = out
        return self._psi_cache[key]

    def ideal_vectors(self, target: tuple, source: tuple, deg: int) -> list[Vector]:
        """A spanning set of ``e(target) J e(source)`` in degree ``deg``."""
        key = (tuple(target), tuple(source), deg)
        if key in self._j_cache:
            return self._j_cache[key]
        rows: list[Vector] = []
        for v, dv, k, imgs in self._psi_images(source):
            if self.n == 0:
                break
            N = self.level(k[0])
            for u in reduced_words(self.n):
                uword = psi_word(u)
                du = self.rep.word_degree(uword, k)
                rest = deg - dv - du - 2 * N
                if rest < 0 or rest % 2:
                    continue
                top = self.rep.apply_word(uword, (k, pr.p_one(self.n)))[0]
                if tuple(top) != tuple(target):
                    continue
                for c in monomials_of_degree(self.n, rest // 2):
                    c = (c[0] + N,) + tuple(c[1:])
                    vec: Vector = {}
                    for idx, st in enumerate(imgs):
                        if not st[1]:
                            continue
                        g = pr.p_mul_mono(st[1], c)
                        g = self.rep.apply_word(uword, (st[0], g))[1]
                        for ex, val in g.items():
                            vec[(idx, ex)] = vec.get((idx, ex), 0) + val
                    vec = {a: b for a, b in vec.items() if b}
                    if vec:
                        rows.append(vec)
        self._j_cache[key] = rows
        return rows

    def affine_dimension(self, target: tuple, source: tuple, deg: int) -> int:
        """Dimension of ``e(target) R e(source)`` (affine algebra) in degree ``deg``."""
        total = 0
        for w in reduced_words(self.n):
            word = psi_word(w)
            top = self.rep.apply_word(word, (tuple(source), pr.p_one(self.n)))[0]
            if tuple(top) != tuple(target):
                continue
            rest = deg - self.rep.word_degree(word, tuple(source))
            if rest >= 0 and rest % 2 == 0:
                total += len(monomials_of_degree(self.n, rest // 2))
        return total

    def ideal_dimension(self, target: tuple, source: tuple, deg: int) -> int:
        rows = self.ideal_vectors(target, source, deg)
        return _Columns.from_vectors(rows).rank(rows)

    def quotient_dimension(self, target: tuple, source: tuple, deg: int) -> int:
        return self.affine_dimension(target, source, deg) - self.ideal_dimension(target, source, deg)


class _Columns:
    def __init__(self, keys: Iterable):
        self.keys = sorted(set(keys))
        self.index = {k: i for i, k in enumerate(self.keys)}

    @classmethod
    def from_vectors(cls, vecs: Iterable[Vector]) -> "_Columns":
        keys = set()
        for v in vecs:
            keys.update(v)
        return cls(keys)

    def matrix(self, vecs: Sequence[Vector]) -> flint.fmpq_mat:
        m = flint.fmpq_mat(len(vecs), max(1, len(self.keys)))
        for r, v in enumerate(vecs):
            for k, x in v.items():
                m[r, self.index[k]] = _q(x)
        return m

    def rank(self, vecs: Sequence[Vector]) -> int:
        if not vecs:
            return 0
        return self.matrix(vecs).rref()[1]


def _q(x) -> flint.fmpq:
    if isinstance(x, Fraction):
        return flint.fmpq(x.numerator, x.denominator)
    return flint.fmpq(x)


def _frac(x: flint.fmpq) -> Fraction:
    return Fraction(int(x.p), int(x.q))


class BlockSolver:
    """Express vectors of one graded block in a basis modulo the ideal.

    ``basis`` are the vectors of the proposed quotient basis; they must be
    linearly independent modulo ``span(ideal)``.
    """

    def __init__(self, ideal: Sequence[Vector], basis: Sequence[Vector]):
        cols = _Columns.from_vectors(list(ideal) + list(basis))
        self.cols = cols
        if ideal:
            red, rk = cols.matrix(ideal).rref()
            j_rows = [[red[r, c] for c in range(red.ncols())] for r in range(rk)]
        else:
            j_rows = []
        self.ideal_rank = len(j_rows)
        b_rows = []
        for v in basis:
            row = [flint.fmpq(0)] * max(1, len(cols.keys))
            for k, x in v.items():
                row[cols.index[k]] = _q(x)
            b_rows.append(row)
        self.nbasis = len(b_rows)
        allrows = j_rows + b_rows
        self.rank = len(allrows)
        if not allrows:
            self.M = None
            return
        M = flint.fmpq_mat(allrows)
        red, rk = M.rref()
        if rk != len(allrows):
            raise NotInSpan(
                f"proposed basis is dependent modulo the ideal (rank {rk} < {len(allrows)})"
            )
        pivots = []
        c = 0
        for r in range(rk):
            while red[r, c] == 0:
                c += 1
            pivots.append(c)
            c += 1
        self.M = M
        self.pivots = pivots
        sub = flint.fmpq_mat([[M[r, c] for c in pivots] for r in range(rk)])
        self.inv = sub.inv()

    def solve(self, vec: Vector) -> list[Fraction]:
        """Coefficients of ``vec`` on the basis (the ideal part is discarded)."""
        if not vec:
            return [Fraction(0)] * self.nbasis
        if self.M is None:
            raise NotInSpan("block is zero but the vector is not")
        for k in vec:
            if k not in self.cols.index:
                raise NotInSpan(f"coordinate {k} lies outside the block span")
        full = [flint.fmpq(0)] * self.M.ncols()
        for k, x in vec.items():
            full[self.cols.index[k]] = _q(x)
        rhs = flint.fmpq_mat([[full[c] for c in self.pivots]])
        x = rhs * self.inv
        back = x * self.M
        for c in range(self.M.ncols()):
            if back[0, c] != full[c]:
                raise NotInSpan("vector is not in the span of the ideal and the basis")
        return [_frac(x[0, self.ideal_rank + r]) for r in range(self.nbasis)]
