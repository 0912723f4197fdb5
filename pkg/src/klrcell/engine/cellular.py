"""The graded cellular basis ``c_st = C_S^* C_T`` and normal forms.

Elements are formal combinations of *words*.  A word is a tuple of tokens
applied right to left:

* ``("e", i)``, ``("y", r)``, ``("psi", r)``: KLR generators at the omega
  loading (their images under the isomorphism with the Schur idempotent
  truncation);
* ``("C", lam, t)``: the straight-line diagram from the omega loading to the
  loading of ``lam``, strand ``k`` ending on the box of ``t`` holding ``k``;
* ``("Cs", lam, s)``: the reflection of ``("C", lam, s)``.

A word is evaluated in the polynomial representation on every live residue
block, and the resulting vectors are reduced modulo the cyclotomic ideal
into the coordinates of the ``c_st``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from .. import combinatorics as cb
from ..params import Params
from . import polyrep as pr
from .cyclotomic import BlockSolver, CyclotomicQuotient, NotInSpan
from .diagrams import Diagram, DiagramEvaluator, Move, NonGenericDiagram

Token = tuple
Word = tuple  # of tokens
Symbol = tuple  # (lam, s, t)


class CellularityError(ArithmeticError):
    """A structure constant violated the cellular axioms."""


# ---------------------------------------------------------------------------
# formal linear combinations


@dataclass(frozen=True)
class DiagramElement:
    """A finite linear combination of words (products read left to right)."""

    terms: tuple  # ((word, coeff), ...) sorted, nonzero

    @staticmethod
    def from_dict(d: dict) -> "DiagramElement":
        return DiagramElement(tuple(sorted(((w, c) for w, c in d.items() if c), key=repr)))

    @staticmethod
    def word(*tokens: Token, coeff=1) -> "DiagramElement":
        return DiagramElement.from_dict({tuple(tokens): coeff})

    @staticmethod
    def symbol(lam, s, t, coeff=1) -> "DiagramElement":
        return DiagramElement.word(("Cs", lam, s), ("C", lam, t), coeff=coeff)

    def as_dict(self) -> dict:
        return dict(self.terms)

    def __add__(self, other: "DiagramElement") -> "DiagramElement":
        d = self.as_dict()
        for w, c in other.terms:
            d[w] = d.get(w, 0) + c
        return DiagramElement.from_dict(d)

    def scale(self, c) -> "DiagramElement":
        return DiagramElement.from_dict({w: v * c for w, v in self.terms})

    def __mul__(self, other: "DiagramElement") -> "DiagramElement":
        d: dict = {}
        for w1, c1 in self.terms:
            for w2, c2 in other.terms:
                w = w1 + w2
                d[w] = d.get(w, 0) + c1 * c2
        return DiagramElement.from_dict(d)

    def star(self) -> "DiagramElement":
        return DiagramElement.from_dict({star_word(w): c for w, c in self.terms})

    def __bool__(self) -> bool:
        return bool(self.terms)


def star_word(word: Word) -> Word:
    out = []
    for tok in reversed(word):
        if tok[0] == "C":
            out.append(("Cs",) + tok[1:])
        elif tok[0] == "Cs":
            out.append(("C",) + tok[1:])
        else:
            out.append(tok)
    return tuple(out)


@dataclass(frozen=True)
class CellularElement:
    """Coordinates in the basis ``{c_st}``: a sorted tuple of ``((lam, s, t), coeff)``."""

    terms: tuple

    @staticmethod
    def from_dict(d: dict) -> "CellularElement":
        return CellularElement(tuple(sorted(((k, c) for k, c in d.items() if c), key=repr)))

    def as_dict(self) -> dict:
        return dict(self.terms)

    def coeff(self, lam, s, t):
        return self.as_dict().get((lam, s, t), 0)

    def to_diagram(self) -> DiagramElement:
        d = {}
        for (lam, s, t), c in self.terms:
            d[(("Cs", lam, s), ("C", lam, t))] = c
        return DiagramElement.from_dict(d)

    def __bool__(self) -> bool:
        return bool(self.terms)


# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _quotient(e, kappa: tuple, n: int) -> CyclotomicQuotient:
    return CyclotomicQuotient(e, kappa, n)


class CellularAlgebra:
    """``H_n(kappa)`` with its ``theta``-cellular basis, computed exactly."""

    OMEGA = "omega"

    def __init__(self, p: Params, seed: int = 0):
        self.p = p
        self.n = p.n
        self.Q = _quotient(p.e, p.kappa, p.n)
        self.ev = DiagramEvaluator(p.e, p.theta, p.kappa)
        self.eps = Fraction(1, 4 * p.ell * (p.n + 2))
        self._mps = cb.sorted_multipartitions(p)
        self._rank = {lam: k for k, lam in enumerate(self._mps)}
        self._tabs = {lam: cb.enumerate_std(lam, p) for lam in self._mps}
        self._res = {}
        self._deg = {}
        for lam, ts in self._tabs.items():
            for t in ts:
                self._res[t] = cb.residue_sequence(t, p)
                self._deg[t] = cb.degree(t, p)
        self.live = sorted({self._res[t] for t in self._res})
        self.omega_positions = tuple(cb.position(b, p, self.eps) for b in cb.omega_boxes(p))
        self._diagrams: dict = {}
        self._solvers: dict = {}
        self._vectors: dict = {}
        self._seed = seed
        self._shift = self._generic_shift(seed)
        self.psi_signs: dict = {}

    # -- combinatorial data used by linalg ---------------------------------
    def multipartitions(self) -> tuple:
        return self._mps

    def tableaux(self, lam) -> list:
        return self._tabs[lam]

    def res(self, t) -> tuple:
        return self._res[t]

    def deg(self, t) -> int:
        return self._deg[t]

    def symbols(self) -> list[Symbol]:
        return [(lam, s, t) for lam in self._mps for s in self._tabs[lam] for t in self._tabs[lam]]

    def dominance_rank(self, lam) -> int:
        return self._rank[lam]

    # -- diagrams -----------------------------------------------------------
    def _generic_shift(self, seed: int) -> dict:
        rng = random.Random(seed)
        scale = self.eps / 64
        boxes = {b for lam in self._mps for b in cb.boxes_of(lam)}
        return {b: scale * Fraction(rng.randint(1, 10**6), 10**6) for b in sorted(boxes)}

    def box_position(self, b) -> Fraction:
        return cb.position(b, self.p, self.eps) + self._shift[b]

    def c_diagram(self, t) -> Diagram:
        """``C_T`` for ``T = phi(t)`` as a single straight-line layer."""
        if t not in self._diagrams:
            labels = self._res[t]
            start = self.omega_positions
            end = tuple(self.box_position(b) for b in t)
            d = Diagram(labels, [Move(start, end)])
            deg = self.ev.degree(d)
            if deg != self._deg[t]:
                raise CellularityError(f"diagram degree {deg} != tableau degree {self._deg[t]} for {t}")
            self._diagrams[t] = d
        return self._diagrams[t]

    # -- evaluation ---------------------------------------------------------
    def _apply(self, word: Word, res: tuple, f: pr.Poly):
        """Apply ``word`` to ``(res, f)`` at the omega loading."""
        loading = self.OMEGA
        rep = self.Q.rep
        for tok in reversed(word):
            kind = tok[0]
            if kind in ("e", "y", "psi"):
                if loading != self.OMEGA:
                    raise ValueError("KLR generator applied away from the omega loading")
                if kind == "e":
                    if tuple(tok[1]) != res:
                        return None
                elif kind == "y":
                    res, f = rep.y((res, f), tok[1])
                else:
                    res, f = rep.psi((res, f), tok[1])
            elif kind == "C":
                lam, t = tok[1], tok[2]
                if loading != self.OMEGA or res != self._res[t]:
                    return None
                f = self.ev.apply(self.c_diagram(t), f)
                loading, res = lam, None
            elif kind == "Cs":
                lam, s = tok[1], tok[2]
                if loading != lam:
                    return None
                f = self.ev.apply(self.c_diagram(s).star(), f)
                loading, res = self.OMEGA, self._res[s]
            else:
                raise ValueError(f"unknown token {tok!r}")
            if not f:
                return None
        if loading != self.OMEGA:
            raise ValueError("word does not end at the omega loading")
        return res, f

    def word_degree(self, word: Word, res: tuple) -> int:
        d = 0
        rep = self.Q.rep
        for tok in reversed(word):
            kind = tok[0]
            if kind == "psi":
                d += rep.psi_degree(res, tok[1])
                k = tok[1] - 1
                res = res[:k] + (res[k + 1], res[k]) + res[k + 2 :]
            elif kind == "y":
                d += 2
            elif kind == "C":
                d += self._deg[tok[2]]
            elif kind == "Cs":
                d += self._deg[tok[2]]
                res = self._res[tok[2]]
        return d

    def _word_vectors(self, word: Word, coeff, acc: dict) -> None:
        for i in self.live:
            deg = self.word_degree(word, i)
            target, vec = self.Q.vector(lambda st, w=word: self._apply(w, st[0], st[1]), i)
            if target is None:
                continue
            key = (target, i, deg)
            cur = acc.setdefault(key, {})
            for k, v in vec.items():
                nv = cur.get(k, 0) + coeff * v
                if nv:
                    cur[k] = nv
                else:
                    cur.pop(k, None)

    def symbol_vector(self, lam, s, t):
        key = (lam, s, t)
        if key not in self._vectors:
            word = (("Cs", lam, s), ("C", lam, t))
            target, vec = self.Q.vector(lambda st: self._apply(word, st[0], st[1]), self._res[t])
            if target is None:
                target = self._res[s]
            self._vectors[key] = (target, vec)
        return self._vectors[key]

    def solver(self, target: tuple, source: tuple, deg: int):
        key = (target, source, deg)
        if key not in self._solvers:
            syms = [
                (lam, s, t)
                for lam in self._mps
                for s in self._tabs[lam]
                if self._res[s] == target
                for t in self._tabs[lam]
                if self._res[t] == source and self._deg[s] + self._deg[t] == deg
            ]
            vecs = [self.symbol_vector(*x)[1] for x in syms]
            ideal = self.Q.ideal_vectors(target, source, deg)
            self._solvers[key] = (syms, BlockSolver(ideal, vecs))
        return self._solvers[key]

    # -- normal forms -------------------------------------------------------
    def normalize(self, x: DiagramElement) -> CellularElement:
        acc: dict = {}
        for word, c in x.terms:
            self._word_vectors(word, c, acc)
        out: dict = {}
        for (target, source, deg), vec in acc.items():
            if not vec:
                continue
            syms, solver = self.solver(target, source, deg)
            coeffs = solver.solve(vec)
            for sym, c in zip(syms, coeffs):
                if c:
                    out[sym] = out.get(sym, 0) + _intify(c)
        return CellularElement.from_dict(out)

    def klr_embed(self, word: Sequence[Token]) -> DiagramElement:
        for tok in word:
            _check_klr_token(tok, self.n)
        return DiagramElement.word(*word)

    def multiply(self, a, b) -> CellularElement:
        a = a.to_diagram() if isinstance(a, CellularElement) else a
        b = b.to_diagram() if isinstance(b, CellularElement) else b
        return self.normalize(a * b)

    def star(self, x):
        if isinstance(x, CellularElement):
            return CellularElement.from_dict({(lam, t, s): c for (lam, s, t), c in x.terms})
        return x.star()

    def basis_count(self) -> tuple[int, int]:
        """``(independent, quotient)`` summed over every graded block.

        ``independent`` counts basis vectors certified linearly independent
        modulo the cyclotomic ideal; ``quotient`` is the dimension of the
        cyclotomic quotient in the same blocks, one degree step beyond the
        extreme basis degrees on each side.
        """
        blocks: dict = {}
        for lam, s, t in self.symbols():
            blocks.setdefault((self._res[s], self._res[t]), []).append(self._deg[s] + self._deg[t])
        indep = quot = 0
        for (a, b), degs in sorted(blocks.items()):
            for d in range(min(degs) - 2, max(degs) + 3):
                indep += self.solver(a, b, d)[1].nbasis
                quot += self.Q.quotient_dimension(a, b, d)
        return indep, quot

    # -- cellular data ------------------------------------------------------
    def more_dominant(self, mu, lam) -> bool:
        return cb.dominates(mu, lam, self.p)

    def _check_modulo(self, res: CellularElement, lam, allowed: set) -> dict:
        """Keep shape-``lam`` coefficients in ``allowed``; everything else must be higher."""
        keep = {}
        for (mu, s, t), c in res.terms:
            if mu == lam:
                if (s, t) not in allowed:
                    raise CellularityError(f"unexpected shape-{lam} term c_({s},{t})")
                keep[(s, t)] = c
            elif not self.more_dominant(mu, lam):
                raise CellularityError(f"term of shape {mu} not above {lam}")
        return keep

    def top_tableau(self, lam):
        return self._tabs[lam][0]

    def gram_matrix(self, lam) -> list[list]:
        """``<s,t>`` from ``c_{u s} c_{t u} = <s,t> c_{u u}`` modulo higher terms."""
        if not hasattr(self, "_gram"):
            self._gram = {}
        if lam in self._gram:
            return self._gram[lam]
        tabs = self._tabs[lam]
        u = self.top_tableau(lam)
        mat = [[0] * len(tabs) for _ in tabs]
        for a, s in enumerate(tabs):
            for b, t in enumerate(tabs):
                if self._res[s] != self._res[t] or self._deg[s] + self._deg[t] != 0:
                    continue
                if b < a and self._res[s] == self._res[t]:
                    continue
                prod = self.normalize(
                    DiagramElement.word(("Cs", lam, u), ("C", lam, s), ("Cs", lam, t), ("C", lam, u))
                )
                keep = self._check_modulo(prod, lam, {(u, u)})
                mat[a][b] = keep.get((u, u), 0)
        for a in range(len(tabs)):
            for b in range(a):
                if self._res[tabs[a]] == self._res[tabs[b]] and self._deg[tabs[a]] + self._deg[tabs[b]] == 0:
                    mat[a][b] = mat[b][a]
        self._gram[lam] = mat
        return mat

    def psi_basis_transition(self, lam) -> dict:
        """Coordinates of every ``psi_{s t}`` of shape ``lam`` in the ``c`` basis.

        Raises :class:`CellularityError` unless the expansion is
        ``+-c_{s t}`` plus terms of strictly more dominant shape.  The sign of
        each leading coefficient is recorded in ``self.psi_signs``.
        """
        base = cb.find_cyclic_tableau(lam, self.p)
        if base is None:
            raise NotCyclicError(f"no cyclic tableau of shape {lam}")
        out = {}
        for s in self._tabs[lam]:
            for t in self._tabs[lam]:
                x = self.normalize(DiagramElement.word(*psi_word_for(lam, s, t, self.p, base)))
                keep = self._check_modulo(x, lam, {(s, t)})
                lead = keep.get((s, t), 0)
                if lead not in (1, -1):
                    raise CellularityError(f"psi_({s},{t}) has leading coefficient {lead}")
                self.psi_signs[(lam, s, t)] = lead
                out[(s, t)] = x
        return out

    def cell_action(self, word: Sequence[Token], lam, t=None) -> list[list]:
        """Matrix ``M`` with ``a c_{s t} = sum_u M[u][s] c_{u t}`` modulo higher terms."""
        tabs = self._tabs[lam]
        t = t if t is not None else self.top_tableau(lam)
        a = DiagramElement.word(*word) if word else DiagramElement.word()
        mat = [[0] * len(tabs) for _ in tabs]
        allowed = {(u, t) for u in tabs}
        for j, s in enumerate(tabs):
            prod = self.normalize(a * DiagramElement.symbol(lam, s, t))
            keep = self._check_modulo(prod, lam, allowed)
            for i, u in enumerate(tabs):
                mat[i][j] = keep.get((u, t), 0)
        return mat


class NotCyclicError(ValueError):
    """No cyclic tableau exists for the requested shape."""


def psi_word_for(lam, s, t, p: Params, base=None) -> Word:
    """KLR word of ``psi_{s t} = psi_s^* y_lam psi_t`` built on the cyclic tableau ``base``."""
    if base is None:
        base = cb.find_cyclic_tableau(lam, p)
        if base is None:
            raise NotCyclicError(f"no cyclic tableau of shape {lam}")
    ds = cb.place_permutation_word(base, s)
    dt = cb.place_permutation_word(base, t)
    ys = []
    for k in range(1, p.n + 1):
        ys += [("y", k)] * cb.a_count(base, k, p)
    left = [("psi", j) for j in reversed(ds)]
    right = [("psi", j) for j in dt]
    return tuple(left + ys + [("e", cb.residue_sequence(base, p))] + right)


def _intify(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


def _check_klr_token(tok, n: int) -> None:
    kind = tok[0]
    if kind == "psi":
        if not 1 <= tok[1] < n:
            raise IndexError(f"psi_{tok[1]} out of range for n={n}")
    elif kind == "y":
        if not 1 <= tok[1] <= n:
            raise IndexError(f"y_{tok[1]} out of range for n={n}")
    elif kind == "e":
        if len(tok[1]) != n:
            raise IndexError(f"e{tuple(tok[1])} has the wrong length for n={n}")
    else:
        raise ValueError(f"not a KLR generator: {tok!r}")
