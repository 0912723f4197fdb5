"""Exact graded linear algebra.

Laurent polynomials in ``t``, exact matrices over the rationals and prime
fields (thin wrappers over python-flint), graded characters, and the
Gram-rank / simple-character / decomposition-matrix pipeline.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import TYPE_CHECKING, Iterable, Mapping, Optional, Sequence

import flint

if TYPE_CHECKING:  # pragma: no cover
    from .engine.cellular import CellularAlgebra


# ---------------------------------------------------------------------------
# Laurent polynomials


class LaurentPoly:
    """Immutable Laurent polynomial with exact (int or Fraction) coefficients."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, int | Fraction] | None = None):
        c = {int(k): v for k, v in (coeffs or {}).items() if v != 0}
        for k, v in c.items():
            if isinstance(v, Fraction) and v.denominator == 1:
                c[k] = int(v)
        self._c = dict(sorted(c.items()))
        self._hash = None

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def monomial(cls, exp: int, coeff: int | Fraction = 1) -> "LaurentPoly":
        return cls({exp: coeff})

    @classmethod
    def from_exponents(cls, exps: Iterable[int]) -> "LaurentPoly":
        c: dict[int, int] = {}
        for k in exps:
            c[k] = c.get(k, 0) + 1
        return cls(c)

    @property
    def coeffs(self) -> dict[int, int | Fraction]:
        return dict(self._c)

    def __iter__(self):
        return iter(self._c.items())

    def __getitem__(self, k: int):
        return self._c.get(k, 0)

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        return isinstance(other, LaurentPoly) and self._c == other._c

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._c.items()))
        return self._hash

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        c = dict(self._c)
        for k, v in other._c.items():
            c[k] = c.get(k, 0) + v
        return LaurentPoly(c)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({k: -v for k, v in self._c.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other) -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return LaurentPoly({k: v * other for k, v in self._c.items()})
        c: dict[int, int | Fraction] = {}
        for a, x in self._c.items():
            for b, y in other._c.items():
                c[a + b] = c.get(a + b, 0) + x * y
        return LaurentPoly(c)

    __rmul__ = __mul__

    def at_one(self) -> int | Fraction:
        return sum(self._c.values())

    def bar(self) -> "LaurentPoly":
        return LaurentPoly({-k: v for k, v in self._c.items()})

    def min_degree(self) -> Optional[int]:
        return min(self._c) if self._c else None

    def max_degree(self) -> Optional[int]:
        return max(self._c) if self._c else None

    def is_nonnegative(self) -> bool:
        return all(v >= 0 for v in self._c.values())

    def to_json(self) -> dict[str, str]:
        return {str(k): str(v) for k, v in self._c.items()}

    @classmethod
    def from_json(cls, data: Mapping[str, str]) -> "LaurentPoly":
        return cls({int(k): Fraction(v) for k, v in data.items()})

    def __repr__(self) -> str:
        if not self._c:
            return "0"
        terms = []
        for k, v in self._c.items():
            if k == 0:
                terms.append(str(v))
            else:
                base = "t" if k == 1 else f"t^{k}"
                terms.append(base if v == 1 else f"{v}*{base}")
        return " + ".join(terms)


def laurent(coeffs: Mapping[int, int]) -> LaurentPoly:
    return LaurentPoly(coeffs)


# ---------------------------------------------------------------------------
# fields and exact matrices


@dataclass(frozen=True)
class Field:
    """``characteristic == 0`` is the rationals, otherwise a prime field."""

    characteristic: int = 0

    def __post_init__(self) -> None:
        p = self.characteristic
        if p < 0 or (p > 0 and not _is_prime(p)):
            raise ValueError(f"field characteristic must be 0 or prime, got {p}")

    @classmethod
    def parse(cls, text: str) -> "Field":
        t = text.strip()
        if t.upper() in {"Q", "QQ"}:
            return cls(0)
        if t.lower().startswith("fp:"):
            return cls(int(t[3:]))
        if t.upper().startswith("F") and t[1:].isdigit():
            return cls(int(t[1:]))
        raise ValueError(f"unknown field {text!r}; use Q or Fp:<prime>")

    @property
    def label(self) -> str:
        return "Q" if self.characteristic == 0 else f"Fp:{self.characteristic}"


QQ = Field(0)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    k = 2
    while k * k <= p:
        if p % k == 0:
            return False
        k += 1
    return True


def _to_fmpq(x) -> flint.fmpq:
    if isinstance(x, Fraction):
        return flint.fmpq(x.numerator, x.denominator)
    return flint.fmpq(x)


def rank(rows: Sequence[Sequence], field: Field = QQ) -> int:
    """Rank of a dense matrix given as a list of rows."""
    if not rows or not rows[0]:
        return 0
    nr, nc = len(rows), len(rows[0])
    if field.characteristic == 0:
        m = flint.fmpq_mat(nr, nc, [_to_fmpq(x) for row in rows for x in row])
        return m.rank()
    p = field.characteristic
    flat = []
    for row in rows:
        for x in row:
            if isinstance(x, Fraction):
                if x.denominator % p == 0:
                    raise ValueError("entry not integral at p")
                flat.append(int(x.numerator * pow(x.denominator, -1, p)) % p)
            else:
                flat.append(int(x) % p)
    return flint.nmod_mat(nr, nc, flat, p).rank()


def rref_rational(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over the rationals and pivot columns."""
    if not rows:
        return [], []
    nr, nc = len(rows), len(rows[0])
    m = flint.fmpq_mat(nr, nc, [_to_fmpq(x) for row in rows for x in row])
    r, rk = m.rref()
    out = []
    pivots = []
    for i in range(rk):
        row = [Fraction(int(r[i, j].p), int(r[i, j].q)) for j in range(nc)]
        out.append(row)
        pivots.append(next(j for j, x in enumerate(row) if x != 0))
    return out, pivots


def solve_rational(a_rows: Sequence[Sequence], b: Sequence) -> Optional[list[Fraction]]:
    """Solve ``x A = b`` for a row vector ``x`` (unique or ``None``)."""
    nr = len(a_rows)
    if nr == 0:
        return [] if all(v == 0 for v in b) else None
    nc = len(a_rows[0])
    # columns of the augmented system are the rows of A
    aug = [[a_rows[i][j] for i in range(nr)] + [b[j]] for j in range(nc)]
    red, piv = rref_rational(aug)
    if nr in piv:
        return None
    if len(piv) < nr:
        raise ValueError("solution is not unique")
    x = [Fraction(0)] * nr
    for row, pc in zip(red, piv):
        x[pc] = row[nr]
    return x


# ---------------------------------------------------------------------------
# graded characters and decomposition matrices


class GradedCharacter(dict):
    """Map from residue sequence to Laurent polynomial."""

    def total(self) -> int | Fraction:
        return sum(v.at_one() for v in self.values())

    def clean(self) -> "GradedCharacter":
        return GradedCharacter({k: v for k, v in self.items() if v})

    def __add__(self, other: "GradedCharacter") -> "GradedCharacter":
        out = GradedCharacter(self)
        for k, v in other.items():
            out[k] = out.get(k, LaurentPoly.zero()) + v
        return out.clean()

    def scale(self, f: LaurentPoly) -> "GradedCharacter":
        return GradedCharacter({k: v * f for k, v in self.items()}).clean()

    def to_json(self) -> list:
        return [
            {"residues": list(k), "poly": v.to_json()}
            for k, v in sorted(self.items())
        ]


@dataclass
class DecompositionMatrix:
    rows: list  # multipartitions, least dominant first
    columns: list  # simple labels
    entries: dict = field(default_factory=dict)  # (row, col) -> LaurentPoly

    def entry(self, lam, mu) -> LaurentPoly:
        return self.entries.get((lam, mu), LaurentPoly.zero())

    def as_lists(self) -> list[list[LaurentPoly]]:
        return [[self.entry(r, c) for c in self.columns] for r in self.rows]

    def at_one(self) -> list[list]:
        return [[x.at_one() for x in row] for row in self.as_lists()]

    def restrict(self, labels) -> "DecompositionMatrix":
        keep = set(labels)
        rows = [r for r in self.rows if r in keep]
        cols = [c for c in self.columns if c in keep]
        ent = {(r, c): self.entry(r, c) for r in rows for c in cols if self.entry(r, c)}
        return DecompositionMatrix(rows, cols, ent)


def _graded_block_ranks(alg: "CellularAlgebra", lam, field: Field) -> dict[tuple, int]:
    """Rank of each ``(residue sequence, degree)`` block of the Gram form.

    Rows are tableaux of degree ``d``; columns are tableaux with the same
    residue sequence and degree ``-d``.  The rank is the dimension of the
    simple head in that weight space and degree.
    """
    gram = alg.gram_matrix(lam)
    tabs = alg.tableaux(lam)
    out: dict[tuple, int] = {}
    keys = sorted({(alg.res(t), alg.deg(t)) for t in tabs})
    for (i, d) in keys:
        rows_idx = [k for k, t in enumerate(tabs) if alg.res(t) == i and alg.deg(t) == d]
        cols_idx = [k for k, t in enumerate(tabs) if alg.res(t) == i and alg.deg(t) == -d]
        if not cols_idx:
            out[(i, d)] = 0
            continue
        block = [[gram[a][b] for b in cols_idx] for a in rows_idx]
        out[(i, d)] = rank(block, field)
    return out


def gram_rank(alg: "CellularAlgebra", lam, field: Field = QQ) -> int:
    return rank(alg.gram_matrix(lam), field) if alg.tableaux(lam) else 0


def gram_radical_dims(alg: "CellularAlgebra", lam, field: Field = QQ) -> LaurentPoly:
    """Graded dimension of the radical of the cellular form."""
    ranks = _graded_block_ranks(alg, lam, field)
    counts: dict[int, int] = {}
    for t in alg.tableaux(lam):
        counts[alg.deg(t)] = counts.get(alg.deg(t), 0) + 1
    for (i, d), r in ranks.items():
        counts[d] = counts.get(d, 0) - r
    return LaurentPoly(counts)


def cell_character(alg: "CellularAlgebra", lam) -> GradedCharacter:
    ch = GradedCharacter()
    for t in alg.tableaux(lam):
        key = alg.res(t)
        ch[key] = ch.get(key, LaurentPoly.zero()) + LaurentPoly.monomial(alg.deg(t))
    return ch.clean()


def simple_character(alg: "CellularAlgebra", mu, field: Field = QQ) -> GradedCharacter:
    ranks = _graded_block_ranks(alg, mu, field)
    if sum(ranks.values()) == 0:
        raise ValueError(f"{mu} does not label a simple module (zero Gram form)")
    ch = GradedCharacter()
    for (i, d), r in ranks.items():
        if r:
            ch[i] = ch.get(i, LaurentPoly.zero()) + LaurentPoly.monomial(d, r)
    return ch.clean()


def simple_labels(alg: "CellularAlgebra", field: Field = QQ) -> list:
    return [lam for lam in alg.multipartitions() if gram_rank(alg, lam, field) > 0]


def decomposition_matrix(alg: "CellularAlgebra", field: Field = QQ) -> DecompositionMatrix:
    """Solve ``ch Delta(lam) = sum_mu d_{lam mu}(t) ch L(mu)`` exactly.

    The unknown coefficients of each ``d_{lam mu}`` over a bounded degree
    window are found by one exact linear solve per ``lam``; uniqueness of the
    solution certifies that the simple characters are independent.
    """
    rows = list(alg.multipartitions())
    labels = simple_labels(alg, field)
    simples = {mu: simple_character(alg, mu, field) for mu in labels}
    degs = [alg.deg(t) for lam in rows for t in alg.tableaux(lam)]
    lo = min(degs, default=0) - max(degs, default=0)
    hi = -lo
    shifts = list(range(lo, hi + 1))
    keys = sorted({(i, d) for ch in simples.values() for i, poly in ch.items() for d, _ in poly})
    # basis vectors t^s ch L(mu) over (residue, degree) coordinates
    coords: dict[tuple, int] = {}
    vecs = []
    unknowns = []
    for mu in labels:
        for s in shifts:
            vec = {}
            for i, poly in simples[mu].items():
                for d, c in poly:
                    vec[(i, d + s)] = c
            vecs.append(vec)
            unknowns.append((mu, s))
            for k in vec:
                coords.setdefault(k, len(coords))
    result = DecompositionMatrix(rows, labels)
    for lam in rows:
        target = {}
        for i, poly in cell_character(alg, lam).items():
            for d, c in poly:
                target[(i, d)] = c
                coords.setdefault((i, d), len(coords))
        ncoord = len(coords)
        a = [[v.get(k, 0) for k in sorted(coords, key=coords.get)] for v in vecs]
        a = [row + [0] * (ncoord - len(row)) for row in a]
        b = [target.get(k, 0) for k in sorted(coords, key=coords.get)]
        x = solve_rational(a, b)
        if x is None:
            raise ArithmeticError(f"character of {lam} is not a combination of simple characters")
        for (mu, s), val in zip(unknowns, x):
            if val:
                cur = result.entries.get((lam, mu), LaurentPoly.zero())
                result.entries[(lam, mu)] = cur + LaurentPoly.monomial(s, val)
        for mu in labels:
            ent = result.entries.get((lam, mu))
            if ent is not None and not ent.is_nonnegative():
                raise ArithmeticError(f"negative decomposition number at {lam}, {mu}")
    return result
