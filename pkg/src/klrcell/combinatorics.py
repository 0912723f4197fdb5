"""Weighted multipartition combinatorics.

Boxes are triples ``(r, c, m)`` (row, column, component, all 1-based).  The
loading of a box is the exact pair ``(ell * (theta_m + r - c), r + c)``; a
smaller loading means a *more* dominant box.  Multipartitions are tuples of
``ell`` partitions, each a tuple of positive parts.  A standard tableau is
stored as the tuple of its boxes in entry order, so ``t[k-1]`` is the box
containing ``k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Optional, Sequence

from .linalg import LaurentPoly
from .params import Params

Box = tuple[int, int, int]
Partition = tuple[int, ...]
Multipartition = tuple[Partition, ...]


class Order(str, Enum):
    GREATER = "Greater"
    LESS = "Less"
    EQUAL = "Equal"
    INCOMPARABLE = "Incomparable"


# ---------------------------------------------------------------------------
# boxes


def residue(box: Box, p: Params) -> int:
    r, c, m = box
    return p.mod(p.kappa[m - 1] + c - r)


def loading(box: Box, p: Params) -> tuple[int, int]:
    r, c, m = box
    primary = p.theta[m - 1] + r - c
    scaled = primary * p.ell
    assert scaled.denominator == 1
    return (int(scaled), r + c)


def position(box: Box, p: Params, eps: Fraction) -> Fraction:
    """x-coordinate of a box for a concrete small ``eps``."""
    r, c, m = box
    return p.theta[m - 1] + r - c + (r + c) * eps


def box_cmp(b1: Box, b2: Box, p: Params) -> Order:
    """``GREATER`` when ``b1`` dominates ``b2`` (sits strictly to its left)."""
    if b1 == b2:
        return Order.EQUAL
    k1, k2 = loading(b1, p), loading(b2, p)
    if k1 == k2:
        raise ValueError(f"boxes {b1} and {b2} share a loading; theta is invalid")
    return Order.GREATER if k1 < k2 else Order.LESS


def sort_boxes(boxes, p: Params) -> list[Box]:
    """Most dominant first."""
    return sorted(boxes, key=lambda b: loading(b, p))


# ---------------------------------------------------------------------------
# multipartitions


def partitions(n: int, max_part: Optional[int] = None) -> Iterator[Partition]:
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def multipartitions(ell: int, n: int) -> tuple[Multipartition, ...]:
    """All ``ell``-multipartitions of ``n`` in a fixed deterministic order."""
    out: list[Multipartition] = []

    def rec(m: int, remaining: int, acc: tuple) -> None:
        if m == ell - 1:
            for part in partitions(remaining):
                out.append(acc + (part,))
            return
        for k in range(remaining, -1, -1):
            for part in partitions(k):
                rec(m + 1, remaining - k, acc + (part,))

    rec(0, n, ())
    return tuple(out)


def boxes_of(lam: Multipartition) -> list[Box]:
    return [
        (r + 1, c + 1, m + 1)
        for m, part in enumerate(lam)
        for r, row in enumerate(part)
        for c in range(row)
    ]


def size(lam: Multipartition) -> int:
    return sum(sum(part) for part in lam)


def empty_multipartition(ell: int) -> Multipartition:
    return tuple(() for _ in range(ell))


def add_box(lam: Multipartition, box: Box) -> Multipartition:
    r, c, m = box
    part = list(lam[m - 1])
    if r == len(part) + 1:
        assert c == 1
        part.append(1)
    else:
        assert part[r - 1] == c - 1
        part[r - 1] += 1
    return lam[: m - 1] + (tuple(part),) + lam[m:]


def remove_box(lam: Multipartition, box: Box) -> Multipartition:
    r, c, m = box
    part = list(lam[m - 1])
    assert part[r - 1] == c
    part[r - 1] -= 1
    if part[r - 1] == 0:
        part.pop()
    return lam[: m - 1] + (tuple(part),) + lam[m:]


def addable_boxes(lam: Multipartition) -> list[Box]:
    out = []
    for m, part in enumerate(lam, start=1):
        rows = list(part)
        for r in range(len(rows) + 1):
            length = rows[r] if r < len(rows) else 0
            above = rows[r - 1] if r > 0 else None
            if above is None or above > length:
                out.append((r + 1, length + 1, m))
    return out


def removable_boxes(lam: Multipartition) -> list[Box]:
    out = []
    for m, part in enumerate(lam, start=1):
        for r, row in enumerate(part):
            below = part[r + 1] if r + 1 < len(part) else 0
            if row > below:
                out.append((r + 1, row, m))
    return out


def addable_removable(lam: Multipartition, i: int, p: Params) -> tuple[list[Box], list[Box]]:
    """``(Add_i(lam), Rem_i(lam))``, each sorted most dominant first."""
    add = [b for b in addable_boxes(lam) if residue(b, p) == i]
    rem = [b for b in removable_boxes(lam) if residue(b, p) == i]
    return sort_boxes(add, p), sort_boxes(rem, p)


def _dominating_count(boxes: Sequence[Box], b: Box, i: int, p: Params) -> int:
    key = loading(b, p)
    return sum(1 for x in boxes if residue(x, p) == i and loading(x, p) <= key)


def _dominated(mu: Multipartition, lam: Multipartition, p: Params) -> bool:
    """``mu`` is weakly dominated by ``lam`` (``mu`` below ``lam``)."""
    lam_boxes = boxes_of(lam)
    mu_boxes = boxes_of(mu)
    for b in mu_boxes:
        i = residue(b, p)
        if _dominating_count(lam_boxes, b, i, p) < _dominating_count(mu_boxes, b, i, p):
            return False
    return True


def dominance_mp(lam: Multipartition, mu: Multipartition, p: Params) -> Order:
    """Compare ``lam`` with ``mu`` in the theta-dominance order.

    ``mu`` lies below ``lam`` when for every box ``b`` of ``mu`` the number of
    boxes of ``lam`` with the residue of ``b`` weakly dominating ``b`` is at
    least the same count taken inside ``mu`` (where ``b`` counts itself).
    """
    if size(lam) != size(mu):
        raise ValueError("multipartitions of different sizes are not comparable")
    if lam == mu:
        return Order.EQUAL
    below = _dominated(mu, lam, p)
    above = _dominated(lam, mu, p)
    if below and not above:
        return Order.GREATER
    if above and not below:
        return Order.LESS
    return Order.INCOMPARABLE


def dominates(lam: Multipartition, mu: Multipartition, p: Params) -> bool:
    """Strict dominance ``lam > mu``."""
    return dominance_mp(lam, mu, p) is Order.GREATER


@lru_cache(maxsize=None)
def sorted_multipartitions(p: Params) -> tuple[Multipartition, ...]:
    """``P_ell(n)`` in a total order refining dominance, least dominant first."""
    mps = list(multipartitions(p.ell, p.n))
    # number of strictly dominated elements is a linear extension
    rank = {lam: sum(1 for mu in mps if dominates(lam, mu, p)) for lam in mps}
    return tuple(sorted(mps, key=lambda lam: (rank[lam], mps.index(lam))))


def omega(p: Params) -> Multipartition:
    """The column ``(1^n)`` placed in the component of largest weight.

    This is always a minimal element of the dominance order (checked here);
    for some weightings the order has several minimal elements and this one
    is singled out because its loading lies to the right of every red point.
    """
    m = omega_component(p)
    lam = tuple(((1,) * p.n if k == m and p.n else ()) for k in range(1, p.ell + 1))
    mps = multipartitions(p.ell, p.n)
    if any(dominance_mp(lam, mu, p) is Order.GREATER for mu in mps):
        raise RuntimeError("the column multipartition is not dominance-minimal")
    return lam


def omega_component(p: Params) -> int:
    """Component holding the column of the minimal multipartition."""
    return max(range(1, p.ell + 1), key=lambda m: p.theta[m - 1])


# ---------------------------------------------------------------------------
# tableaux

Tableau = tuple[Box, ...]


def shape_of(t: Tableau, ell: int) -> Multipartition:
    lam = empty_multipartition(ell)
    for b in t:
        lam = add_box(lam, b)
    return lam


def _extensions(lam: Multipartition, target: Multipartition) -> list[Box]:
    out = []
    for b in addable_boxes(lam):
        r, c, m = b
        part = target[m - 1]
        if r <= len(part) and part[r - 1] >= c:
            out.append(b)
    return out


def enumerate_std(lam: Multipartition, p: Params) -> list[Tableau]:
    """All standard tableaux of shape ``lam``, deterministically ordered."""
    ell = len(lam)
    out: list[Tableau] = []

    def rec(cur: Multipartition, acc: tuple) -> None:
        if len(acc) == size(lam):
            out.append(acc)
            return
        for b in _extensions(cur, lam):
            rec(add_box(cur, b), acc + (b,))

    rec(empty_multipartition(ell), ())
    order = sort_boxes(boxes_of(lam), p)

    def key(t: Tableau) -> tuple[int, ...]:
        entry = {b: k for k, b in enumerate(t, start=1)}
        return tuple(entry[b] for b in order)

    return sorted(out, key=key)


def tableau_entries(t: Tableau) -> dict[Box, int]:
    return {b: k for k, b in enumerate(t, start=1)}


def residue_sequence(t: Tableau, p: Params) -> tuple[int, ...]:
    return tuple(residue(b, p) for b in t)


def box_degree(lam: Multipartition, box: Box, p: Params) -> int:
    """Degree contribution of the removable ``box`` of ``lam``.

    Counts addable minus removable boxes of ``lam`` with the residue of
    ``box`` that are strictly less dominant than ``box``.
    """
    i = residue(box, p)
    key = loading(box, p)
    add, rem = addable_removable(lam, i, p)
    a = sum(1 for b in add if loading(b, p) > key)
    r = sum(1 for b in rem if loading(b, p) > key)
    return a - r


def degree(t: Tableau, p: Params) -> int:
    ell = p.ell
    lam = empty_multipartition(ell)
    total = 0
    for b in t:
        lam = add_box(lam, b)
        total += box_degree(lam, b, p)
    return total


def a_count(t: Tableau, k: int, p: Params) -> int:
    """``|A_t(k)|``: addable boxes counted in the degree of step ``k``."""
    lam = shape_of(t[:k], p.ell)
    b = t[k - 1]
    key = loading(b, p)
    add, _ = addable_removable(lam, residue(b, p), p)
    return sum(1 for x in add if loading(x, p) > key)


# ---------------------------------------------------------------------------
# semistandard tableaux

SemistandardTableau = dict  # box -> box of the weight (its loading is the entry)


def _sstd_ok(T: dict, p: Params) -> bool:
    for (r, c, m), w in T.items():
        val = loading(w, p)
        # theta_m itself has tiebreak 0, below every box
        if r == 1 and c == 1 and not val > (p.theta[m - 1] * p.ell, 0):
            return False
        if r > 1:
            up = loading(T[(r - 1, c, m)], p)
            if not val > (up[0] + p.ell, up[1]):
                return False
        if c > 1:
            left = loading(T[(r, c - 1, m)], p)
            if not val > (left[0] - p.ell, left[1]):
                return False
    return True


def is_semistandard(T: dict, p: Params) -> bool:
    return _sstd_ok(T, p)


def enumerate_sstd(lam: Multipartition, mu: Sequence[Box], p: Params) -> list[dict]:
    """All semistandard tableaux of shape ``lam`` and weight ``mu``.

    ``mu`` is any box configuration (for instance the boxes of a
    multipartition).  Boxes of ``lam`` are filled in row-major order with
    pruning on the row and column conditions.
    """
    lam_boxes = sorted(boxes_of(lam), key=lambda b: (b[2], b[0], b[1]))
    weights = sort_boxes(list(mu), p)
    if len(lam_boxes) != len(weights):
        raise ValueError("shape and weight have different sizes")
    out: list[dict] = []
    used = [False] * len(weights)
    T: dict = {}

    def ok(b: Box, w: Box) -> bool:
        r, c, m = b
        val = loading(w, p)
        if r == 1 and c == 1 and not val > (p.theta[m - 1] * p.ell, 0):
            return False
        if r > 1:
            up = loading(T[(r - 1, c, m)], p)
            if not val > (up[0] + p.ell, up[1]):
                return False
        if c > 1:
            left = loading(T[(r, c - 1, m)], p)
            if not val > (left[0] - p.ell, left[1]):
                return False
        return True

    def rec(k: int) -> None:
        if k == len(lam_boxes):
            out.append(dict(T))
            return
        b = lam_boxes[k]
        for j, w in enumerate(weights):
            if not used[j] and ok(b, w):
                used[j] = True
                T[b] = w
                rec(k + 1)
                del T[b]
                used[j] = False

    rec(0)
    return out


def omega_boxes(p: Params) -> list[Box]:
    """Boxes of the minimal multipartition, in column order."""
    m = omega_component(p)
    return [(r, 1, m) for r in range(1, p.n + 1)]


def phi(t: Tableau, p: Params) -> dict:
    """The semistandard tableau of weight omega with the same reading word."""
    wb = omega_boxes(p)
    return {b: wb[k] for k, b in enumerate(t)}


def phi_inverse(T: dict, p: Params) -> Tableau:
    order = sorted(T, key=lambda b: loading(T[b], p))
    return tuple(order)


def reading_word(T: dict, p: Params) -> tuple[Box, ...]:
    return tuple(sorted(T, key=lambda b: loading(T[b], p)))


def identity_sstd(lam: Multipartition) -> dict:
    return {b: b for b in boxes_of(lam)}


# ---------------------------------------------------------------------------
# graded dimensions and branching


def graded_dim_cell(lam: Multipartition, p: Params) -> LaurentPoly:
    return LaurentPoly.from_exponents(degree(t, p) for t in enumerate_std(lam, p))


def graded_dim_algebra(p: Params) -> LaurentPoly:
    total = LaurentPoly.zero()
    for lam in multipartitions(p.ell, p.n):
        g = graded_dim_cell(lam, p)
        total = total + g * g
    return total


@dataclass(frozen=True)
class BranchingResult:
    removable: list[tuple[Box, int]]
    lhs: LaurentPoly
    rhs: LaurentPoly

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def branching_data(lam: Multipartition, p: Params) -> BranchingResult:
    if size(lam) == 0:
        raise ValueError("branching needs n >= 1")
    rem = sort_boxes(removable_boxes(lam), p)
    pairs = [(b, box_degree(lam, b, p)) for b in rem]
    q = p.with_n(p.n - 1) if p.n == size(lam) else p
    rhs = LaurentPoly.zero()
    for b, d in pairs:
        rhs = rhs + LaurentPoly.monomial(d) * graded_dim_cell(remove_box(lam, b), q)
    return BranchingResult(pairs, graded_dim_cell(lam, p), rhs)


# ---------------------------------------------------------------------------
# cyclic tableaux


def _right_of(b1: Box, b2: Box, p: Params) -> bool:
    return loading(b1, p) > loading(b2, p)


def is_cyclic_box(lam: Multipartition, box: Box, p: Params) -> bool:
    """The two conditions making a removable box cyclic."""
    r, c, m = box
    i = residue(box, p)
    near = {p.mod(i + 1), p.mod(i - 1), i}
    for b in boxes_of(lam):
        if b == box:
            continue
        if residue(b, p) in near and _right_of(b, box, p):
            if not (b[2] == m and b[0] == r):
                return False
    i_boxes = [b for b in boxes_of(lam) if residue(b, p) == i]
    for a in addable_boxes(lam):
        if residue(a, p) != i:
            continue
        if _right_of(box, a, p):
            continue  # to the left of the box
        if all(_right_of(a, b, p) for b in i_boxes):
            continue
        return False
    return True


def is_cyclic_tableau(t: Tableau, p: Params) -> bool:
    lam = empty_multipartition(p.ell)
    for b in t:
        lam = add_box(lam, b)
        if not is_cyclic_box(lam, b, p):
            return False
    return True


def t_lambda_theta(lam: Multipartition, p: Params) -> Tableau:
    """Greedy tableau: ``n`` in the least dominant removable box, and so on."""
    seq: list[Box] = []
    cur = lam
    while size(cur):
        b = sort_boxes(removable_boxes(cur), p)[-1]
        seq.append(b)
        cur = remove_box(cur, b)
    return tuple(reversed(seq))


def find_cyclic_tableau(lam: Multipartition, p: Params, limit: int = 100000) -> Optional[Tableau]:
    first = t_lambda_theta(lam, p)
    if is_cyclic_tableau(first, p):
        return first
    # backtracking from the top entry down, least dominant boxes first
    budget = [limit]

    def rec(cur: Multipartition, acc: list) -> Optional[Tableau]:
        if size(cur) == 0:
            return tuple(reversed(acc))
        budget[0] -= 1
        if budget[0] < 0:
            return None
        for b in reversed(sort_boxes(removable_boxes(cur), p)):
            if is_cyclic_box(cur, b, p):
                acc.append(b)
                res = rec(remove_box(cur, b), acc)
                if res is not None:
                    return res
                acc.pop()
        return None

    return rec(lam, [])


def place_permutation_word(source: Tableau, target: Tableau) -> tuple[int, ...]:
    """Reduced word ``(j_1, ..., j_m)`` with ``source * s_{j_1} ... s_{j_m} = target``.

    The place permutation ``s_j`` swaps the entries ``j`` and ``j+1``; in the
    entry-ordered representation it swaps positions ``j-1`` and ``j``.
    A bubble sort produces the word.
    """
    pos = {b: k for k, b in enumerate(target)}
    seq = [pos[b] for b in source]
    word: list[int] = []
    changed = True
    while changed:
        changed = False
        for j in range(len(seq) - 1):
            if seq[j] > seq[j + 1]:
                seq[j], seq[j + 1] = seq[j + 1], seq[j]
                word.append(j + 1)
                changed = True
    return tuple(word)


def apply_word(t: Tableau, word: Sequence[int]) -> Tableau:
    seq = list(t)
    for j in word:
        seq[j - 1], seq[j] = seq[j], seq[j - 1]
    return tuple(seq)


@dataclass(frozen=True)
class CyclicData:
    t_lambda: Tableau
    y_exponents: tuple[int, ...]
    reduced_words: dict


@dataclass(frozen=True)
class CyclicAnalysis:
    cyclic_boxes: dict
    cyclic_tableau: Optional[Tableau]
    t_lambda_theta: Tableau
    data: CyclicData


def cyclic_data(lam: Multipartition, p: Params, base: Optional[Tableau] = None) -> CyclicData:
    t0 = base if base is not None else t_lambda_theta(lam, p)
    ys = tuple(a_count(t0, k, p) for k in range(1, len(t0) + 1))
    words = {s: place_permutation_word(t0, s) for s in enumerate_std(lam, p)}
    return CyclicData(t0, ys, words)


def cyclic_analysis(lam: Multipartition, p: Params) -> CyclicAnalysis:
    boxes = {b: is_cyclic_box(lam, b, p) for b in removable_boxes(lam)}
    t0 = t_lambda_theta(lam, p)
    return CyclicAnalysis(boxes, find_cyclic_tableau(lam, p), t0, cyclic_data(lam, p, t0))
