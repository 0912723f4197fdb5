"""Good nodes, Uglov multipartitions and the charge/weighting dictionary.

Two reading conventions for the label set are provided.

``"literal"``
    read addable/removable ``i``-nodes from most to least dominant, cancel
    adjacent ``A R`` pairs and take the rightmost surviving ``R``.

``"cellular"`` (default)
    the same cancellation applied to the reading from least to most dominant.
    This is the set of ``lam`` whose cellular form is nonzero: it always
    contains the column multipartition ``omega`` (whose basis element is an
    idempotent) and coincides with the conjugate of the literal set for the
    dual parameters ``theta'_m = -theta_{ell+1-m}``, ``kappa'_m = -kappa_{ell+1-m}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from . import combinatorics as cb
from .combinatorics import Box, Multipartition, Order
from .params import Params

CONVENTIONS = ("cellular", "literal")


@dataclass(frozen=True)
class ISequence:
    """Tagged boxes ``(tag, box)`` with ``tag`` in ``{"A", "R"}``."""

    entries: tuple[tuple[str, Box], ...]

    @property
    def tags(self) -> str:
        return "".join(tag for tag, _ in self.entries)

    def __len__(self) -> int:
        return len(self.entries)


def i_sequence(lam: Multipartition, i: int, p: Params) -> ISequence:
    """Addable and removable ``i``-nodes, most dominant first."""
    add, rem = cb.addable_removable(lam, p.mod(i), p)
    tagged = [("A", b) for b in add] + [("R", b) for b in rem]
    tagged.sort(key=lambda x: cb.loading(x[1], p))
    return ISequence(tuple(tagged))


def reduce_and_good_node(seq: ISequence) -> tuple[ISequence, Optional[Box]]:
    """Cancel adjacent ``A R`` pairs; the good node sits under the last ``R``."""
    stack: list[tuple[str, Box]] = []
    for entry in seq.entries:
        if entry[0] == "R" and stack and stack[-1][0] == "A":
            stack.pop()
        else:
            stack.append(entry)
    reduced = ISequence(tuple(stack))
    good = None
    for tag, b in stack:
        if tag == "R":
            good = b
    return reduced, good


def good_node(lam: Multipartition, i: int, p: Params, convention: str = "literal") -> Optional[Box]:
    seq = i_sequence(lam, i, p)
    if convention == "cellular":
        seq = ISequence(tuple(reversed(seq.entries)))
    elif convention != "literal":
        raise ValueError(f"unknown convention {convention!r}")
    return reduce_and_good_node(seq)[1]


def _residues(p: Params, lam: Multipartition) -> list[int]:
    return sorted({cb.residue(b, p) for b in cb.removable_boxes(lam)})


def uglov_set(p: Params, convention: str = "cellular") -> frozenset:
    """The Uglov multipartitions of size ``p.n``."""
    if convention not in CONVENTIONS:
        raise ValueError(f"unknown convention {convention!r}")
    return _uglov_levels(p.e, p.theta, p.kappa, p.n, convention)[p.n]


@lru_cache(maxsize=None)
def _uglov_levels(e, theta, kappa, n, convention) -> tuple[frozenset, ...]:
    p = Params(e, n, theta, kappa)
    levels = [frozenset({cb.empty_multipartition(p.ell)})]
    for k in range(1, n + 1):
        prev = levels[-1]
        cur = set()
        for lam in cb.multipartitions(p.ell, k):
            for i in _residues(p, lam):
                g = good_node(lam, i, p, convention)
                if g is not None and cb.remove_box(lam, g) in prev:
                    cur.add(lam)
                    break
        levels.append(frozenset(cur))
    return tuple(levels)


def witness(lam: Multipartition, p: Params, convention: str = "cellular") -> Optional[tuple[int, Box]]:
    """A residue and good node whose removal stays inside the label set."""
    if cb.size(lam) == 0:
        return None
    prev = _uglov_levels(p.e, p.theta, p.kappa, cb.size(lam), convention)[cb.size(lam) - 1]
    for i in _residues(p, lam):
        g = good_node(lam, i, p, convention)
        if g is not None and cb.remove_box(lam, g) in prev:
            return i, g
    return None


# ---------------------------------------------------------------------------
# conjugation and duality


def conjugate(lam: Multipartition) -> Multipartition:
    """Reverse the components and transpose each partition."""

    def tr(part):
        return tuple(sum(1 for x in part if x > c) for c in range(part[0])) if part else ()

    return tuple(tr(part) for part in reversed(lam))


def dual_params(p: Params) -> Params:
    theta = tuple(-x for x in reversed(p.theta))
    kappa = tuple(p.mod(-k) for k in reversed(p.kappa))
    return Params(p.e, p.n, theta, kappa, p.ell)


# ---------------------------------------------------------------------------
# charges


def charge_to_pair(s: Sequence[int], e: Optional[int]) -> tuple[tuple[Fraction, ...], tuple[int, ...]]:
    ell = len(s)
    theta = tuple(Fraction(m, ell) - s[m] for m in range(ell))
    kappa = tuple((-x) % e if e is not None else -x for x in s)
    return theta, kappa


def s_order_cmp(b1: Box, b2: Box, s: Sequence[int]) -> Order:
    """``GREATER`` when ``b2 <_s b1``; ``INCOMPARABLE`` on a shared content."""
    if b1 == b2:
        return Order.EQUAL
    (r1, c1, m1), (r2, c2, m2) = b1, b2
    v1, v2 = c1 - r1 + s[m1 - 1], c2 - r2 + s[m2 - 1]
    if v1 != v2:
        return Order.GREATER if v1 > v2 else Order.LESS
    if m1 != m2:
        return Order.GREATER if m1 < m2 else Order.LESS
    return Order.INCOMPARABLE


def equivalence_check(s: Sequence[int], e: Optional[int], n: int) -> bool:
    """``<_s`` and the dominance order of ``theta(s)`` agree on all boxes with ``r + c <= 2n``."""
    theta, kappa = charge_to_pair(s, e)
    p = Params(e, n, theta, kappa)
    boxes = [
        (r, c, m)
        for m in range(1, len(s) + 1)
        for r in range(1, 2 * n)
        for c in range(1, 2 * n - r + 1)
    ]
    for b1 in boxes:
        for b2 in boxes:
            so = s_order_cmp(b1, b2, s)
            if so is Order.INCOMPARABLE:
                # same content and component: the weighting separates them by r + c only
                if cb.loading(b1, p)[0] != cb.loading(b2, p)[0]:
                    return False
                continue
            if so is not cb.box_cmp(b1, b2, p):
                return False
    return True
