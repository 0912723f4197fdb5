"""Local identities for strands pulled through small box configurations.

Each identity is a linear relation between layered diagrams with the same
endpoints.  Since the polynomial representation of the affine algebra is
faithful, an identity holds iff both sides agree as operators; this is
checked exactly on all monomials up to a fixed degree.

Coordinates are read off the standard pictures with the ghost offset
rescaled to one.  ``i`` is a fixed label and ``e`` defaults to ``None``.

``PRINTED`` records the expansions in the form they are usually drawn;
``RESOLVED`` records expansions found by solving for coefficients with
:func:`solve_expansion`.  The two lists differ for several entries.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as F
from typing import Optional, Sequence

from . import polyrep as pr
from .cyclotomic import monomials_of_degree
from .diagrams import Diagram, DiagramEvaluator, Dot, Move
from ..linalg import rref_rational

I = 5  # any label far from 0 works when e is None


def layered(labels: Sequence[int], path: Sequence[Sequence], dots: Optional[dict] = None) -> Diagram:
    """Straight-line diagram through the positions ``path[0], path[1], ...``.

    ``dots[k]`` lists strands dotted after the ``k``-th move (``k = 0``:
    at the bottom).
    """
    dots = dots or {}
    first = tuple(F(x) for x in path[0])
    layers: list = [Move(first, first)]
    layers += [Dot(s) for s in dots.get(0, ())]
    for k in range(1, len(path)):
        layers.append(Move(tuple(F(x) for x in path[k - 1]), tuple(F(x) for x in path[k])))
        layers += [Dot(s) for s in dots.get(k, ())]
    return Diagram(tuple(labels), layers)


Term = tuple  # (coefficient, Diagram)


@dataclass(frozen=True)
class LocalIdentity:
    name: str
    lhs: tuple[Term, ...]
    rhs: tuple[Term, ...]

    @property
    def n(self) -> int:
        return len(self.lhs[0][1].labels)


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    holds: bool
    degrees: frozenset

    @property
    def homogeneous(self) -> bool:
        return len(self.degrees) == 1


def _values(ev: DiagramEvaluator, terms, n: int, maxdeg: int) -> list[dict]:
    out = []
    for d in range(maxdeg + 1):
        for m in monomials_of_degree(n, d):
            acc: dict = {}
            for c, dg in terms:
                f = ev.apply(dg, pr.p_monomial(m))
                if f:
                    acc = pr.p_add(acc, f, c)
            out.append({k: v for k, v in acc.items() if v})
    return out


def check_identity(ident: LocalIdentity, e: Optional[int] = None, maxdeg: int = 3) -> IdentityCheck:
    ev = DiagramEvaluator(e, (), ())
    degs = frozenset(ev.degree(d) for _, d in ident.lhs + ident.rhs)
    same = _values(ev, ident.lhs, ident.n, maxdeg) == _values(ev, ident.rhs, ident.n, maxdeg)
    return IdentityCheck(ident.name, same, degs)


def solve_expansion(lhs, candidates: Sequence[Term], e: Optional[int] = None, maxdeg: int = 3):
    """Coefficients ``c`` with ``lhs = sum c_k candidates[k]``, or ``None``.

    ``candidates`` carries names in place of coefficients.  Returns
    ``(coefficients, number_of_free_parameters)``; free parameters are set
    to zero.
    """
    ev = DiagramEvaluator(e, (), ())
    n = len(lhs[0][1].labels)
    target = _values(ev, lhs, n, maxdeg)
    cols = [_values(ev, [(1, d)], n, maxdeg) for _, d in candidates]
    rows = []
    for idx, tv in enumerate(target):
        keys = set(tv).union(*(c[idx] for c in cols))
        for k in sorted(keys):
            rows.append([c[idx].get(k, 0) for c in cols] + [tv.get(k, 0)])
    nc = len(candidates)
    red, piv = rref_rational(rows)
    if nc in piv:
        return None
    sol = [F(0)] * nc
    for row, pc in zip(red, piv):
        sol[pc] = row[nc]
    return {name: c for (name, _), c in zip(candidates, sol) if c}, nc - len(piv)


# ---------------------------------------------------------------------------
# configurations


def _n3():
    lab = (I, I)
    base = (0, F(1, 3))
    loop = [base, (0, F(-1, 3)), base]
    return lab, base, loop


def _n1():
    lab = (I, I, I + 1)
    base = (0, F(1, 3), F(-5, 6))
    loop = [base, (0, F(-2, 9), F(-5, 6)), base]
    cross = [base, (F(1, 5), F(1, 7), F(-5, 6)), (F(1, 3), 0, F(-5, 6))]
    return lab, base, loop, cross


def _n2():
    lab = (I, I, I - 1)
    base = (-1, F(-2, 3), F(1, 6))
    loop = [base, (-1, F(-11, 9), F(1, 6)), base]
    cross = [base, (F(-4, 5), F(-6, 7), F(1, 6)), (F(-2, 3), -1, F(1, 6))]
    return lab, base, loop, cross


def _b1_b6():
    lab = (I + 1, I, I - 1, I)
    base = (0, F(4, 5), 2, F(37, 10))
    loop = [base, (0, F(4, 5), 2, F(-3, 2)), base]
    unt = [base, (F(-2, 5), F(9, 10), 2, F(7, 10)), (0, F(37, 10), 2, F(4, 5))]
    return lab, base, loop, unt


def _b2():
    lab = (I, I + 1, I)
    base = (F(4, 5), 2, F(37, 10))
    loop = [base, (F(4, 5), 2, F(-3, 2)), base]
    unt = [base, (F(38, 10), F(19, 10), F(36, 10)), (F(37, 10), 2, F(4, 5))]
    return lab, base, loop, unt


def _b3():
    lab = (I - 1, I, I)
    base = (0, F(4, 5), F(37, 10))
    loop = [base, (0, F(4, 5), F(-3, 2)), base]
    unt = [base, (F(-1, 10), F(38, 10), F(36, 10)), (0, F(37, 10), F(4, 5))]
    return lab, base, loop, unt


def _printed() -> list[LocalIdentity]:
    out = []
    lab, base, loop, unt = _b1_b6()
    out.append(LocalIdentity(
        "dot-through-B1",
        ((1, layered(lab, [base], {0: [3]})),),
        ((-1, layered(lab, loop, {1: [3]})), (1, layered(lab, [base], {0: [2]})), (1, layered(lab, unt))),
    ))
    lab, base, loop, cross = _n1()
    out.append(LocalIdentity(
        "N1", ((1, layered(lab, [base])),),
        ((1, layered(lab, loop, {1: [1]})), (-1, layered(lab, cross))),
    ))
    lab, base, loop, cross = _n2()
    out.append(LocalIdentity(
        "N2", ((1, layered(lab, [base])),),
        ((1, layered(lab, loop, {1: [1]})), (-1, layered(lab, cross))),
    ))
    lab, base, loop = _n3()
    out.append(LocalIdentity(
        "N3", ((1, layered(lab, [base])),),
        ((1, layered(lab, loop, {1: [1], 2: [0]})), (-1, layered(lab, loop, {0: [0], 1: [1]}))),
    ))
    lab, base, loop, unt = _b2()
    out.append(LocalIdentity(
        "B2-double-crossing", ((1, layered(lab, loop, {1: [2]})),),
        ((-1, layered(lab, [base])), (1, layered(lab, unt))),
    ))
    lab, base, loop, unt = _b3()
    out.append(LocalIdentity(
        "B3-double-crossing", ((1, layered(lab, loop, {1: [2]})),),
        ((1, layered(lab, [base])), (1, layered(lab, unt))),
    ))
    return out


def _resolved() -> list[LocalIdentity]:
    out = []
    lab, base, loop, unt = _b1_b6()
    out.append(LocalIdentity(
        "dot-through-B1",
        ((1, layered(lab, [base], {0: [3]})),),
        ((1, layered(lab, loop, {1: [3]})), (1, layered(lab, [base], {0: [2]})), (-1, layered(lab, unt))),
    ))
    lab, base, loop, cross = _n1()
    out.append(LocalIdentity(
        "N1", ((1, layered(lab, [base])),),
        ((-1, layered(lab, loop, {1: [1]})), (1, layered(lab, cross))),
    ))
    out.append(next(x for x in _printed() if x.name == "N2"))
    lab, base, loop = _n3()
    # the second dot sits on the looping strand
    out.append(LocalIdentity(
        "N3", ((1, layered(lab, [base])),),
        ((1, layered(lab, loop, {1: [1], 2: [0]})), (-1, layered(lab, loop, {0: [1], 1: [1]}))),
    ))
    out.append(next(x for x in _printed() if x.name == "B2-double-crossing"))
    lab, base, loop, unt = _b3()
    # no identity term survives: the dotted loop is a multiple of the crossing
    out.append(LocalIdentity(
        "B3-double-crossing", ((1, layered(lab, loop, {1: [2]})),),
        ((-1, layered(lab, unt, {0: [2]})), (-1, layered(lab, unt, {0: [1]})), (1, layered(lab, unt, {0: [0]}))),
    ))
    return out


PRINTED = tuple(_printed())
RESOLVED = tuple(_resolved())


def local_relations() -> list[LocalIdentity]:
    """Dot sliding, ghost bigons and ghost triple points as evaluated here."""
    out = []
    lab = (I, I)
    cross = [(0, F(1, 3)), (F(1, 6) + F(1, 12), F(1, 6) - F(1, 12)), (F(1, 3), 0)]
    # dot top-left = dot bottom-right + identity
    out.append(LocalIdentity(
        "dot-slide",
        ((1, layered(lab, cross, {2: [1]})),),
        ((1, layered(lab, cross, {0: [1]})), (1, layered(lab, [(0, F(1, 3))]))),
    ))
    # solid i bigon with the ghost of an (i-1)-strand, from either side
    lab = (I, I - 1)
    base = (0, F(3, 2))
    for name, mid in (("bigon-left", (F(3, 4), F(3, 2))), ("bigon-right", (0, F(3, 4)))):
        path = [base, mid, base] if name == "bigon-left" else [(F(3, 4), F(3, 2)), (F(-1, 4), F(3, 2)), (F(3, 4), F(3, 2))]
        b = path[0]
        out.append(LocalIdentity(
            name,
            ((1, layered(lab, path)),),
            ((1, layered(lab, [b], {0: [1]})), (-1, layered(lab, [b], {0: [0]}))),
        ))
    # ghost triple points: left bulge = right bulge + identity
    j = I - 1
    lab = (j, j, I)
    base = (0, F(1, 2), F(-3, 4))
    end = (F(1, 2), 0, F(-3, 4))
    out.append(LocalIdentity(
        "ghost-triple-solid-through",
        ((1, layered(lab, [base, (F(2, 5), F(1, 10), F(-6, 5)), end])),),
        ((1, layered(lab, [base, (F(2, 5), F(1, 10), F(-3, 10)), end])), (1, layered(lab, [base]))),
    ))
    lab = (I, I, j)
    base = (F(-1, 2), 0, F(3, 4))
    end = (0, F(-1, 2), F(3, 4))
    out.append(LocalIdentity(
        "ghost-triple-ghost-through",
        ((1, layered(lab, [base, (F(-1, 10), F(-2, 5), F(3, 10)), end])),),
        ((1, layered(lab, [base, (F(-1, 10), F(-2, 5), F(6, 5)), end])), (-1, layered(lab, [base]))),
    ))
    return out
