"""Weighted diagrams as sequences of straight-line layers.

A diagram is a list of layers read from bottom to top.  A *move* layer sends
every solid strand linearly from one x-coordinate to another; a *dot* layer
puts a dot on one strand.  Ghosts sit one unit left of their solid and red
lines are vertical at ``theta_m``.  Evaluating a layer finds every crossing
height exactly (rational arithmetic), rejects triple points and applies the
local operators of :mod:`klrcell.engine.polyrep` in height order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from . import polyrep as pr


class NonGenericDiagram(ValueError):
    """Three strands meet at a point or a strand ends on another one."""


@dataclass(frozen=True)
class Move:
    start: tuple[Fraction, ...]
    end: tuple[Fraction, ...]


@dataclass(frozen=True)
class Dot:
    strand: int


@dataclass
class Diagram:
    """Solid strands ``0..n-1`` with fixed labels, drawn layer by layer."""

    labels: tuple[int, ...]
    layers: list = field(default_factory=list)

    @property
    def bottom(self) -> tuple[Fraction, ...]:
        for layer in self.layers:
            if isinstance(layer, Move):
                return layer.start
        raise ValueError("diagram has no move layer")

    @property
    def top(self) -> tuple[Fraction, ...]:
        for layer in reversed(self.layers):
            if isinstance(layer, Move):
                return layer.end
        raise ValueError("diagram has no move layer")

    def bottom_residues(self) -> tuple[int, ...]:
        return _read(self.bottom, self.labels)

    def top_residues(self) -> tuple[int, ...]:
        return _read(self.top, self.labels)

    def star(self) -> "Diagram":
        """Reflection through the horizontal axis."""
        layers = []
        for layer in reversed(self.layers):
            layers.append(Move(layer.end, layer.start) if isinstance(layer, Move) else layer)
        return Diagram(self.labels, layers)


def _read(xs: Sequence[Fraction], labels: Sequence[int]) -> tuple[int, ...]:
    return tuple(labels[k] for k in sorted(range(len(xs)), key=lambda k: xs[k]))


@dataclass(frozen=True)
class Event:
    tau: Fraction
    kind: str  # "SS", "SG", "SR"
    a: int  # moving solid
    b: int  # other solid, ghost owner, or red index
    before: int  # sign of x_a - x_b before the event


class DiagramEvaluator:
    """Evaluates diagrams for fixed residue data ``(e, kappa)`` and weighting."""

    def __init__(self, e: Optional[int], theta: Sequence[Fraction], kappa: Sequence[int]):
        self.e = e
        self.rep = pr.KLRRep(e, 0)
        self.theta = tuple(Fraction(x) for x in theta)
        self.kappa = tuple(kappa)

    # -- geometry ---------------------------------------------------------
    def _events(self, mv: Move, labels) -> list[Event]:
        n = len(mv.start)
        a0, a1 = mv.start, mv.end
        # tracked points: ("S", k), ("G", k), ("R", m)
        pts = [("S", k, a0[k], a1[k]) for k in range(n)]
        pts += [("G", k, a0[k] - 1, a1[k] - 1) for k in range(n)]
        pts += [("R", m, t, t) for m, t in enumerate(self.theta)]
        raw = []
        for u in range(len(pts)):
            for v in range(u + 1, len(pts)):
                p, q = pts[u], pts[v]
                if p[0] == "R" and q[0] == "R":
                    continue
                if {p[0], q[0]} == {"S", "G"} and p[1] == q[1]:
                    continue
                d0, d1 = p[2] - q[2], p[3] - q[3]
                if d0 == 0 or d1 == 0:
                    raise NonGenericDiagram(f"strands {p[:2]} and {q[:2]} meet at a layer boundary")
                if (d0 > 0) == (d1 > 0):
                    continue
                tau = d0 / (d0 - d1)
                x = p[2] + (p[3] - p[2]) * tau
                raw.append((tau, x, p, q, 1 if d0 > 0 else -1))
        # triple points
        for tau, x, p, q, _ in raw:
            hits = 0
            for r in pts:
                if r[2] + (r[3] - r[2]) * tau == x:
                    hits += 1
            if hits != 2:
                raise NonGenericDiagram(f"triple point at height {tau}, x={x}")
        events = []
        for tau, x, p, q, sign in raw:
            kinds = {p[0], q[0]}
            if "S" not in kinds:
                continue  # ghost/ghost and ghost/red crossings are free
            if p[0] != "S":
                p, q, sign = q, p, -sign
            if q[0] == "S":
                events.append(Event(tau, "SS", p[1], q[1], sign))
            elif q[0] == "G":
                events.append(Event(tau, "SG", p[1], q[1], sign))
            else:
                events.append(Event(tau, "SR", p[1], q[1], sign))
        events.sort(key=lambda ev: ev.tau)
        return events

    def _interacts(self, ev: Event, labels) -> bool:
        mod = self.rep.mod
        if ev.kind == "SS":
            return True
        if ev.kind == "SG":
            return mod(labels[ev.b]) == mod(labels[ev.a] - 1) and labels[ev.a] != labels[ev.b]
        return mod(labels[ev.a]) == mod(self.kappa[ev.b])

    # -- degree -----------------------------------------------------------
    def degree(self, d: Diagram) -> int:
        deg = 0
        for layer in d.layers:
            if isinstance(layer, Dot):
                deg += 2
                continue
            for ev in self._events(layer, d.labels):
                if not self._interacts(ev, d.labels):
                    continue
                if ev.kind == "SS":
                    deg += -2 if d.labels[ev.a] == d.labels[ev.b] else 0
                else:
                    deg += 1
        return deg

    # -- action -----------------------------------------------------------
    def apply(self, d: Diagram, poly: pr.Poly) -> pr.Poly:
        """Act on ``poly`` placed at the bottom of ``d``; variables are ranks."""
        labels = d.labels
        n = len(labels)
        order: Optional[list[int]] = None
        f = poly
        for layer in d.layers:
            if isinstance(layer, Dot):
                if order is None:
                    raise ValueError("dot layer before any move layer")
                f = pr.p_mul_var(f, order.index(layer.strand))
                continue
            if order is None:
                order = sorted(range(n), key=lambda k: layer.start[k])
            elif [layer.start[k] for k in order] != sorted(layer.start):
                raise ValueError("layer start does not continue the previous layer")
            for ev in self._events(layer, labels):
                if not f:
                    return f
                if not self._interacts(ev, labels) and ev.kind != "SS":
                    continue
                if ev.kind == "SS":
                    ra, rb = order.index(ev.a), order.index(ev.b)
                    k = min(ra, rb)
                    if abs(ra - rb) != 1:
                        raise NonGenericDiagram("crossing solids are not adjacent")
                    if labels[ev.a] == labels[ev.b]:
                        f = pr.p_demazure(f, k)
                    else:
                        f = pr.p_swap(f, k)
                    order[ra], order[rb] = order[rb], order[ra]
                elif ev.kind == "SG":
                    # ev.before > 0: solid right of ghost before, so it moves leftwards
                    if ev.before > 0:
                        f = pr.p_mul_diff(f, order.index(ev.b), order.index(ev.a))
                else:
                    rightward = ev.before < 0
                    if rightward == (pr.RED_FACTOR_ON == "rightward"):
                        f = pr.p_mul_var(f, order.index(ev.a))
        return f
