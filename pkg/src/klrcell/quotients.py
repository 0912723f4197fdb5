"""Quotients by idempotents with an increasing run of residues.

At the FLOTW weighting, when every window ``alpha_i + ... + alpha_{i+h}``
meets at most one fundamental weight of ``kappa``, killing the idempotents
``e(i)`` whose first ``h + 1`` residues increase by one leaves a
quasi-hereditary algebra with cells indexed by multipartitions having at most
``h`` columns per component.  ``h = 1, ell = 2`` is the generalised blob
algebra.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import combinatorics as cb
from . import linalg
from .engine.cellular import CellularAlgebra, DiagramElement
from .linalg import Field, QQ
from .params import Params, flotw_theta


class InadmissibleError(ValueError):
    """The multicharge violates the window condition for this ``h``."""


def admissible(kappa, e: Optional[int], h: int) -> bool:
    """``(Lambda(kappa), alpha_i + ... + alpha_{i+h}) <= 1`` for every residue ``i``."""
    if e is None:
        starts = {k - d for k in kappa for d in range(h + 1)}
        window = lambda i: {i + d for d in range(h + 1)}
    else:
        starts = set(range(e))
        # the window wraps; on a short cycle residues repeat and count repeatedly
        window = None
    for i in sorted(starts):
        if e is None:
            hits = sum(1 for k in kappa if k in window(i))
        else:
            hits = sum(
                sum(1 for d in range(h + 1) if (i + d) % e == k % e) for k in kappa
            )
        if hits > 1:
            return False
    return True


def column_bounded(lam, h: int) -> bool:
    return all(not part or part[0] <= h for part in lam)


@dataclass(frozen=True)
class QuotientSpec:
    h: int
    params: Params

    @staticmethod
    def make(e, ell: int, n: int, kappa, h: int) -> "QuotientSpec":
        p = Params(e, n, flotw_theta(ell), tuple(kappa), ell)
        if not admissible(p.kappa, p.e, h):
            raise InadmissibleError(f"kappa={p.kappa} is not admissible for e={p.e_label}, h={h}")
        return QuotientSpec(h, p)

    def label_set(self) -> list:
        return [lam for lam in cb.sorted_multipartitions(self.params) if column_bounded(lam, self.h)]


def check_saturated(spec: QuotientSpec) -> bool:
    """Everything below a label in the dominance order is again a label."""
    labels = set(spec.label_set())
    for lam in labels:
        for mu in cb.multipartitions(spec.params.ell, spec.params.n):
            if cb.dominates(lam, mu, spec.params) and mu not in labels:
                return False
    return True


def quotient_basis(spec: QuotientSpec) -> list:
    p = spec.params
    out = []
    for lam in spec.label_set():
        ts = cb.enumerate_std(lam, p)
        out += [(lam, s, t) for s in ts for t in ts]
    return out


def ideal_generators(spec: QuotientSpec) -> list[tuple]:
    """Residue sequences of the killed idempotents that occur in the algebra."""
    p = spec.params
    n, h = p.n, spec.h
    if h + 1 > n:
        return []
    live = {cb.residue_sequence(t, p) for lam in cb.multipartitions(p.ell, n) for t in cb.enumerate_std(lam, p)}
    return sorted(i for i in live if all(p.mod(i[k] + 1) == p.mod(i[k + 1]) for k in range(h)))


@dataclass(frozen=True)
class IdealCheck:
    ideal_dimension: int
    cell_ideal_dimension: int

    @property
    def equal(self) -> bool:
        return self.ideal_dimension == self.cell_ideal_dimension


def ideal_equality_check(spec: QuotientSpec, alg: Optional[CellularAlgebra] = None) -> IdealCheck:
    """Compare ``dim H e H`` for the killed idempotents with the cell ideal outside ``P(h)``."""
    p = spec.params
    alg = alg or CellularAlgebra(p)
    gens = set(ideal_generators(spec))
    labels = set(spec.label_set())
    cell_dim = sum(len(alg.tableaux(lam)) ** 2 for lam in alg.multipartitions() if lam not in labels)
    syms = alg.symbols()
    left = [x for x in syms if alg.res(x[2]) in gens]
    right = [x for x in syms if alg.res(x[1]) in gens]
    index = {x: k for k, x in enumerate(syms)}
    rows = []
    for a in left:
        for b in right:
            if alg.res(a[2]) != alg.res(b[1]):
                continue
            prod = alg.multiply(DiagramElement.symbol(*a), DiagramElement.symbol(*b))
            if prod:
                row = [0] * len(syms)
                for sym, c in prod.terms:
                    row[index[sym]] = c
                rows.append(row)
    dim = linalg.rank(rows, QQ) if rows else 0
    return IdealCheck(dim, cell_dim)


def quotient_decomposition_submatrix(
    spec: QuotientSpec, field: Field = QQ, alg: Optional[CellularAlgebra] = None
) -> linalg.DecompositionMatrix:
    alg = alg or CellularAlgebra(spec.params)
    full = linalg.decomposition_matrix(alg, field)
    labels = spec.label_set()
    missing = [lam for lam in labels if lam not in full.columns]
    if missing:
        raise ArithmeticError(f"labels without a simple module: {missing}")
    return full.restrict(labels)
