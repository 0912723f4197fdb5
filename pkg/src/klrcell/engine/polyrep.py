"""Polynomial representation of the KLR algebra and its weighted diagrams.

Polynomials are dicts mapping exponent tuples to integer coefficients.
Variables are indexed by the left-to-right order of the solid strands, so a
crossing of two solids permutes variables.  A *state* is a pair
``(residues, poly)`` describing one homogeneous vector of the representation.

Operator conventions (all verified against the defining relations in the
test-suite):

* ``psi_r`` on equal labels is the divided difference
  ``f -> (f - s_r f) / (y_r - y_{r+1})``;
* on distinct labels it is ``s_r``, followed by multiplication with
  ``y_{r+1} - y_r`` when ``i_{r+1} = i_r + 1`` before the swap;
* a solid ``i``-strand crossing the ghost of an ``(i-1)``-strand contributes
  nothing when the solid moves rightwards relative to the ghost and the factor
  ``y_ghost_owner - y_solid`` when it moves leftwards;
* a solid crossing a red line of its own label contributes ``y_solid`` when it
  moves from left to right of the red line (see ``RED_FACTOR_ON``).
"""

from __future__ import annotations

from typing import Iterable

Poly = dict  # exponent tuple -> int

RED_FACTOR_ON = "rightward"


def p_one(n: int) -> Poly:
    return {(0,) * n: 1}


def p_monomial(exps: Iterable[int]) -> Poly:
    return {tuple(exps): 1}


def p_add(a: Poly, b: Poly, scale: int = 1) -> Poly:
    out = dict(a)
    for k, v in b.items():
        nv = out.get(k, 0) + scale * v
        if nv:
            out[k] = nv
        else:
            out.pop(k, None)
    return out


def p_scale(a: Poly, c) -> Poly:
    if c == 0:
        return {}
    return {k: v * c for k, v in a.items()}


def p_mul_var(a: Poly, k: int) -> Poly:
    """Multiply by ``y_{k+1}`` (0-based ``k``)."""
    out = {}
    for e, v in a.items():
        e2 = e[:k] + (e[k] + 1,) + e[k + 1 :]
        out[e2] = v
    return out


def p_mul_mono(a: Poly, mono: tuple[int, ...]) -> Poly:
    out = {}
    for e, v in a.items():
        out[tuple(x + y for x, y in zip(e, mono))] = v
    return out


def p_mul_diff(a: Poly, k: int, l: int) -> Poly:
    """Multiply by ``y_{k+1} - y_{l+1}``."""
    return p_add(p_mul_var(a, k), p_mul_var(a, l), -1)


def p_mul(a: Poly, b: Poly) -> Poly:
    out: Poly = {}
    for e1, v1 in a.items():
        for e2, v2 in b.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            nv = out.get(e, 0) + v1 * v2
            if nv:
                out[e] = nv
            else:
                out.pop(e, None)
    return out


def p_swap(a: Poly, k: int) -> Poly:
    """Exchange ``y_{k+1}`` and ``y_{k+2}``."""
    out = {}
    for e, v in a.items():
        e2 = e[:k] + (e[k + 1], e[k]) + e[k + 2 :]
        out[e2] = v
    return out


def p_demazure(a: Poly, k: int) -> Poly:
    """``(f - s f) / (y_{k+1} - y_{k+2})`` computed monomial by monomial."""
    out: Poly = {}
    for e, v in a.items():
        x, y = e[k], e[k + 1]
        if x == y:
            continue
        if x > y:
            terms = [(x - 1 - j, y + j) for j in range(x - y)]
            sign = 1
        else:
            terms = [(x + j, y - 1 - j) for j in range(y - x)]
            sign = -1
        for xx, yy in terms:
            e2 = e[:k] + (xx, yy) + e[k + 2 :]
            nv = out.get(e2, 0) + sign * v
            if nv:
                out[e2] = nv
            else:
                out.pop(e2, None)
    return out


def p_permute(a: Poly, perm: tuple[int, ...]) -> Poly:
    """Variable ``k`` moves to position ``perm[k]``."""
    out = {}
    for e, v in a.items():
        e2 = [0] * len(e)
        for k, x in enumerate(e):
            e2[perm[k]] = x
        out[tuple(e2)] = v
    return out


def p_str(a: Poly) -> str:
    if not a:
        return "0"
    parts = []
    for e, v in sorted(a.items(), reverse=True):
        mono = "*".join(
            (f"y{k + 1}" if x == 1 else f"y{k + 1}^{x}") for k, x in enumerate(e) if x
        )
        if not mono:
            parts.append(str(v))
        elif v == 1:
            parts.append(mono)
        elif v == -1:
            parts.append("-" + mono)
        else:
            parts.append(f"{v}*{mono}")
    return " + ".join(parts).replace("+ -", "- ")


# ---------------------------------------------------------------------------
# KLR generators acting on states


class KLRRep:
    """The polynomial representation of the affine KLR algebra.

    ``mod`` reduces residues (identity when ``e`` is infinite).
    """

    def __init__(self, e, n: int):
        self.e = e
        self.n = n

    def mod(self, x: int) -> int:
        return x % self.e if self.e is not None else x

    def succ(self, i: int, j: int) -> bool:
        """``j = i + 1``."""
        return self.mod(i + 1) == self.mod(j) and i != j

    def psi_degree(self, res: tuple, r: int) -> int:
        a, b = res[r - 1], res[r]
        if a == b:
            return -2
        up, down = self.succ(a, b), self.succ(b, a)
        return int(up) + int(down)

    def psi(self, state, r: int):
        res, f = state
        k = r - 1
        a, b = res[k], res[k + 1]
        if a == b:
            return res, p_demazure(f, k)
        g = p_swap(f, k)
        if self.succ(a, b):
            g = p_mul_diff(g, k + 1, k)
        nres = res[:k] + (b, a) + res[k + 2 :]
        return nres, g

    def y(self, state, r: int):
        res, f = state
        return res, p_mul_var(f, r - 1)

    def apply_word(self, word, state):
        """Apply a KLR word; the rightmost generator acts first.

        ``word`` is a sequence of tokens ``("psi", r)``, ``("y", r)`` or
        ``("e", residues)``.  Returns ``None`` when an idempotent kills the
        state.
        """
        for tok in reversed(word):
            kind, arg = tok
            if kind == "psi":
                state = self.psi(state, arg)
            elif kind == "y":
                state = self.y(state, arg)
            elif kind == "e":
                if tuple(arg) != state[0]:
                    return None
            else:
                raise ValueError(f"unknown generator {kind!r}")
        return state

    def word_degree(self, word, res: tuple) -> int:
        """Degree of ``word * e(res)``."""
        d = 0
        cur = tuple(res)
        for kind, arg in reversed(word):
            if kind == "psi":
                d += self.psi_degree(cur, arg)
                k = arg - 1
                cur = cur[:k] + (cur[k + 1], cur[k]) + cur[k + 2 :]
            elif kind == "y":
                d += 2
        return d


def staircase_monomials(n: int) -> list[tuple[int, ...]]:
    """Monomials ``y^b`` with ``b_k <= k - 1``: a basis over symmetric polynomials."""
    out = [()]
    for k in range(n):
        out = [m + (x,) for m in out for x in range(k + 1)]
    return sorted(out)
