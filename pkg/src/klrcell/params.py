"""Parameter tuple shared by every computation.

A weighting ``theta`` is stored as a tuple of :class:`fractions.Fraction`.
The quantum characteristic ``e`` is an integer ``>= 2`` or ``None`` for the
characteristic-zero case (residues are then plain integers).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

E_INFINITY: Optional[int] = None


class ParamsError(ValueError):
    """Raised when a parameter tuple violates its invariants."""


def parse_rational(text: str | int | Fraction) -> Fraction:
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    text = text.strip()
    # mixed numbers such as "7 1/2"
    if " " in text:
        whole, frac = text.split(None, 1)
        w = Fraction(whole)
        f = Fraction(frac)
        return w - f if w < 0 or whole.startswith("-") else w + f
    return Fraction(text)


def parse_e(text: str | int | None) -> Optional[int]:
    if text is None:
        return E_INFINITY
    if isinstance(text, int):
        return text
    t = text.strip().lower()
    if t in {"inf", "infinity", "oo", "∞", "0"}:
        return E_INFINITY
    return int(t)


@dataclass(frozen=True)
class Params:
    """The tuple ``(e, ell, n, theta, kappa)``.

    ``theta`` entries must have denominator dividing ``ell`` and pairwise
    non-integral differences.  ``kappa`` entries are reduced modulo ``e``.
    """

    e: Optional[int]
    n: int
    theta: tuple[Fraction, ...]
    kappa: tuple[int, ...]
    ell: int = field(default=0)

    def __post_init__(self) -> None:
        theta = tuple(parse_rational(x) for x in self.theta)
        object.__setattr__(self, "theta", theta)
        ell = self.ell or len(theta)
        object.__setattr__(self, "ell", ell)
        if ell < 1:
            raise ParamsError("level ell must be at least 1")
        if len(theta) != ell or len(self.kappa) != ell:
            raise ParamsError(
                f"theta and kappa must both have length ell={ell} "
                f"(got {len(theta)} and {len(self.kappa)})"
            )
        if self.e is not None and self.e < 2:
            raise ParamsError("e must be an integer >= 2 or infinity")
        if self.n < 0:
            raise ParamsError("n must be non-negative")
        for x in theta:
            if (x * ell).denominator != 1:
                raise ParamsError(f"theta entry {x} does not have denominator dividing ell={ell}")
        for a in range(ell):
            for b in range(a + 1, ell):
                if (theta[a] - theta[b]).denominator == 1:
                    raise ParamsError(
                        f"theta_{a + 1} - theta_{b + 1} = {theta[a] - theta[b]} is an integer"
                    )
        kappa = tuple(int(k) for k in self.kappa)
        if self.e is not None:
            if any(k < 0 or k >= self.e for k in kappa):
                raise ParamsError(f"kappa entries must lie in 0..{self.e - 1}")
        object.__setattr__(self, "kappa", kappa)

    # residue arithmetic -------------------------------------------------
    def mod(self, x: int) -> int:
        return x % self.e if self.e is not None else x

    def adjacent(self, i: int, j: int) -> bool:
        """True when ``j = i +- 1`` in the quiver (and ``i != j``)."""
        if i == j:
            return False
        return self.mod(i - j - 1) == 0 or self.mod(j - i - 1) == 0

    def with_n(self, n: int) -> "Params":
        return Params(self.e, n, self.theta, self.kappa, self.ell)

    def with_theta(self, theta: Iterable) -> "Params":
        return Params(self.e, self.n, tuple(theta), self.kappa, self.ell)

    @property
    def e_label(self) -> str:
        return "inf" if self.e is None else str(self.e)

    def normalized_theta(self) -> tuple[Fraction, ...]:
        """``theta`` translated so that ``theta_1 = 0``; loadings only see differences."""
        base = self.theta[0]
        return tuple(x - base for x in self.theta)

    def as_dict(self) -> dict:
        return {
            "e": self.e_label,
            "ell": self.ell,
            "n": self.n,
            "theta": [str(x) for x in self.theta],
            "kappa": list(self.kappa),
        }


def make_params(
    e: str | int | None,
    n: int,
    theta: Sequence[str | int | Fraction],
    kappa: Sequence[int],
    ell: int | None = None,
) -> Params:
    return Params(parse_e(e), int(n), tuple(parse_rational(x) for x in theta), tuple(kappa), ell or 0)


def asymptotic_theta(ell: int, n: int) -> tuple[Fraction, ...]:
    """A well-separated weighting: consecutive gaps exceed ``n``."""
    return tuple(Fraction(m * (n + 1)) + Fraction(m, ell) for m in range(ell))


def flotw_theta(ell: int) -> tuple[Fraction, ...]:
    return tuple(Fraction(m, ell) for m in range(ell))
