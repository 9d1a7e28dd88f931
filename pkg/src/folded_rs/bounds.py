"""Decoding radii and list-size bounds, all in exact rational arithmetic."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import ParameterError


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def decoding_radius(m: int, k: int, R) -> Fraction:
    """k/(k+1) * (1 - m R / (m - k + 1))."""
    R = _frac(R)
    if not 1 <= k <= m:
        raise ParameterError(f"need 1 <= k <= m, got k={k}, m={m}")
    if R <= 0:
        raise ParameterError(f"rate must be positive, got {R}")
    radius = Fraction(k, k + 1) * (1 - m * R / (m - k + 1))
    if radius <= 0:
        raise ParameterError(f"rate {R} >= (m-k+1)/m = {Fraction(m - k + 1, m)}: radius is {radius}")
    return radius


def generic_list_bound(k: int, d: int) -> int:
    """Points of a d-dim affine subspace in a ball of radius k/(k+1) * distance."""
    if k < 1 or d < 1:
        raise ParameterError(f"need k >= 1 and d >= 1, got k={k}, d={d}")
    return k * (k + 1) ** (d - 1)


def frs_affine_bound(k: int, d: int) -> int:
    if d < 0 or k <= d:
        raise ParameterError(f"need k > d >= 0, got k={k}, d={d}")
    return (k - 1) * d + 1


def frs_list_bound(k: int) -> int:
    if k < 1:
        raise ParameterError(f"need k >= 1, got {k}")
    return (k - 1) ** 2 + 1


class Comparison(enum.Enum):
    FRS_LARGER = "frs"
    EQUAL = "equal"
    JOHNSON_LARGER = "johnson"


def johnson_compare(k: int, R) -> Comparison:
    """Compare k/(k+1)(1-R) with the Johnson radius 1 - sqrt(R), exactly.

    1 - k/(k+1)(1-R) is always positive, so the comparison reduces to R vs
    (1 - k/(k+1)(1-R))^2 without any square root.
    """
    R = _frac(R)
    if not 0 < R < 1:
        raise ParameterError(f"rate must lie in (0, 1), got {R}")
    if k < 1:
        raise ParameterError(f"need k >= 1, got {k}")
    gap = 1 - Fraction(k, k + 1) * (1 - R)
    rhs = gap * gap
    if R > rhs:
        return Comparison.FRS_LARGER
    if R == rhs:
        return Comparison.EQUAL
    return Comparison.JOHNSON_LARGER


def johnson_radius(R) -> float:
    return 1 - math.sqrt(_frac(R))


def min_folding(k: int, R, eps) -> int:
    """Least m >= k whose radius reaches k/(k+1)(1 - R - eps).

    The condition reduces to R (k-1) / (m-k+1) <= eps.
    """
    R, eps = _frac(R), _frac(eps)
    if eps <= 0:
        raise ParameterError("eps must be positive")
    if not 0 < R < 1:
        raise ParameterError(f"rate must lie in (0, 1), got {R}")
    if R + eps >= 1:
        raise ParameterError("R + eps must be below 1")
    m = max(k, math.ceil(R * (k - 1) / eps + k - 1))
    target = Fraction(k, k + 1) * (1 - R - eps)
    while m * R >= m - k + 1 or decoding_radius(m, k, R) < target:
        m += 1
    return m


@dataclass(frozen=True)
class BoundReport:
    m: int | None
    k: int
    R: Fraction | None
    d: int
    radius: Fraction | None
    generic_bound: int
    frs_affine_bound: int
    frs_list_bound: int
    johnson_radius: float | None
    johnson: Comparison | None

    FIELDS = ("m", "k", "R", "d", "radius", "generic_bound", "frs_affine_bound",
              "frs_list_bound", "johnson_radius", "johnson")

    def _cells(self) -> list[str]:
        out = []
        for name in self.FIELDS:
            v = getattr(self, name)
            if v is None:
                out.append("")
            elif isinstance(v, float):
                out.append(f"{v:.6f}")
            elif isinstance(v, Comparison):
                out.append(v.value)
            else:
                out.append(str(v))
        return out

    def to_csv(self) -> str:
        return ",".join(self.FIELDS) + "\n" + ",".join(self._cells()) + "\n"

    def to_text(self) -> str:
        width = max(len(f) for f in self.FIELDS)
        return "".join(f"{f:<{width}}  {c or 'n/a'}\n" for f, c in zip(self.FIELDS, self._cells()))


def bound_report(k: int, m: int | None = None, R=None, d: int | None = None) -> BoundReport:
    """Every bound for one parameter point; ``d`` defaults to k - 1."""
    if k < 1:
        raise ParameterError(f"need k >= 1, got {k}")
    d = k - 1 if d is None else d
    if m is not None and k > m:
        raise ParameterError(f"need k <= m, got k={k}, m={m}")
    R = None if R is None else _frac(R)
    radius = decoding_radius(m, k, R) if (m is not None and R is not None) else None
    return BoundReport(
        m=m,
        k=k,
        R=R,
        d=d,
        radius=radius,
        # a 0-dim subspace is a single point
        generic_bound=generic_list_bound(k, d) if d >= 1 else 1,
        frs_affine_bound=frs_affine_bound(k, d),
        frs_list_bound=frs_list_bound(k),
        johnson_radius=None if R is None else johnson_radius(R),
        johnson=None if R is None else johnson_compare(k, R),
    )
