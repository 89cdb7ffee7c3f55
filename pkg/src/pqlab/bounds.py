"""Closed-form bounds and regime classification for Hadwiger-Debrunner numbers.

Everything here is exact.  Where a bound is only known up to a hidden
constant, the report carries the exponent and a caveat, never a made-up
constant.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import comb
from typing import Optional

from .errors import PreconditionError

# Rational upper bound on e, used where e sits in a denominator.
E_UPPER = Fraction(27183, 10000)
ROOT_SCALE = 10**12

KNOWN_HD_2_4_3 = "3 ≤ HD_2(4,3) ≤ 13"


class Regime(str, Enum):
    HD_TIGHT = "HD_TIGHT"
    LARGE_Q_C = "LARGE_Q_C"
    LOG_P_B = "LOG_P_B"
    GENERAL_A = "GENERAL_A"
    OUT_OF_SCOPE = "OUT_OF_SCOPE"


@dataclass(frozen=True)
class PQParams:
    p: int
    q: int
    d: int = 2

    def require_helly_range(self) -> None:
        if self.d < 1:
            raise PreconditionError(f"dimension must be >= 1, got d={self.d}")
        if not self.p >= self.q >= self.d + 1:
            raise PreconditionError(f"need p >= q >= d+1, got p={self.p}, q={self.q}, d={self.d}")


@dataclass(frozen=True)
class BoundReport:
    regime: Regime
    lower: int
    upper_exact: Optional[int] = None
    upper_exponent: Optional[Fraction] = None
    notes: str = ""

    def __post_init__(self):
        if self.upper_exact is not None and self.lower > self.upper_exact:
            raise ValueError("lower bound exceeds exact upper bound")


@dataclass(frozen=True)
class WeakNetRelation:
    r: int
    q: int
    d: int
    p: int
    statement: str


def _binom(n: int, k: int) -> int:
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)


def decaen_bound(n: int, p: int, q: int) -> Fraction:
    """Minimum edge count of a q-uniform hypergraph on n vertices with no independent p-set."""
    if not n >= p >= q >= 2:
        raise PreconditionError(f"need n >= p >= q >= 2, got n={n}, p={p}, q={q}")
    return Fraction(n - p + 1, n - q + 1) * Fraction(comb(n, q), comb(p - 1, q - 1))


def kalai_bound(n: int, r: int, d: int, k: int) -> int:
    """Upper bound on f_{k-1} for n convex sets in R^d whose (d+r+1)-tuples never meet."""
    if n < 1 or r < 0 or k < 1:
        raise PreconditionError(f"need n >= 1, r >= 0, k >= 1, got n={n}, r={r}, k={k}")
    return sum(_binom(r, k - i) * _binom(n - r, i) for i in range(d + 1))


def integer_root_floor(value: int, m: int) -> int:
    """Largest t >= 0 with t**m <= value."""
    if value < 0 or m < 1:
        raise ValueError("need value >= 0 and m >= 1")
    if value < 2 or m == 1:
        return value
    lo, hi = 0, 1 << (value.bit_length() // m + 1)
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if mid**m <= value:
            lo = mid
        else:
            hi = mid - 1
    return lo


def rational_root_lower(value: Fraction, m: int, scale: int = ROOT_SCALE) -> Fraction:
    """A rational lower bound on value**(1/m), accurate to 1/scale."""
    target = value * scale**m
    return Fraction(integer_root_floor(target.numerator // target.denominator, m), scale)


def piercing_fraction_bound(params: PQParams) -> Fraction:
    """Certified rational lower bound on the fraction of sets one point must pierce.

    From ``(q-d)^(q-d) / (4 q e^(q-d) p^(q-1)) <= alpha^(q-d)``, capped at 1/2.
    e is replaced by an upper bound and the root is rounded down, so the
    result never exceeds the true formula value.
    """
    params.require_helly_range()
    p, q, d = params.p, params.q, params.d
    m = q - d
    inner = Fraction(m**m, 4 * q * p ** (q - 1)) / E_UPPER**m
    return min(Fraction(1, 2), rational_root_lower(inner, m))


def piercing_fraction_float(params: PQParams) -> float:
    """The same formula in floating point with the true e (for comparison only)."""
    from math import e

    p, q, d = params.p, params.q, params.d
    m = q - d
    return min(0.5, (m / e) * (4 * q) ** (-1 / m) * p ** (-(q - 1) / m))


def exponent_a(params: PQParams) -> Fraction:
    """Exponent of p in the general bound: d(q-1)/(q-d)."""
    p, q, d = params.p, params.q, params.d
    if q <= d:
        raise PreconditionError(f"need q > d, got q={q}, d={d}")
    return Fraction(d * (q - 1), q - d)


def alon_kleitman_exponent(d: int) -> int:
    """Exponent d^2 + d of the earlier bound HD_d(p, d+1) = O~(p^(d^2+d))."""
    return d * d + d


def ceil_log2(p: int) -> int:
    if p < 1:
        raise ValueError("p must be positive")
    return (p - 1).bit_length()


def _at_least_power(q: int, p: int, expo: Fraction) -> bool:
    # q >= p**expo, decided exactly as q**den >= p**num
    return q**expo.denominator >= p**expo.numerator


def hd_regime(params: PQParams, eps: Fraction | None = None) -> BoundReport:
    """Classify (p, q, d) into the strongest applicable bound.

    Order of precedence: exact Hadwiger-Debrunner range, then the
    ``p - q + 2`` range (only when ``eps`` is supplied), then the q >= log p
    range, then the general exponent.
    """
    params.require_helly_range()
    p, q, d = params.p, params.q, params.d
    lower = p - q + 1
    ak = alon_kleitman_exponent(d)

    if d * q > (d - 1) * p + d:
        return BoundReport(
            Regime.HD_TIGHT,
            lower,
            upper_exact=lower,
            notes=f"q > (d-1)p/d + 1, so HD_{d}({p},{q}) = p - q + 1 = {lower} exactly",
        )

    if eps is not None:
        eps = Fraction(eps)
        if eps <= 0:
            raise PreconditionError("eps must be positive")
        if _at_least_power(q, p, Fraction(d - 1, d) + eps):
            return BoundReport(
                Regime.LARGE_Q_C,
                lower,
                upper_exact=p - q + 2,
                notes=(
                    f"q >= p^((d-1)/d + eps) with eps={eps}; the bound p - q + 2 = {p - q + 2} "
                    "holds only for p >= p_d(eps), a threshold with no known effective value"
                ),
            )

    if q >= ceil_log2(p) and q >= d + 2:
        return BoundReport(
            Regime.LOG_P_B,
            lower,
            upper_exponent=Fraction(d),
            notes=(
                f"q >= ceil(log2 p) = {ceil_log2(p)}: HD <= p - q + O((p/q)^{d} polylog(p/q)); "
                "upper_exponent is the exponent of p/q, hidden constant unknown"
            ),
        )

    expo = exponent_a(params)
    notes = (
        f"HD_{d}({p},{q}) = O~(p^{expo}); hidden constant unknown; "
        f"compare Alon-Kleitman exponent d^2+d = {ak}"
    )
    if (p, q, d) == (4, 3, 2):
        notes += f"; known bracket: {KNOWN_HD_2_4_3}"
    return BoundReport(Regime.GENERAL_A, lower, upper_exponent=expo, notes=notes)


def weak_net_hd_lower(r: int, q: int, d: int) -> WeakNetRelation:
    """With p = rq + 1, any weak (1/r)-net size lower bound also bounds HD_d(p, q) from below."""
    if r < 1 or q < d + 1:
        raise PreconditionError(f"need r >= 1 and q >= d+1, got r={r}, q={q}, d={d}")
    p = r * q + 1
    return WeakNetRelation(
        r, q, d, p,
        f"f(1/{r},{d}) <= HD_{d}({p},{q}): a verified lower bound on weak 1/{r}-net size "
        f"for any point set in R^{d} is a lower bound on HD_{d}({p},{q})",
    )


def ramsey_bound(i: int, j: int) -> int:
    """Upper bound i*j^4 on the convex-set Ramsey number R(i, j)."""
    if i < 1 or j < 1:
        raise PreconditionError(f"need i, j >= 1, got ({i}, {j})")
    return i * j**4
