"""Closed-form bounds and exact values for radio numbers of stacked-book graphs.

All functions use exact integer arithmetic (Python ints, no overflow) and
validate their parameter domains.
"""

from __future__ import annotations

from dataclasses import dataclass


def _check_params(m: int, n: int, min_m: int = 3) -> None:
    if not isinstance(m, int) or not isinstance(n, int):
        raise ValueError("m and n must be integers")
    if m < min_m:
        raise ValueError(f"m must be >= {min_m}, got {m}")
    if n < 2 or n % 2 != 0:
        raise ValueError(f"n must be an even integer >= 2, got {n}")


def lower_bound(m: int, n: int) -> int:
    """Radio-number lower bound for G_{m,n}: m*n^2/2 + n - 1.

    Equals (n/2 - 1) chain links of m*n + 3 plus one block span m*n - n/2 + 2.
    """
    _check_params(m, n)
    return (n // 2 - 1) * (m * n + 3) + m * n - n // 2 + 2


def exact_radio_number(m: int, n: int) -> int:
    """Exact radio number m*n^2/2 + n - 1; only established for m >= 4."""
    _check_params(m, n)
    if m == 3:
        raise ValueError("exact radio number is only known for m >= 4; "
                         "for m == 3 use lower_bound and upper_bound_m3")
    return (m * n * n) // 2 + n - 1


def upper_bound_m3(n: int) -> int:
    """Constructive upper bound for G_{3,n}: 3*n^2/2 + n."""
    _check_params(3, n)
    return (3 * n * n) // 2 + n


def star_span_lower_bound(m: int, n: int) -> int:
    """Minimum label spread over any single star page of G_{m,n}: n*(m-1) + 1."""
    _check_params(m, n)
    return n * (m - 1) + 1


def block_lower_bound(m: int, n: int) -> int:
    """Minimum base-relative span of a two-star block: m*n - n/2 + 2."""
    _check_params(m, n)
    return m * n - n // 2 + 2


def block_plus_lower_bound(m: int, n: int) -> int:
    """Minimum base-relative span of a block plus the next chain center: m*n + 3."""
    _check_params(m, n)
    return m * n + 3


def path_radio_number(n: int) -> int:
    """Liu-Zhu radio number of the path P_n.

    2k(k-1)+1 for n = 2k and 2k^2+2 for n = 2k+1.  The formula's stated
    scope starts at n = 3, but at n = 3 it gives 4 while the true optimum
    is 3 (see the exact solver); it is sharp from n = 4 on.
    """
    if not isinstance(n, int) or n < 3:
        raise ValueError(f"path radio number formula needs n >= 3, got {n}")
    k = n // 2
    if n % 2 == 0:
        return 2 * k * (k - 1) + 1
    return 2 * k * k + 2


@dataclass(frozen=True)
class BoundReport:
    """Lower/upper bounds for one (m, n), with the exact value when known."""

    m: int
    n: int
    lower: int
    upper: int
    exact: int | None

    def __post_init__(self) -> None:
        if self.lower > self.upper:
            raise ValueError("lower bound exceeds upper bound")
        if self.exact is not None and not (self.exact == self.lower == self.upper):
            raise ValueError("exact value must equal both bounds")


def bound_report(m: int, n: int) -> BoundReport:
    """Bounds for G_{m,n}; exact is populated iff m >= 4."""
    _check_params(m, n)
    lower = lower_bound(m, n)
    if m == 3:
        return BoundReport(m, n, lower, upper_bound_m3(n), None)
    exact = exact_radio_number(m, n)
    return BoundReport(m, n, lower, exact, exact)
