"""Exact counts of bicoloured graphs, tangles and (3+1)-free posets.

Everything here is exact rational arithmetic.  Labelled quantities are kept
as exponential generating functions and only converted to integer counts
(multiplied by n!) at the boundary, where integrality is asserted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from .errors import IntegralityError, ValuationError
from .series import Series1, Series2

__all__ = [
    "skeleton_series",
    "solve_counting_series",
    "b_lbl_counts",
    "b_lbl_bivariate",
    "b_unl_table",
    "b_unl_bivariate",
    "b_unl_counts",
    "tangle_series_unl",
    "tangle_series_lbl",
    "p_unl_counts",
    "p_lbl_counts",
    "AsymptoticRow",
    "asymptotic_report",
    "partitions",
]


def _clone_weight_c(c: Series2) -> Series2:
    return c * (1 + c).reciprocal()


def skeleton_series(nc: int, nt: int) -> Series2:
    """S(c, t), the solution of S = 1 + c/(1+c) S^2 + t S^3, to orders (nc, nt).

    Each fixed-point round fixes one more total degree, so nc + nt + 1 rounds
    settle the whole table; the loop also stops as soon as a round changes
    nothing.
    """
    c = Series2.x(nc, nt)
    tt = Series2.y(nc, nt)
    q = _clone_weight_c(c)
    S = Series2.constant(1, nc, nt)
    for _ in range(nc + nt + 1):
        S2 = S * S
        nxt = 1 + q * S2 + tt * S2 * S
        if nxt == S:
            break
        S = nxt
    return S


def solve_counting_series(C: Series1, T: Series1, N: int) -> Series1:
    """Unique P with P = 1 + C/(1+C) P^2 + T P^3 modulo x^(N+1)."""
    if C[0] != 0 or T[0] != 0:
        raise ValuationError("clone and tangle series must have zero constant term")
    C = C.truncate(N)
    T = T.truncate(N)
    q = C * (1 + C).reciprocal()
    P = Series1.one(N)
    for _ in range(N + 1):
        P2 = P * P
        P = 1 + q * P2 + T * P2 * P
    return P


def b_lbl_counts(N: int) -> list[int]:
    """Bicoloured graphs on n labelled vertices, n = 0..N."""
    return [sum(math.comb(n, i) * 2 ** (i * (n - i)) for i in range(n + 1)) for n in range(N + 1)]


def b_lbl_bivariate(nx: int, ny: int) -> Series2:
    """EGF sum 2^(ij) x^i y^j / (i! j!)."""
    return Series2.from_function(
        lambda i, j: Fraction(2 ** (i * j), math.factorial(i) * math.factorial(j)), nx, ny
    )


def partitions(n: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of n as non-increasing tuples."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in partitions(n - k, k):
            yield (k,) + rest


@lru_cache(maxsize=None)
def _cycle_types(n: int) -> tuple[tuple[dict[int, int], int], ...]:
    """(multiplicities of cycle lengths, class size n!/z_lambda) for each type."""
    out = []
    for lam in partitions(n):
        mult: dict[int, int] = {}
        for part in lam:
            mult[part] = mult.get(part, 0) + 1
        z = math.prod(i**m * math.factorial(m) for i, m in mult.items())
        out.append((mult, math.factorial(n) // z))
    return tuple(out)


@lru_cache(maxsize=None)
def _b_unl(k: int, m: int) -> int:
    # A p-cycle of tops and a q-cycle of bottoms act on the p*q edge slots
    # between them with gcd(p, q) orbits.
    total = 0
    for lam, size_l in _cycle_types(k):
        for mu, size_m in _cycle_types(m):
            orbits = sum(a * b * math.gcd(p, q) for p, a in lam.items() for q, b in mu.items())
            total += size_l * size_m * 2**orbits
    value, rem = divmod(total, math.factorial(k) * math.factorial(m))
    if rem:
        raise IntegralityError(f"Burnside sum for ({k}, {m}) is not integral")
    return value


def b_unl_table(k: int, m: int) -> int:
    """Unlabelled bicoloured graphs with k top and m bottom vertices."""
    return _b_unl(k, m)


def b_unl_bivariate(nx: int, ny: int, total: int | None = None) -> Series2:
    """B_unl(x, y) to orders (nx, ny).

    With ``total`` set, coefficients of total degree above it are left at zero;
    products and reciprocals stay exact for every x^i y^j with i + j <= total.
    """
    if total is None:
        return Series2.from_function(_b_unl, nx, ny)
    return Series2.from_function(lambda i, j: _b_unl(i, j) if i + j <= total else 0, nx, ny)


def b_unl_counts(N: int) -> list[int]:
    return [sum(_b_unl(k, n - k) for k in range(n + 1)) for n in range(N + 1)]


def tangle_series_unl(nx: int, ny: int, total: int | None = None) -> Series2:
    """OGF of unlabelled tangles: 1 - x - y - 1/B_unl(x, y).

    ``total`` bounds the total degree that is computed (see b_unl_bivariate).
    """
    B = b_unl_bivariate(nx, ny, total)
    T = 1 - Series2.x(nx, ny) - Series2.y(nx, ny) - B.reciprocal()
    if total is None:
        return T
    return Series2.from_function(lambda i, j: T[i, j] if i + j <= total else 0, nx, ny)


def tangle_series_lbl(nx: int, ny: int) -> Series2:
    """EGF of labelled tangles: e^-x + e^-y - 1 - 1/B_lbl(x, y)."""
    ex = Series2.in_x(Series1.exp(nx, -1), ny)
    ey = Series2.in_y(Series1.exp(ny, -1), nx)
    return ex + ey - 1 - b_lbl_bivariate(nx, ny).reciprocal()


def _check_tangle_valuation(T: Series1) -> None:
    v = T.valuation()
    assert v is None or v >= 4, f"tangle series has a term below x^4 (valuation {v})"


@lru_cache(maxsize=None)
def _p_unl(N: int) -> tuple[int, ...]:
    x = Series1.x(N)
    C = x * (1 - x).reciprocal()
    T = tangle_series_unl(N, N, total=N).diagonal(N)
    _check_tangle_valuation(T)
    P = solve_counting_series(C, T, N)
    try:
        return tuple(P.integers())
    except ValueError as e:
        raise IntegralityError(str(e)) from None


def p_unl_counts(N: int) -> list[int]:
    """Unlabelled (3+1)-free posets on n vertices, n = 0..N."""
    return list(_p_unl(N))


@lru_cache(maxsize=None)
def _p_lbl(N: int) -> tuple[int, ...]:
    C = Series1.exp(N) - 1
    B = Series1(tuple(Fraction(b, math.factorial(n)) for n, b in enumerate(b_lbl_counts(N))))
    T = 2 * Series1.exp(N, -1) - 1 - B.reciprocal()
    _check_tangle_valuation(T)
    P = solve_counting_series(C, T, N)
    try:
        return tuple(P.integers(scale_factorial=True))
    except ValueError as e:
        raise IntegralityError(str(e)) from None


def p_lbl_counts(N: int) -> list[int]:
    """Labelled (3+1)-free posets on n vertices, n = 0..N."""
    return list(_p_lbl(N))


@dataclass(frozen=True)
class AsymptoticRow:
    n: int
    unl_ratio: Fraction  # p_unl(n) / b_unl(n)
    lbl_ratio: Fraction  # p_lbl(n) / b_lbl(n)
    sym_ratio: Fraction  # n! b_unl(n) / b_lbl(n)

    def as_dict(self, digits: int = 12) -> dict:
        out = {"n": self.n}
        for name in ("unl_ratio", "lbl_ratio", "sym_ratio"):
            v = getattr(self, name)
            out[name] = str(v)
            out[name + "_decimal"] = f"{float(v):.{digits}f}"
        return out


def asymptotic_report(N: int = 22, start: int = 0) -> list[AsymptoticRow]:
    pu, pl = p_unl_counts(N), p_lbl_counts(N)
    bu, bl = b_unl_counts(N), b_lbl_counts(N)
    return [
        AsymptoticRow(
            n,
            Fraction(pu[n], bu[n]),
            Fraction(pl[n], bl[n]),
            Fraction(math.factorial(n) * bu[n], bl[n]),
        )
        for n in range(start, N + 1)
    ]
