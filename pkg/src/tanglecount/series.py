"""Truncated power series with exact rational coefficients.

``Series1`` holds coefficients of x^0..x^N; ``Series2`` holds a dense
(Nx+1) x (Ny+1) table for x^i y^j.  Binary operations truncate to the smaller
order of their operands and never extend it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence, Union

from .errors import CompositionOrderError, ZeroConstantTermError

__all__ = ["Series1", "Series2"]

Scalar = Union[int, Fraction]


def _frac(v) -> Fraction:
    return v if isinstance(v, Fraction) else Fraction(v)


@dataclass(frozen=True)
class Series1:
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a series needs at least its constant term")
        object.__setattr__(self, "coeffs", tuple(_frac(v) for v in self.coeffs))

    # construction
    @classmethod
    def of(cls, values: Sequence[Scalar], order: int) -> "Series1":
        vals = list(values[: order + 1])
        vals += [0] * (order + 1 - len(vals))
        return cls(tuple(vals))

    @classmethod
    def zero(cls, order: int) -> "Series1":
        return cls.of([], order)

    @classmethod
    def one(cls, order: int) -> "Series1":
        return cls.of([1], order)

    @classmethod
    def x(cls, order: int) -> "Series1":
        return cls.of([0, 1], order)

    @classmethod
    def from_function(cls, f: Callable[[int], Scalar], order: int) -> "Series1":
        return cls(tuple(f(k) for k in range(order + 1)))

    @classmethod
    def exp(cls, order: int, scale: Scalar = 1) -> "Series1":
        """e^(scale * x)."""
        s = _frac(scale)
        return cls.from_function(lambda k: s**k / math.factorial(k), order)

    @classmethod
    def geometric(cls, order: int, ratio: Scalar = 1) -> "Series1":
        """1 / (1 - ratio * x)."""
        r = _frac(ratio)
        return cls.from_function(lambda k: r**k, order)

    # access
    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k]

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, order: int) -> "Series1":
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return Series1(self.coeffs[: order + 1])

    def valuation(self) -> int | None:
        for k, v in enumerate(self.coeffs):
            if v:
                return k
        return None

    # arithmetic
    def _coerce(self, other) -> "Series1":
        if isinstance(other, Series1):
            return other
        if isinstance(other, (int, Fraction)):
            return Series1.of([other], self.order)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = min(self.order, other.order)
        return Series1(tuple(self.coeffs[k] + other.coeffs[k] for k in range(n + 1)))

    __radd__ = __add__

    def __neg__(self):
        return Series1(tuple(-v for v in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            f = _frac(other)
            return Series1(tuple(v * f for v in self.coeffs))
        if not isinstance(other, Series1):
            return NotImplemented
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = []
        for k in range(n + 1):
            out.append(sum((a[i] * b[k - i] for i in range(k + 1) if a[i] and b[k - i]), Fraction(0)))
        return Series1(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.reciprocal() ** (-e)
        result = Series1.one(self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def reciprocal(self) -> "Series1":
        a = self.coeffs
        if a[0] == 0:
            raise ZeroConstantTermError("reciprocal needs a nonzero constant term")
        inv0 = 1 / a[0]
        out = [inv0]
        for k in range(1, self.order + 1):
            s = sum((a[i] * out[k - i] for i in range(1, k + 1) if a[i]), Fraction(0))
            out.append(-s * inv0)
        return Series1(tuple(out))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / _frac(other))
        return self * other.reciprocal()

    def compose(self, inner):
        """self(inner) for a Series1 or Series2 ``inner`` with zero constant term."""
        const = inner.coeffs[0] if isinstance(inner, Series1) else inner.coeffs[0][0]
        if const != 0:
            raise CompositionOrderError("inner series must have zero constant term")
        if isinstance(inner, Series1):
            inner = inner.truncate(min(inner.order, self.order))
        result = inner * 0 + self.coeffs[-1]
        for v in reversed(self.coeffs[:-1]):
            result = result * inner + v
        return result

    def integers(self, scale_factorial: bool = False) -> list[int]:
        """Coefficients as ints (times k! if ``scale_factorial``); non-integers raise."""
        out = []
        for k, v in enumerate(self.coeffs):
            w = v * math.factorial(k) if scale_factorial else v
            if w.denominator != 1:
                raise ValueError(f"coefficient {k} is not integral: {w}")
            out.append(int(w))
        return out

    def __repr__(self) -> str:
        terms = ", ".join(str(v) for v in self.coeffs)
        return f"Series1([{terms}])"


@dataclass(frozen=True)
class Series2:
    coeffs: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if not self.coeffs or not self.coeffs[0]:
            raise ValueError("a series needs at least its constant term")
        width = len(self.coeffs[0])
        if any(len(row) != width for row in self.coeffs):
            raise ValueError("coefficient table must be rectangular")
        object.__setattr__(
            self, "coeffs", tuple(tuple(_frac(v) for v in row) for row in self.coeffs)
        )

    @classmethod
    def from_function(cls, f: Callable[[int, int], Scalar], nx: int, ny: int) -> "Series2":
        return cls(tuple(tuple(f(i, j) for j in range(ny + 1)) for i in range(nx + 1)))

    @classmethod
    def constant(cls, value: Scalar, nx: int, ny: int) -> "Series2":
        return cls.from_function(lambda i, j: value if i == j == 0 else 0, nx, ny)

    @classmethod
    def x(cls, nx: int, ny: int) -> "Series2":
        return cls.from_function(lambda i, j: 1 if (i, j) == (1, 0) else 0, nx, ny)

    @classmethod
    def y(cls, nx: int, ny: int) -> "Series2":
        return cls.from_function(lambda i, j: 1 if (i, j) == (0, 1) else 0, nx, ny)

    @classmethod
    def in_x(cls, s: Series1, ny: int) -> "Series2":
        return cls.from_function(lambda i, j: s[i] if j == 0 else 0, s.order, ny)

    @classmethod
    def in_y(cls, s: Series1, nx: int) -> "Series2":
        return cls.from_function(lambda i, j: s[j] if i == 0 else 0, nx, s.order)

    @property
    def orders(self) -> tuple[int, int]:
        return len(self.coeffs) - 1, len(self.coeffs[0]) - 1

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.coeffs[i][j]

    def truncate(self, nx: int, ny: int) -> "Series2":
        ox, oy = self.orders
        if nx > ox or ny > oy:
            raise ValueError("cannot extend a series beyond its order")
        return Series2(tuple(row[: ny + 1] for row in self.coeffs[: nx + 1]))

    def _coerce(self, other) -> "Series2":
        if isinstance(other, Series2):
            return other
        if isinstance(other, (int, Fraction)):
            return Series2.constant(other, *self.orders)
        return NotImplemented

    def _common(self, other: "Series2") -> tuple[int, int]:
        (ax, ay), (bx, by) = self.orders, other.orders
        return min(ax, bx), min(ay, by)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        nx, ny = self._common(other)
        return Series2.from_function(lambda i, j: self.coeffs[i][j] + other.coeffs[i][j], nx, ny)

    __radd__ = __add__

    def __neg__(self):
        return Series2(tuple(tuple(-v for v in row) for row in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            f = _frac(other)
            return Series2(tuple(tuple(v * f for v in row) for row in self.coeffs))
        if not isinstance(other, Series2):
            return NotImplemented
        nx, ny = self._common(other)
        a, b = self.coeffs, other.coeffs
        nza = [(i, j, a[i][j]) for i in range(nx + 1) for j in range(ny + 1) if a[i][j]]
        out = [[Fraction(0)] * (ny + 1) for _ in range(nx + 1)]
        for i, j, v in nza:
            for k in range(nx + 1 - i):
                brow = b[k]
                orow = out[i + k]
                for m in range(ny + 1 - j):
                    w = brow[m]
                    if w:
                        orow[j + m] += v * w
        return Series2(tuple(tuple(row) for row in out))

    __rmul__ = __mul__

    def reciprocal(self) -> "Series2":
        a = self.coeffs
        if a[0][0] == 0:
            raise ZeroConstantTermError("reciprocal needs a nonzero constant term")
        nx, ny = self.orders
        inv0 = 1 / a[0][0]
        nza = [(i, j, a[i][j]) for i in range(nx + 1) for j in range(ny + 1) if a[i][j] and (i or j)]
        out = [[Fraction(0)] * (ny + 1) for _ in range(nx + 1)]
        for i in range(nx + 1):
            for j in range(ny + 1):
                if i == j == 0:
                    out[0][0] = inv0
                    continue
                s = Fraction(0)
                for k, m, v in nza:
                    if k <= i and m <= j:
                        w = out[i - k][j - m]
                        if w:
                            s += v * w
                out[i][j] = -s * inv0
        return Series2(tuple(tuple(row) for row in out))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / _frac(other))
        return self * other.reciprocal()

    def diagonal(self, order: int | None = None) -> Series1:
        """Substitute y = x: coefficient n collects every x^i y^j with i + j = n."""
        nx, ny = self.orders
        top = min(nx, ny) if order is None else order
        if top > min(nx, ny):
            raise ValueError("diagonal order exceeds the available table")
        return Series1(
            tuple(sum((self.coeffs[i][n - i] for i in range(n + 1)), Fraction(0)) for n in range(top + 1))
        )

    def substitute(self, cx: Series1, ty: Series1) -> Series1:
        """self(cx(x), ty(x)) for inner series with zero constant terms."""
        if cx.coeffs[0] != 0 or ty.coeffs[0] != 0:
            raise CompositionOrderError("inner series must have zero constant term")
        n = min(cx.order, ty.order)
        cx, ty = cx.truncate(n), ty.truncate(n)
        nx, ny = self.orders
        result = Series1.zero(n)
        for i in reversed(range(nx + 1)):
            inner = Series1.zero(n)
            for j in reversed(range(ny + 1)):
                inner = inner * ty + self.coeffs[i][j]
            result = result * cx + inner
        return result

    def __repr__(self) -> str:
        return f"Series2(orders={self.orders})"
