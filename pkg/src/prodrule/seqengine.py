"""Evaluation engines for sequences obeying T(mn) = T(m)T(n) + T(m-1)T(n-1).

Once T(0) = 0 and T(1) = 1 are fixed, every later term is determined by
c = T(2) and d = T(3) through two halving identities:

    T(2k)     = c T(k) + T(k-1)          for k >= 2
    T(2k - 1) = T(k) + (d - c) T(k-1)    for k >= 3

`BivariateTable` runs these identities with d kept as a free
indeterminate, so its entries are honest polynomials and no division
ever happens.  `derive_d` equates two product-rule routes to T(18) over
that table; the difference is linear in d and solving it pins d to
(3c^3 + c)/(c^2 + 2c - 1).  `SymbolicTable` bakes that value in, making
every entry a rational function of c alone.

`residual_numerator` turns one (m, n) instance of the product rule into
a polynomial constraint on c: the instance holds exactly at the roots.
The five closed-form solution families live in `FamilyId` and
`family_value`.
"""

from __future__ import annotations

import enum
from fractions import Fraction

from .exactalg import Poly, Poly2, RatFunc, poly_gcd

__all__ = [
    "DEFAULT_MAX_INDEX",
    "BivariateTable",
    "FamilyId",
    "SymbolicTable",
    "d_of_c",
    "derive_d",
    "family_value",
    "residual",
    "residual_numerator",
]

DEFAULT_MAX_INDEX = 1024

C_POLY = Poly((0, 1))
D_NUMER = Poly((0, 1, 0, 3))   # 3c^3 + c
D_DENOM = Poly((-1, 2, 1))     # c^2 + 2c - 1

_ONE_POLY = Poly((1,))


def d_of_c() -> RatFunc:
    """T(3) as a function of c, forced on every solution with T(0)=0, T(1)=1."""
    return RatFunc(D_NUMER, D_DENOM)


class FamilyId(enum.Enum):
    """The five families of solutions, in classification order."""

    ZERO = "zero"                # T(n) = 0
    HALF = "half"                # T(n) = 1/2
    CEIL_HALF = "ceilhalf"       # T(n) = ceil(n / 2)
    PERIOD3 = "period3"          # T(n) = 1 if n = 1 (mod 3) else 0
    TRIANGULAR = "triangular"    # T(n) = n(n + 1)/2


def family_value(family: FamilyId, n: int) -> Fraction:
    """Closed-form value of one of the five solution families at index n."""
    if n < 0:
        raise ValueError("sequence indices start at 0")
    if family is FamilyId.ZERO:
        return Fraction(0)
    if family is FamilyId.HALF:
        return Fraction(1, 2)
    if family is FamilyId.CEIL_HALF:
        # T(0) = 0 and T(2k) = T(2k - 1) = k, which is ceil(n / 2)
        return Fraction((n + 1) // 2)
    if family is FamilyId.PERIOD3:
        return Fraction(1 if n % 3 == 1 else 0)
    if family is FamilyId.TRIANGULAR:
        return Fraction(n * (n + 1), 2)
    raise TypeError(f"unknown family {family!r}")


class SymbolicTable:
    """Memoized values of T(n) as rational functions of c = T(2).

    Entries 0..3 are 0, 1, c and d(c); larger indices fill on demand via
    the halving identities.  Indices above `max_index` are refused so a
    typo cannot silently grind through enormous polynomials.  Filling
    mutates the internal cache, so give each thread its own table or
    share one only after the indices it needs have been computed.
    """

    def __init__(self, max_index: int = DEFAULT_MAX_INDEX):
        if max_index < 3:
            raise ValueError("max_index must be at least 3")
        self.max_index = max_index
        c = RatFunc(C_POLY)
        d = d_of_c()
        self._c = c
        self._d_minus_c = d - c
        self._cache: dict[int, RatFunc] = {
            0: RatFunc(0),
            1: RatFunc(1),
            2: c,
            3: d,
        }

    def value(self, n: int) -> RatFunc:
        """T(n), computing and caching whatever the recursion touches."""
        if n < 0:
            raise ValueError("sequence indices start at 0")
        if n > self.max_index:
            raise ValueError(
                f"index {n} exceeds the supported range {self.max_index}; "
                "construct the table with a larger max_index"
            )
        cached = self._cache.get(n)
        if cached is not None:
            return cached
        if n % 2 == 0:
            k = n // 2
            val = self._c * self.value(k) + self.value(k - 1)
        else:
            k = (n + 1) // 2
            val = self.value(k) + self._d_minus_c * self.value(k - 1)
        self._cache[n] = val
        return val


class BivariateTable:
    """Memoized values of T(n) as polynomials in c and the free unknown d.

    Same recursions as `SymbolicTable`, but T(3) stays the indeterminate
    d, so entries are `Poly2` values and no denominators appear.
    """

    def __init__(self, max_index: int = DEFAULT_MAX_INDEX):
        if max_index < 3:
            raise ValueError("max_index must be at least 3")
        self.max_index = max_index
        self._c = Poly2((C_POLY,))
        self._d_minus_c = Poly2((-C_POLY, _ONE_POLY))
        self._cache: dict[int, Poly2] = {
            0: Poly2(),
            1: Poly2((_ONE_POLY,)),
            2: Poly2((C_POLY,)),
            3: Poly2((Poly(), _ONE_POLY)),
        }

    def value(self, n: int) -> Poly2:
        """T(n) with d free, computing and caching along the way."""
        if n < 0:
            raise ValueError("sequence indices start at 0")
        if n > self.max_index:
            raise ValueError(
                f"index {n} exceeds the supported range {self.max_index}; "
                "construct the table with a larger max_index"
            )
        cached = self._cache.get(n)
        if cached is not None:
            return cached
        if n % 2 == 0:
            k = n // 2
            val = self._c * self.value(k) + self.value(k - 1)
        else:
            k = (n + 1) // 2
            val = self.value(k) + self._d_minus_c * self.value(k - 1)
        self._cache[n] = val
        return val


def derive_d() -> RatFunc:
    """Recover d = T(3) as a function of c by equating two routes to T(18).

    Both routes keep d free.  The first expands the product-rule
    instance (3, 6); the second halves 18 after expanding the instance
    (3, 3) for T(9).  Their difference must vanish on any solution, and
    it is linear in d because the d^2 terms agree, with d coefficient
    c^2 + 2c - 1.  That coefficient shares no factor with the constant
    side 3c^3 + c, so the division is legitimate and unique.  The
    structural checks raise AssertionError on failure, which would mean
    a bug rather than bad input.
    """
    table = BivariateTable()
    t2, t3 = table.value(2), table.value(3)
    t5, t6, t8 = table.value(5), table.value(6), table.value(8)
    t9 = t3 * t3 + t2 * t2             # product-rule route, quadratic in d
    e1 = t3 * t6 + t2 * t5             # T(18) via the (3, 6) instance
    e2 = Poly2((C_POLY,)) * t9 + t8    # T(18) via halving
    diff = e1 - e2
    if diff.degree != 1:
        raise AssertionError("difference of the T(18) routes is not linear in d")
    lin, const = diff.coeff(1), diff.coeff(0)
    if lin != D_DENOM and lin != -D_DENOM:
        raise AssertionError("d coefficient is not c^2 + 2c - 1 up to sign")
    if poly_gcd(const, lin).degree != 0:
        raise AssertionError("the linear relation for d unexpectedly degenerates")
    return RatFunc(-const, lin)


def residual(m: int, n: int, table: SymbolicTable | None = None) -> RatFunc:
    """T(mn) - T(m)T(n) - T(m-1)T(n-1) as a rational function of c."""
    if m < 2 or n < 2:
        raise ValueError("product-rule probes need m >= 2 and n >= 2")
    if table is None:
        table = SymbolicTable()
    t = table.value
    return t(m * n) - t(m) * t(n) - t(m - 1) * t(n - 1)


def residual_numerator(m: int, n: int, table: SymbolicTable | None = None) -> Poly:
    """Canonical numerator of the (m, n) product-rule residual.

    The sequence generated from a given value of c satisfies the (m, n)
    instance exactly when that value is a root of this polynomial.
    """
    return residual(m, n, table).num
