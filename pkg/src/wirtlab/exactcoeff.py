"""Exact integer coefficient families of the higher-order Wirtinger inequalities.

For an order ``m >= 1`` three integer polynomials are involved::

    Q_m(t) = (t - 1)(t - 4)...(t - m^2)       = sum c[k] t^k
    P_m(t) = (t - 4)(t - 9)...(t - m^2)       = sum lam[k] t^k    (P_1 = 1)
    S_m(t) = (P_m(t) - P_m(1)) / (t - 1)      = sum S[k] t^(k-1), k >= 1

with ``S[0] = P_m(1)``.  The ``c`` are the central factorial numbers of even
indices.  Everything here is done in Python integers; the coefficients grow
like ``(m!)^2`` and leave the int64 range around ``m = 8``.

Coefficient lists are ascending by degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial

from .errors import ArithmeticFault, OrderError

__all__ = [
    "IntPolynomial",
    "CoefficientTable",
    "expand_Q",
    "expand_P",
    "expand_S",
    "coefficient_table",
    "check_recurrences",
    "closed_form_S0",
]


@dataclass(frozen=True)
class IntPolynomial:
    """Polynomial with arbitrary-precision integer coefficients."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        cs = [int(c) for c in self.coeffs]
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs) if cs else (0,))

    @classmethod
    def from_roots(cls, roots) -> "IntPolynomial":
        p = cls((1,))
        for r in roots:
            p = p * cls((-int(r), 1))
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return self.coeffs == (0,)

    def __call__(self, t: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(tuple(out))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntPolynomial(tuple(x - y for x, y in zip(a, b)))

    def __eq__(self, other):
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def divide_linear(self, root: int) -> tuple["IntPolynomial", int]:
        """Synthetic division by ``(t - root)``; returns (quotient, remainder)."""
        if self.degree == 0:
            return IntPolynomial((0,)), self.coeffs[0]
        quot = []
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * root + c
            quot.append(acc)
        remainder = quot.pop()
        return IntPolynomial(tuple(reversed(quot))), remainder


def _check_order(m) -> int:
    if isinstance(m, bool) or int(m) != m or m < 1:
        raise OrderError(f"order m must be a positive integer, got {m!r}")
    return int(m)


@lru_cache(maxsize=None)
def _Q(m: int) -> IntPolynomial:
    return IntPolynomial.from_roots(j * j for j in range(1, m + 1))


@lru_cache(maxsize=None)
def _P(m: int) -> IntPolynomial:
    return IntPolynomial.from_roots(j * j for j in range(2, m + 1))


def expand_Q(m: int) -> list[int]:
    """Coefficients ``c_{m,0..m}`` of ``prod_{j=1}^m (t - j^2)``."""
    return list(_Q(_check_order(m)).coeffs)


def expand_P(m: int) -> list[int]:
    """Coefficients ``lambda_{m,0..m-1}`` of ``prod_{j=2}^m (t - j^2)``."""
    return list(_P(_check_order(m)).coeffs)


def expand_S(m: int) -> list[int]:
    """Coefficients ``S_{m,0..m-1}``; ``S_{m,0} = P_m(1)``.

    The tail is read off the exact quotient ``(P_m(t) - P_m(1)) / (t - 1)``.
    """
    m = _check_order(m)
    p = _P(m)
    s0 = p(1)
    quotient, remainder = (p - IntPolynomial((s0,))).divide_linear(1)
    if remainder != 0:
        raise ArithmeticFault(f"nonzero remainder {remainder} dividing P_{m}(t) - P_{m}(1) by t - 1")
    tail = list(quotient.coeffs) if m >= 2 else []
    return [s0] + tail


def closed_form_S0(m: int) -> int:
    """``(-1)^(m-1) (m-1)! (m+1)! / 2``, which equals ``P_m(1)``."""
    m = _check_order(m)
    return (-1) ** (m - 1) * factorial(m - 1) * factorial(m + 1) // 2


@dataclass(frozen=True)
class CoefficientTable:
    """The triple ``(c, lambda, S)`` for one order ``m``."""

    m: int
    c: tuple[int, ...]
    lam: tuple[int, ...]
    S: tuple[int, ...]

    @classmethod
    def for_order(cls, m: int) -> "CoefficientTable":
        return coefficient_table(m)

    def c_at(self, k: int) -> int:
        return self.c[k] if 0 <= k < len(self.c) else 0

    def lam_at(self, k: int) -> int:
        return self.lam[k] if 0 <= k < len(self.lam) else 0

    def S_at(self, k: int) -> int:
        # S_{m,m} = 0 by convention
        return self.S[k] if 0 <= k < len(self.S) else 0

    def to_dict(self) -> dict:
        """JSON-ready form. Integers stay exact: ``json`` writes big ints digit for digit."""
        return {"m": self.m, "c": list(self.c), "lambda": list(self.lam), "S": list(self.S)}

    def identity_failures(self) -> list[str]:
        """Names of the structural identities this table violates (empty if none)."""
        m = self.m
        bad = []
        if self.c[-1] != 1 or self.lam[-1] != 1:
            bad.append("monic")
        if any(self.lam[k] != self.S_at(k) - self.S_at(k + 1) for k in range(m)):
            bad.append("telescoping")
        q = IntPolynomial(self.c)
        if q != IntPolynomial((-1, 1)) * IntPolynomial(self.lam):
            bad.append("Q = (t-1)P")
        if self.S[0] != closed_form_S0(m):
            bad.append("S0 closed form")
        if self.S_at(0) - self.S_at(1) != (-1) ** (m - 1) * factorial(m) ** 2:
            bad.append("S0 - S1")
        if any(q(j * j) != 0 for j in range(1, m + 1)):
            bad.append("roots of Q")
        p = IntPolynomial(self.lam)
        if any(p(j * j) != 0 for j in range(2, m + 1)):
            bad.append("roots of P")
        return bad


@lru_cache(maxsize=None)
def coefficient_table(m: int) -> CoefficientTable:
    m = _check_order(m)
    return CoefficientTable(m, tuple(expand_Q(m)), tuple(expand_P(m)), tuple(expand_S(m)))


def check_recurrences(table_m: CoefficientTable, table_m1: CoefficientTable) -> bool:
    """True iff the order-(m+1) table follows from the order-m one.

    Checks ``x_{m+1,k} = x_{m,k-1} - (m+1)^2 x_{m,k}`` for ``c`` and ``lambda``
    (all k) and for ``S`` (k >= 1), with out-of-range entries read as 0.
    """
    m = table_m.m
    if table_m1.m != m + 1:
        raise OrderError(f"expected tables of orders m and m+1, got {m} and {table_m1.m}")
    sq = (m + 1) ** 2
    ok_c = all(table_m1.c_at(k) == table_m.c_at(k - 1) - sq * table_m.c_at(k) for k in range(m + 2))
    ok_lam = all(
        table_m1.lam_at(k) == table_m.lam_at(k - 1) - sq * table_m.lam_at(k) for k in range(m + 1)
    )
    ok_S = all(table_m1.S_at(k) == table_m.S_at(k - 1) - sq * table_m.S_at(k) for k in range(1, m + 1))
    return ok_c and ok_lam and ok_S
