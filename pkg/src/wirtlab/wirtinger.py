"""Higher-order Wirtinger functionals and their equality cases.

For a zero-mean 2pi-periodic ``f`` and order ``m`` the functional

    sum_k c_{m,k} int (f^(k))^2

is nonnegative; it equals ``pi * sum_{n>m} (n^2-1)(n^2-4)...(n^2-m^2) w_n``
where ``w_n = alpha_n^2 + beta_n^2``.  :func:`form_a`, :func:`form_b` and
:func:`form_c` evaluate three algebraically equivalent arrangements from
spectral derivatives and Parseval integrals; :func:`certificate` evaluates the
harmonic sum directly and serves as the cross-check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import report
from .errors import NonzeroMeanError, OrderError
from .exactcoeff import coefficient_table
from .spectral import TrigSeries, derivative, integral, l2_integral

__all__ = [
    "MAX_FLOAT_ORDER",
    "RTOL",
    "WirtingerAudit",
    "form_a",
    "form_b",
    "form_c",
    "certificate",
    "sandwich",
    "mean_form",
    "equality_case",
    "functional_scale",
    "audit",
]

# beyond this the cancellation among c_{m,k} eats double precision
MAX_FLOAT_ORDER = 8
RTOL = 1e-9
MEAN_TOL = 1e-12


def _order(m) -> int:
    if isinstance(m, bool) or int(m) != m or not 1 <= m <= MAX_FLOAT_ORDER:
        raise OrderError(f"order m must be an integer in 1..{MAX_FLOAT_ORDER}, got {m!r}")
    return int(m)


def _zero_mean(f: TrigSeries) -> None:
    scale = 1.0 + max(np.max(np.abs(f.cos), initial=0.0), np.max(np.abs(f.sin), initial=0.0))
    if abs(f.mean) > MEAN_TOL * scale:
        raise NonzeroMeanError(
            f"series has mean {f.mean!r}; project it first or use mean_form"
        )


def _sq(f: TrigSeries, k: int) -> float:
    return l2_integral(derivative(f, k))


def _sq_sum(f: TrigSeries, j: int, k: int) -> float:
    """``int (f^(j) + f^(k))^2``."""
    return l2_integral(derivative(f, j) + derivative(f, k))


def functional_scale(f: TrigSeries, m: int) -> float:
    """``1 + sum_{k=0}^{m+1} int (f^(k))^2``: magnitude used for absolute tolerances."""
    return 1.0 + math.fsum(_sq(f, k) for k in range(m + 2))


def form_a(f: TrigSeries, m: int) -> float:
    """``sum_{k=0}^m c_{m,k} int (f^(k))^2`` (central factorial form)."""
    m = _order(m)
    _zero_mean(f)
    c = coefficient_table(m).c
    return math.fsum(float(c[k]) * _sq(f, k) for k in range(m + 1))


def form_b(f: TrigSeries, m: int) -> float:
    """``sum_{k=0}^{m-1} lambda_{m,k} int [(f^(k+1))^2 - (f^(k))^2]``."""
    m = _order(m)
    _zero_mean(f)
    lam = coefficient_table(m).lam
    return math.fsum(float(lam[k]) * (_sq(f, k + 1) - _sq(f, k)) for k in range(m))


def form_c(f: TrigSeries, m: int) -> float:
    """``S_{m,0} int (f'^2 - f^2) + sum_{k=1}^{m-1} S_{m,k} int (f^(k+1) + f^(k-1))^2``.

    For m = 1 only the first term survives (``S_{1,0} = 1``): the classical
    Wirtinger functional.
    """
    m = _order(m)
    _zero_mean(f)
    S = coefficient_table(m).S
    terms = [float(S[0]) * (_sq(f, 1) - _sq(f, 0))]
    terms += [float(S[k]) * _sq_sum(f, k + 1, k - 1) for k in range(1, m)]
    return math.fsum(terms)


def _harmonic_weight(n: int, m: int) -> int:
    return math.prod(n * n - j * j for j in range(1, m + 1))


def certificate(f: TrigSeries, m: int) -> float:
    """``pi * sum_{n>=m+1} prod_{j<=m}(n^2 - j^2) * (alpha_n^2 + beta_n^2)``."""
    m = _order(m)
    _zero_mean(f)
    w = f.weights()
    return math.pi * math.fsum(
        float(_harmonic_weight(n, m)) * float(w[n - 1]) for n in range(m + 1, f.degree + 1)
    )


def sandwich(f: TrigSeries, m: int, form: str = "a") -> tuple[float, float]:
    """(lower, upper) of the two-sided bound ``0 <= lower <= upper``.

    ``lower`` is the order-m functional in the chosen arrangement and ``upper``
    is ``1/(m+1)^2`` times the same arrangement shifted by one derivative.
    The gap ``upper - lower`` equals the order-(m+1) functional over
    ``(m+1)^2``, so it closes exactly when ``f`` has no harmonics above m+1.
    """
    m = _order(m)
    _zero_mean(f)
    tab = coefficient_table(m)
    w = 1.0 / (m + 1) ** 2
    if form == "a":
        lower = form_a(f, m)
        upper = w * math.fsum(float(tab.c[k]) * _sq(f, k + 1) for k in range(m + 1))
    elif form == "b":
        lower = form_b(f, m)
        upper = w * math.fsum(float(tab.lam[k]) * (_sq(f, k + 2) - _sq(f, k + 1)) for k in range(m))
    elif form == "c":
        lower = form_c(f, m)
        S = tab.S
        terms = [float(S[0]) * (_sq(f, 1) - _sq(f, 0))]
        terms += [float(S[k]) * _sq_sum(f, k + 2, k) for k in range(m)]
        upper = w * math.fsum(terms)
    else:
        raise ValueError(f"form must be 'a', 'b' or 'c', got {form!r}")
    return lower, upper


def mean_form(h: TrigSeries, m: int) -> float:
    """The order-m functional for a series with arbitrary mean.

    ``(-1)^m/2 (m-1)!(m+1)! int(h^2 - h'^2) + (-1)^(m-1)(m!)^2/(2pi) (int h)^2
    + sum_{k=1}^{m-1} S_{m,k} int (h^(k+1) + h^(k-1))^2``
    """
    m = _order(m)
    return math.fsum(_mean_form_terms(h, m))


def _mean_form_terms(h: TrigSeries, m: int) -> list[float]:
    S = coefficient_table(m).S
    k0 = (-1) ** m * math.factorial(m - 1) * math.factorial(m + 1) / 2
    k1 = (-1) ** (m - 1) * math.factorial(m) ** 2 / (2.0 * math.pi)
    terms = [k0 * (_sq(h, 0) - _sq(h, 1)), k1 * integral(h) ** 2]
    terms += [float(S[k]) * _sq_sum(h, k + 1, k - 1) for k in range(1, m)]
    return terms


def mean_form_scale(h: TrigSeries, m: int) -> float:
    """Tolerance scale for :func:`mean_form`: 1 + the sum of absolute term sizes.

    The first two terms cancel to leading order in the mean, so the result can
    only be trusted relative to their size.
    """
    m = _order(m)
    return 1.0 + math.fsum(abs(v) for v in _mean_form_terms(h, m))


def equality_case(f: TrigSeries, m: int, tol: float = 1e-12) -> bool:
    """True when every harmonic above m is negligible.

    Negligible means ``alpha_n^2 + beta_n^2 <= tol^2 (1 + energy)`` where the
    energy is ``mean^2 + sum_n (alpha_n^2 + beta_n^2)``.
    """
    w = f.weights()
    tail = w[m:]
    if len(tail) == 0:
        return True
    energy = f.mean**2 + float(np.sum(w))
    return bool(np.max(tail) <= tol**2 * (1.0 + energy))


@dataclass
class WirtingerAudit:
    m: int
    form_a: float | None
    form_b: float | None
    form_c: float | None
    certificate: float
    sandwich_lower: dict = field(default_factory=dict)
    sandwich_upper: dict = field(default_factory=dict)
    equality_flag: bool = False
    scale: float = 1.0
    rtol: float = RTOL
    atol: float = RTOL
    reports: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return report.all_ok(self.reports)

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "form_a": self.form_a,
            "form_b": self.form_b,
            "form_c": self.form_c,
            "certificate": self.certificate,
            "sandwich_lower": self.sandwich_lower,
            "sandwich_upper": self.sandwich_upper,
            "equality_flag": self.equality_flag,
            "tolerances": {"rtol": self.rtol, "atol": self.atol, "scale": self.scale},
            "reports": [r.to_dict() for r in self.reports],
        }


_ANCHOR = {
    "a": "higher-order Wirtinger inequality, central factorial form",
    "b": "higher-order Wirtinger inequality, first-difference form",
    "c": "higher-order Wirtinger inequality, shifted-sum form",
}


def audit(f: TrigSeries, m: int, forms: str = "all", with_sandwich: bool = False, rtol: float = RTOL) -> WirtingerAudit:
    """Evaluate the requested forms, the certificate and optionally the sandwiches.

    Produces one report per nonnegativity claim, one per pairwise agreement
    with the certificate and one per sandwich.
    """
    m = _order(m)
    _zero_mean(f)
    chosen = "abc" if forms == "all" else forms
    scale = functional_scale(f, m)
    cert = certificate(f, m)
    values = {}
    fns = {"a": form_a, "b": form_b, "c": form_c}
    reports = []
    for key in chosen:
        values[key] = fns[key](f, m)
        reports.append(report.check(f"nonnegativity ({key})", 0.0, values[key], scale, _ANCHOR[key], rtol))
        reports.append(
            report.check(
                f"agreement ({key}) vs certificate",
                abs(values[key] - cert),
                0.0,
                scale,
                "Parseval expansion of the functional",
                rtol,
            )
        )
    lowers, uppers = {}, {}
    if with_sandwich:
        for key in chosen:
            lo, up = sandwich(f, m, key)
            lowers[key], uppers[key] = lo, up
            reports.append(
                report.check(f"sandwich ({key})", lo, up, scale, "two-sided refinement by the next order", rtol)
            )
    return WirtingerAudit(
        m=m,
        form_a=values.get("a"),
        form_b=values.get("b"),
        form_c=values.get("c"),
        certificate=cert,
        sandwich_lower=lowers,
        sandwich_upper=uppers,
        equality_flag=equality_case(f, m),
        scale=scale,
        rtol=rtol,
        atol=rtol * scale,
        reports=reports,
    )
