"""Strictly convex bodies described by their support function.

Everything is expressed in the normal angle ``theta`` using
``ds = rho dtheta`` and ``d/ds = (1/rho) d/dtheta`` with ``rho = h + h''``.
Arclength integrands of the curvature then become

    (1/kappa^5) kappa_s^2 ds  ->  rho'^2        dtheta
    (1/kappa^3) kappa_s^2 ds  ->  (rho'/rho)^2  dtheta
    (1/kappa^2) kappa_s^2 ds  ->  rho'^2/rho^3  dtheta
    kappa^2 ds                ->  1/rho         dtheta
    (1/rho)[(rho d/ds)^l rho]^2 ds -> (rho^(l))^2 dtheta

The first and last are trigonometric polynomials and are integrated exactly;
the others use the adaptive trapezoid rule.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import report
from .curvegeom import PlaneCurve
from .errors import ConvexityError, OrderError, WirtlabError
from .exactcoeff import coefficient_table
from .spectral import TrigSeries, adaptive_trapezoid, grid, integral, l2_integral
from .wirtinger import MAX_FLOAT_ORDER

__all__ = [
    "SupportFunction",
    "ConvexAudit",
    "LinTsaiAudit",
    "ReverseAudit",
    "support_geometry",
    "thm32_audit",
    "lin_tsai_audit",
    "reverse_isoperimetric_audit",
    "reconstruct_curve",
    "random_convex",
    "support_points",
]

PI = math.pi
CONVEXITY_TOL = 1e-9


class SupportFunction:
    """Support function ``h(theta)`` of a strictly convex body.

    Construction checks ``min rho > 1e-9 max rho`` on a grid of at least
    ``16 * degree`` angles.
    """

    def __init__(self, h: TrigSeries, check: bool = True):
        self.h = h
        self.rho = h + h.derivative(2)
        if check:
            n = max(64, 16 * h.degree)
            vals = self.rho(grid(n))
            lo, hi = float(np.min(vals)), float(np.max(vals))
            if hi <= 0 or lo <= CONVEXITY_TOL * hi:
                raise ConvexityError(
                    f"not strictly convex: min radius of curvature {lo:.6g} on a {n}-point grid"
                )
            self.rho_min = lo

    @classmethod
    def from_dict(cls, data) -> "SupportFunction":
        return cls(TrigSeries.from_dict(data, "support"))

    @property
    def degree(self) -> int:
        return self.h.degree


def support_geometry(sf: SupportFunction) -> tuple[float, float, TrigSeries]:
    """``(L, A, rho)`` with ``L = int h`` and ``2A = int (h^2 - h'^2)``."""
    h = sf.h
    L = integral(h)
    A = 0.5 * (l2_integral(h) - l2_integral(h.derivative(1)))
    return L, A, sf.rho


def _order(m) -> int:
    if isinstance(m, bool) or int(m) != m or not 1 <= m <= MAX_FLOAT_ORDER:
        raise OrderError(f"order m must be an integer in 1..{MAX_FLOAT_ORDER}, got {m!r}")
    return int(m)


@dataclass
class ConvexAudit:
    m: int
    L: float
    A: float
    D: float
    inv_curv: float
    deriv_terms: list
    bound: float
    slack: float
    report: report.InequalityReport

    @property
    def ok(self) -> bool:
        return self.report.ok

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "L": self.L,
            "A": self.A,
            "D": self.D,
            "inv_curv": self.inv_curv,
            "deriv_terms": list(self.deriv_terms),
            "bound": self.bound,
            "slack": self.slack,
            "direction": "D >= bound" if self.m % 2 else "D <= bound",
            "verdict": self.report.verdict,
            "report": self.report.to_dict(),
        }


def thm32_audit(sf: SupportFunction, m: int, rtol: float = 1e-9) -> ConvexAudit:
    """Order-m bound on the isoperimetric deficit of a convex body.

        bound = (m-1)pi/m * (int rho^2 dtheta - 2A) -+ 2pi/(m!)^2 sum_{l=1}^{m-2} S_{m,l+1} int (rho^(l))^2

    with ``-`` and ``D >= bound`` for odd m, ``+`` and ``D <= bound`` for even m.
    The slack is reported so that it is nonnegative when the bound holds.
    """
    m = _order(m)
    L, A, rho = support_geometry(sf)
    D = L * L - 4 * PI * A
    inv_curv = l2_integral(rho)
    S = coefficient_table(m).S
    terms = [l2_integral(rho.derivative(l)) for l in range(1, m - 1)]
    tail = 2 * PI / math.factorial(m) ** 2 * math.fsum(float(S[l + 1]) * terms[l - 1] for l in range(1, m - 1))
    head = (m - 1) * PI / m * (inv_curv - 2 * A)
    scale = D + (m - 1) * PI / m * (inv_curv + 2 * A) + 2 * PI / math.factorial(m) ** 2 * math.fsum(
        abs(float(S[l + 1])) * terms[l - 1] for l in range(1, m - 1)
    )
    if m % 2:
        bound = head - tail
        rep = report.check(f"deficit lower bound (m={m})", bound, D, scale,
                           "odd-order lower bound on the isoperimetric deficit", rtol)
    else:
        bound = head + tail
        rep = report.check(f"deficit upper bound (m={m})", D, bound, scale,
                           "even-order upper bound on the isoperimetric deficit", rtol)
    return ConvexAudit(m, L, A, D, inv_curv, terms, bound, rep.slack, rep)


@dataclass
class LinTsaiAudit:
    L: float
    A: float
    D: float
    inv_curv: float
    rho_prime_sq: float  # int rho'^2 dtheta = int kappa^-5 kappa_s^2 ds
    lower_gap: float  # (int 1/kappa ds - L^2/2pi) - (3/2pi) D
    upper: float  # (1/12)[int rho'^2 dtheta - (6/pi) D]
    reports: list

    @property
    def ok(self) -> bool:
        return report.all_ok(self.reports)

    def to_dict(self) -> dict:
        d = {k: getattr(self, k) for k in ("L", "A", "D", "inv_curv", "rho_prime_sq", "lower_gap", "upper")}
        d["reports"] = [r.to_dict() for r in self.reports]
        return d


def lin_tsai_audit(sf: SupportFunction, rtol: float = 1e-9) -> LinTsaiAudit:
    """``0 <= (int 1/kappa ds - L^2/2pi) - 3D/2pi <= (1/12)[int kappa^-5 kappa_s^2 ds - 6D/pi]``."""
    L, A, rho = support_geometry(sf)
    D = L * L - 4 * PI * A
    inv_curv = l2_integral(rho)
    rp2 = l2_integral(rho.derivative(1))
    gap = (inv_curv - L * L / (2 * PI)) - 3 / (2 * PI) * D
    upper = (rp2 - 6 / PI * D) / 12
    scale = inv_curv + L * L / (2 * PI) + 3 / (2 * PI) * D + rp2 / 12
    reports = [
        report.check("Lin-Tsai", 0.0, gap, scale, "Lin-Tsai inequality", rtol),
        report.check("Lin-Tsai stability", gap, upper, scale, "stability of the Lin-Tsai inequality", rtol),
    ]
    return LinTsaiAudit(L, A, D, inv_curv, rp2, gap, upper, reports)


@dataclass
class ReverseAudit:
    L: float
    A: float
    D: float
    rho_prime_sq: float  # int rho'^2
    log_rho_prime_sq: float  # int (rho'/rho)^2
    rho_prime_sq_over_rho3: float  # int rho'^2 / rho^3
    total_curv_sq: float  # int 1/rho = int kappa^2 ds
    inv_curv: float
    n_grid: int
    doubling_delta: float  # relative change of the quadratures on one more doubling
    reports: list

    @property
    def ok(self) -> bool:
        return report.all_ok(self.reports)

    def to_dict(self) -> dict:
        keys = ("L", "A", "D", "rho_prime_sq", "log_rho_prime_sq", "rho_prime_sq_over_rho3",
                "total_curv_sq", "inv_curv", "n_grid", "doubling_delta")
        d = {k: getattr(self, k) for k in keys}
        d["reports"] = [r.to_dict() for r in self.reports]
        return d


def _curvature_quadratures(rho: TrigSeries, n=None):
    drho = rho.derivative(1)
    inv_r = 1.0 / abs(rho.mean)  # rho.mean = L / 2pi

    def fn(t):
        r, dr = rho(t), drho(t)
        return np.stack([(dr / r) ** 2, dr**2 / r**3, 1.0 / r])

    if n is None:
        return adaptive_trapezoid(fn, floor=[1.0, inv_r, inv_r])
    t = grid(n)
    return 2 * PI * np.mean(fn(t), axis=-1)


def reverse_isoperimetric_audit(sf: SupportFunction, rtol: float = 1e-9) -> ReverseAudit:
    """Three reverse isoperimetric inequalities plus the auxiliary bounds they rest on.

    Audited (each as ``lhs <= rhs``):
      D <= (pi/6) int kappa^-5 kappa_s^2 ds
      D <= (L^2/24pi) int kappa^-3 kappa_s^2 ds
      D <= (AL/4pi) int kappa^-2 kappa_s^2 ds
      -2pi + (2pi/L)^2 int 1/kappa ds <= (1/4) int kappa^-3 kappa_s^2 ds   (Bernstein-Mettler)
      -(2pi)^2/L + int kappa^2 ds <= (1/4) int kappa^-2 kappa_s^2 ds       (Bernstein-Mettler)
      pi L / A <= int kappa^2 ds                                            (Gage)
    """
    L, A, rho = support_geometry(sf)
    D = L * L - 4 * PI * A
    inv_curv = l2_integral(rho)
    rp2 = l2_integral(rho.derivative(1))
    q = _curvature_quadratures(rho)
    lrp2, rp2r3, kk = (float(v) for v in q.value)
    again = _curvature_quadratures(rho, 2 * q.n)
    floor = np.array([1.0, 2 * PI / L, 2 * PI / L])
    delta = float(np.max(np.abs(again - q.value) / np.maximum(np.abs(q.value), floor)))
    sD = L * L + 4 * PI * A
    reports = [
        report.check("reverse isoperimetric (kappa^-5)", D, PI / 6 * rp2, sD + PI / 6 * rp2,
                     "reverse isoperimetric inequality, kappa^-5 weight", rtol),
        report.check("reverse isoperimetric (kappa^-3)", D, L * L / (24 * PI) * lrp2,
                     sD + L * L / (24 * PI) * lrp2, "reverse isoperimetric inequality, kappa^-3 weight", rtol),
        report.check("reverse isoperimetric (kappa^-2)", D, A * L / (4 * PI) * rp2r3,
                     sD + A * L / (4 * PI) * rp2r3, "reverse isoperimetric inequality, kappa^-2 weight", rtol),
        report.check("Bernstein-Mettler (kappa^-3)", -2 * PI + (2 * PI / L) ** 2 * inv_curv, lrp2 / 4,
                     2 * PI + (2 * PI / L) ** 2 * inv_curv + lrp2 / 4, "Bernstein-Mettler inequality", rtol),
        report.check("Bernstein-Mettler (kappa^-2)", -(2 * PI) ** 2 / L + kk, rp2r3 / 4,
                     (2 * PI) ** 2 / L + kk + rp2r3 / 4, "Bernstein-Mettler inequality", rtol),
        report.check("Gage", PI * L / A, kk, PI * L / A + kk, "Gage inequality", rtol),
    ]
    return ReverseAudit(L, A, D, rp2, lrp2, rp2r3, kk, inv_curv, q.n, delta, reports)


def reconstruct_curve(sf: SupportFunction) -> PlaneCurve:
    """Boundary ``X(theta) = h (cos, sin) + h' (-sin, cos)`` as exact series."""
    h, dh = sf.h, sf.h.derivative(1)
    cos_t = TrigSeries(0.0, [1.0])
    sin_t = TrigSeries(0.0, [], [1.0])
    return PlaneCurve(h * cos_t - dh * sin_t, h * sin_t + dh * cos_t)


def random_convex(degree: int, seed: int, margin: float = 0.3) -> SupportFunction:
    """Random body ``h = 1 + sum_{n=2}^{degree} (a_n cos n + b_n sin n)``.

    Coefficients are uniform on [-1, 1], then scaled down if needed so that
    ``sum (n^2 - 1) |(a_n, b_n)| <= 1 - margin``; this forces ``rho >= margin``.
    First harmonics are left out since they only translate the body.
    """
    if not 0 < margin < 1:
        raise WirtlabError(f"margin must lie in (0, 1), got {margin}")
    rng = np.random.default_rng(seed)
    if degree < 2:
        return SupportFunction(TrigSeries(1.0))
    n = np.arange(2, degree + 1)
    a = rng.uniform(-1, 1, len(n))
    b = rng.uniform(-1, 1, len(n))
    total = float(np.sum((n**2 - 1) * np.hypot(a, b)))
    s = min(1.0, (1 - margin) / total) if total > 0 else 1.0
    return SupportFunction(TrigSeries(1.0, np.concatenate([[0.0], s * a]), np.concatenate([[0.0], s * b])))


def support_points(sf: SupportFunction, n: int, close: bool = False) -> tuple[list, np.ndarray]:
    """Columns ``theta, x, y, rho, rho_prime_sq`` at n uniform normal angles."""
    if n < 3:
        raise WirtlabError("need at least 3 plot points")
    th = grid(n)
    h, dh = sf.h(th), sf.h.derivative(1)(th)
    x = h * np.cos(th) - dh * np.sin(th)
    y = h * np.sin(th) + dh * np.cos(th)
    rows = np.column_stack([th, x, y, sf.rho(th), sf.rho.derivative(1)(th) ** 2])
    if close:
        rows = np.vstack([rows, rows[:1]])
    return ["theta", "x", "y", "rho", "rho_prime_sq"], rows
