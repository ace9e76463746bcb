"""Closed plane curves given by trigonometric parametrizations.

Conventions: ``T = X'/|X'|``, ``N = -J T`` with J the counter-clockwise
quarter turn, so for a counter-clockwise convex curve N points outward,
the signed curvature is positive and ``X_ss = -kappa N``.  Integrals against
arclength are computed as ``int g(t) |X'(t)| dt`` with the adaptive periodic
trapezoid rule.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import _backend, report
from .errors import NonSimpleCurveError, RegularityError, WirtlabError
from .spectral import TrigSeries, adaptive_trapezoid, grid, inner

__all__ = [
    "PlaneCurve",
    "CurveAudit",
    "IdentityCheck",
    "circle",
    "ellipse",
    "perturbed_circle",
    "length",
    "area",
    "centroid",
    "curvature",
    "frames",
    "simplicity_check",
    "curve_audit",
    "thm31a_audit",
    "thm31b_audit",
    "identity_checks",
    "curve_points",
]

TWO_PI = 2.0 * math.pi
REGULARITY_TOL = 1e-9


class PlaneCurve:
    """Closed curve ``t -> (x(t), y(t))``, t in [0, 2pi).

    The constructor reverses the parameter when the signed area is negative, so
    every curve with nonzero enclosed area is traversed counter-clockwise;
    ``orientation`` records the sign found on input (0 when the signed area
    vanishes, e.g. a figure-eight).
    """

    def __init__(self, x: TrigSeries, y: TrigSeries, check: bool = True):
        twice_area = inner(x, y.derivative(1)) - inner(y, x.derivative(1))
        scale = inner(x.derivative(1), x.derivative(1)) + inner(y.derivative(1), y.derivative(1))
        if twice_area < -1e-14 * scale:
            x, y = x.reflect(), y.reflect()
            self.orientation = -1
        elif twice_area > 1e-14 * scale:
            self.orientation = 1
        else:
            self.orientation = 0
        self.x = x
        self.y = y
        self.dx = x.derivative(1)
        self.dy = y.derivative(1)
        self.ddx = x.derivative(2)
        self.ddy = y.derivative(2)
        if check:
            self._check_regular()

    @property
    def degree(self) -> int:
        return max(self.x.degree, self.y.degree)

    def _check_regular(self):
        t = grid(max(256, 16 * self.degree))
        sp = self.speed(t)
        top = float(np.max(sp))
        if top == 0.0 or float(np.min(sp)) <= REGULARITY_TOL * top:
            raise RegularityError(
                f"curve is not regular: min |X'| = {float(np.min(sp)):.3e}, max |X'| = {top:.3e}"
            )

    def rms_radius(self) -> float:
        """``sqrt(int |X'|^2 dt / 2pi)``; equals R for a circle of radius R."""
        return math.sqrt((inner(self.dx, self.dx) + inner(self.dy, self.dy)) / TWO_PI)

    def signed_area(self) -> float:
        return 0.5 * (inner(self.x, self.dy) - inner(self.y, self.dx))

    def point(self, t):
        return self.x(t), self.y(t)

    def speed(self, t):
        return np.hypot(self.dx(t), self.dy(t))

    # rigid motions and reparametrizations ---------------------------------

    def translate(self, dx: float, dy: float) -> "PlaneCurve":
        return PlaneCurve(self.x + dx, self.y + dy, check=False)

    def scale(self, s: float) -> "PlaneCurve":
        return PlaneCurve(self.x * s, self.y * s, check=False)

    def rotate(self, angle: float) -> "PlaneCurve":
        c, s = math.cos(angle), math.sin(angle)
        return PlaneCurve(self.x * c - self.y * s, self.x * s + self.y * c, check=False)

    def shift(self, phi: float) -> "PlaneCurve":
        return PlaneCurve(self.x.shift(phi), self.y.shift(phi), check=False)

    def to_dict(self) -> dict:
        return {"x": self.x.to_dict(), "y": self.y.to_dict()}

    @classmethod
    def from_dict(cls, data) -> "PlaneCurve":
        if not isinstance(data, dict) or set(data) != {"x", "y"}:
            raise WirtlabError("curve: expected an object with exactly the keys 'x' and 'y'")
        return cls(TrigSeries.from_dict(data["x"], "x"), TrigSeries.from_dict(data["y"], "y"))


def circle(radius: float = 1.0, center=(0.0, 0.0)) -> PlaneCurve:
    return PlaneCurve(TrigSeries(center[0], [radius]), TrigSeries(center[1], [], [radius]))


def ellipse(a: float, b: float, center=(0.0, 0.0)) -> PlaneCurve:
    return PlaneCurve(TrigSeries(center[0], [a]), TrigSeries(center[1], [], [b]))


def perturbed_circle(rng: np.random.Generator, degree: int = 5, amplitude: float = 0.3) -> PlaneCurve:
    """Star-shaped curve ``r(t) (cos t, sin t)`` with ``r = 1 + p``.

    ``p`` has random coefficients of degree <= ``degree`` rescaled so that the
    sum of harmonic amplitudes, hence ``sup |p|``, is at most ``amplitude``.
    Since ``r > 0`` the curve is simple and regular.
    """
    p = TrigSeries(
        rng.uniform(-1, 1), rng.uniform(-1, 1, degree), rng.uniform(-1, 1, degree)
    )
    bound = abs(p.mean) + float(np.sum(np.sqrt(p.weights())))
    if bound > amplitude:
        p = p * (amplitude / bound)
    r = p + 1.0
    return PlaneCurve(r * TrigSeries(0.0, [1.0]), r * TrigSeries(0.0, [], [1.0]))


# ---------------------------------------------------------------------------
# pointwise geometry


@dataclass
class _Frame:
    x: np.ndarray
    y: np.ndarray
    speed: np.ndarray
    tx: np.ndarray
    ty: np.ndarray
    nx: np.ndarray
    ny: np.ndarray
    kappa: np.ndarray


def _frame(c: PlaneCurve, t) -> _Frame:
    t = np.asarray(t, dtype=np.float64)
    x, y = c.x(t), c.y(t)
    dx, dy = c.dx(t), c.dy(t)
    ddx, ddy = c.ddx(t), c.ddy(t)
    sp = np.hypot(dx, dy)
    tx, ty = dx / sp, dy / sp
    # N = -J T with J(a, b) = (-b, a)
    nx, ny = ty, -tx
    kappa = (dx * ddy - dy * ddx) / sp**3
    return _Frame(x, y, sp, tx, ty, nx, ny, kappa)


def curvature(c: PlaneCurve, t):
    """Signed curvature ``(x'y'' - y'x'') / |X'|^3``."""
    return _frame(c, t).kappa


def frames(c: PlaneCurve, t):
    """Unit tangent and outward normal, each as an ``(x, y)`` pair of arrays."""
    f = _frame(c, t)
    return (f.tx, f.ty), (f.nx, f.ny)


def length(c: PlaneCurve) -> float:
    r = c.rms_radius()
    return adaptive_trapezoid(lambda t: c.speed(t), floor=r).value


def area(c: PlaneCurve) -> float:
    """Enclosed area ``1/2 int (x y' - y x') dt``; exact by Parseval."""
    return c.signed_area()


def centroid(c: PlaneCurve) -> tuple[float, float]:
    """Arclength centroid ``(1/L) int X ds``."""
    r = c.rms_radius()

    def fn(t):
        x, y = c.point(t)
        sp = c.speed(t)
        return np.stack([sp, x * sp, y * sp])

    q = adaptive_trapezoid(fn, floor=[r, r * r, r * r]).value
    return float(q[1] / q[0]), float(q[2] / q[0])


def simplicity_check(c: PlaneCurve, n: int = 256) -> bool:
    """True if the inscribed n-gon has no crossing between nonadjacent edges.

    A necessary condition for simplicity at resolution n, not a certificate.
    Touching edges count as crossing.
    """
    t = grid(n)
    x, y = c.point(t)
    return not _backend.any_crossing(np.ascontiguousarray(x), np.ascontiguousarray(y), 1e-12)


# ---------------------------------------------------------------------------
# audits


@dataclass
class CurveAudit:
    L: float
    A: float
    D: float
    G: tuple[float, float]
    T1: float
    T2: float
    sachs_gap: float
    reverse_sachs_rhs: float
    int_x2: float  # int |X - G|^2 ds
    int_k2: float  # int kappa^2 ds
    int_xn: float  # int <X - G, N> ds
    int_kxn: float  # int kappa <X - G, N> ds
    int_n_field: float  # int |X - G - (L/2pi) N|^2 ds
    int_kn_field: float  # int |X - G - (L/2pi)^2 kappa N|^2 ds
    n_grid: int
    converged: bool
    reports: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return report.all_ok(self.reports)

    def to_dict(self) -> dict:
        out = {k: getattr(self, k) for k in (
            "L", "A", "D", "T1", "T2", "sachs_gap", "reverse_sachs_rhs",
            "int_x2", "int_k2", "n_grid", "converged",
        )}
        out["G"] = list(self.G)
        out["reports"] = [r.to_dict() for r in self.reports]
        return out

    def chain_a(self, rtol=1e-9) -> list:
        scale = self.L**2
        gap = self.D - self.T1
        return [
            report.check("sharpened isoperimetric: T1 <= D", 0.0, gap, scale,
                         "sharpened isoperimetric inequality (lower bound on the deficit)", rtol),
            report.check("reverse isoperimetric: D - T1 <= T2", gap, self.T2, scale,
                         "reverse isoperimetric inequality via the reverse Wirtinger inequality", rtol),
        ]

    def chain_b(self, rtol=1e-9) -> list:
        scale = self.L**3 / (4 * math.pi**2)
        return [
            report.check("Sachs: int|X-G|^2 ds <= L^3/(4pi^2)", 0.0, self.sachs_gap, scale,
                         "Sachs inequality", rtol),
            report.check("reverse Sachs", self.sachs_gap, self.reverse_sachs_rhs, scale,
                         "reverse Sachs inequality", rtol),
        ]


def curve_audit(c: PlaneCurve) -> CurveAudit:
    """Every arclength integral used by the isoperimetric and Sachs chains."""
    r = c.rms_radius()
    L = length(c)
    gx, gy = centroid(c)
    c0 = c.translate(-gx, -gy)
    a1 = L / TWO_PI
    a2 = a1 * a1

    def fn(t):
        f = _frame(c0, t)
        ds = f.speed
        xn = f.x * f.nx + f.y * f.ny
        x2 = f.x**2 + f.y**2
        u1 = (f.x - a1 * f.nx) ** 2 + (f.y - a1 * f.ny) ** 2
        u2 = (f.x - a2 * f.kappa * f.nx) ** 2 + (f.y - a2 * f.kappa * f.ny) ** 2
        return np.stack([x2 * ds, f.kappa**2 * ds, xn * ds, f.kappa * xn * ds, u1 * ds, u2 * ds])

    q = adaptive_trapezoid(fn, floor=[r**3, 1.0 / r, r * r, r, r**3, r**3])
    int_x2, int_k2, int_xn, int_kxn, u1, u2 = (float(v) for v in q.value)
    A = area(c)
    return CurveAudit(
        L=L,
        A=A,
        D=L * L - 4 * math.pi * A,
        G=(gx, gy),
        T1=2 * math.pi**2 / L * u1,
        T2=2 * math.pi**2 / (3 * L) * u2,
        sachs_gap=L**3 / (4 * math.pi**2) - int_x2,
        reverse_sachs_rhs=L**4 / (64 * math.pi**4) * (int_k2 - 4 * math.pi**2 / L),
        int_x2=int_x2,
        int_k2=int_k2,
        int_xn=int_xn,
        int_kxn=int_kxn,
        int_n_field=u1,
        int_kn_field=u2,
        n_grid=q.n,
        converged=q.converged,
    )


def _require_simple(c: PlaneCurve, n: int):
    if not simplicity_check(c, n):
        raise NonSimpleCurveError(f"simplicity check failed at resolution n={n}")


def thm31a_audit(c: PlaneCurve, n_check: int = 256) -> CurveAudit:
    """Audit ``0 <= D - T1 <= T2`` on a simple closed curve."""
    _require_simple(c, n_check)
    out = curve_audit(c)
    out.reports = out.chain_a()
    return out


def thm31b_audit(c: PlaneCurve, n_check: int = 256) -> CurveAudit:
    """Audit ``0 <= L^3/(4pi^2) - int|X-G|^2 ds <= L^4/(64pi^4) (int kappa^2 ds - 4pi^2/L)``."""
    _require_simple(c, n_check)
    out = curve_audit(c)
    out.reports = out.chain_b()
    return out


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    lhs: float
    rhs: float
    rel_error: float
    ok: bool

    def to_dict(self) -> dict:
        return {"name": self.name, "lhs": self.lhs, "rhs": self.rhs, "rel_error": self.rel_error, "ok": self.ok}


def _ident(name, lhs, rhs, scale, rtol):
    err = abs(lhs - rhs) / max(abs(lhs), abs(rhs), scale)
    return IdentityCheck(name, float(lhs), float(rhs), float(err), bool(err <= rtol))


def identity_checks(c: PlaneCurve, rtol: float = 1e-9, n_check: int = 256, audit: CurveAudit | None = None) -> list:
    """Integral identities tying the audit quantities together.

    The left sides are direct quadratures of the pointwise integrands; the right
    sides are assembled from ``int |X|^2 ds``, ``int kappa^2 ds``, the length
    and the Parseval area.
    """
    _require_simple(c, n_check)
    a = audit if audit is not None else curve_audit(c)
    L, A = a.L, a.A
    big = L**3 / (4 * math.pi**2)
    return [
        _ident("int|X-(L/2pi)^2 kN|^2 ds expansion", a.int_kn_field,
               a.int_x2 - 2 * L**3 / TWO_PI**2 + (L / TWO_PI) ** 4 * a.int_k2, big, rtol),
        _ident("int|X-(L/2pi)N|^2 ds expansion", a.int_n_field,
               a.int_x2 - 2 * A * L / math.pi + L**3 / TWO_PI**2, big, rtol),
        _ident("Minkowski: int k<X,N> ds = L", a.int_kxn, L, L, rtol),
        _ident("divergence: int <X,N> ds = 2A", a.int_xn, 2 * A, L * L / (4 * math.pi), rtol),
    ]


def curve_points(c: PlaneCurve, n: int, close: bool = False) -> tuple[list, np.ndarray]:
    """Columns ``t, x, y, kappa, speed`` at n uniform parameters."""
    if n < 3:
        raise WirtlabError("need at least 3 plot points")
    t = grid(n)
    f = _frame(c, t)
    rows = np.column_stack([t, f.x, f.y, f.kappa, f.speed])
    if close:
        rows = np.vstack([rows, rows[:1]])
    return ["t", "x", "y", "kappa", "speed"], rows
