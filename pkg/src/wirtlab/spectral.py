"""Finite real Fourier series on [0, 2pi) and uniform-grid quadrature.

A :class:`TrigSeries` stores

    f(t) = mean + sum_{n=1}^{N} (cos[n-1] cos(n t) + sin[n-1] sin(n t))

All integrals of products of series are exact (Parseval); anything that is
not a trigonometric polynomial goes through :func:`adaptive_trapezoid`.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np

from . import _backend
from .errors import AliasingError, WirtlabError

__all__ = [
    "TrigSeries",
    "SampleGrid",
    "QuadResult",
    "derivative",
    "l2_integral",
    "inner",
    "integral",
    "project_mean_zero",
    "sample",
    "analyze",
    "quad_trapezoid",
    "adaptive_trapezoid",
    "differentiate_samples",
    "random_series",
    "grid",
]

log = logging.getLogger(__name__)

TWO_PI = 2.0 * math.pi


def _as_coeffs(values) -> np.ndarray:
    arr = np.array(values, dtype=np.float64).ravel()
    if not np.all(np.isfinite(arr)):
        raise WirtlabError("series coefficients must be finite")
    return arr


class TrigSeries:
    """Real trigonometric polynomial with cosine/sine coefficient arrays.

    Trailing harmonics whose coefficients are both exactly zero are dropped, so
    ``degree`` is the index of the last nonzero pair.  Instances are immutable.
    """

    __slots__ = ("_mean", "_cos", "_sin")

    def __init__(self, mean=0.0, cos=(), sin=()):
        a = _as_coeffs(cos)
        b = _as_coeffs(sin)
        mean = float(mean)
        if not math.isfinite(mean):
            raise WirtlabError("series mean must be finite")
        n = max(len(a), len(b))
        if len(a) < n:
            a = np.concatenate([a, np.zeros(n - len(a))])
        if len(b) < n:
            b = np.concatenate([b, np.zeros(n - len(b))])
        self._set(mean, a, b)

    @classmethod
    def _raw(cls, mean: float, a: np.ndarray, b: np.ndarray) -> "TrigSeries":
        # trusted path: finite float arrays of equal length, not aliased elsewhere
        obj = cls.__new__(cls)
        obj._set(mean, a, b)
        return obj

    def _set(self, mean, a, b):
        nz = np.flatnonzero((a != 0.0) | (b != 0.0))
        n = int(nz[-1]) + 1 if len(nz) else 0
        a, b = a[:n].copy(), b[:n].copy()
        a.flags.writeable = False
        b.flags.writeable = False
        self._mean = mean
        self._cos = a
        self._sin = b

    @property
    def mean(self) -> float:
        return self._mean

    @property
    def cos(self) -> np.ndarray:
        return self._cos

    @property
    def sin(self) -> np.ndarray:
        return self._sin

    @property
    def degree(self) -> int:
        return len(self._cos)

    def weights(self) -> np.ndarray:
        """``alpha_n^2 + beta_n^2`` for n = 1..degree."""
        return self._cos**2 + self._sin**2

    def __call__(self, t):
        scalar = np.ndim(t) == 0
        tt = np.ascontiguousarray(np.atleast_1d(t), dtype=np.float64)
        out = _backend.eval_trig(self._mean, self._cos, self._sin, tt)
        return float(out[0]) if scalar else np.asarray(out).reshape(np.shape(t))

    # arithmetic -----------------------------------------------------------

    def _padded(self, n):
        z = np.zeros(n - self.degree)
        return np.concatenate([self._cos, z]), np.concatenate([self._sin, z])

    def __add__(self, other):
        if isinstance(other, TrigSeries):
            short, long_ = sorted((self, other), key=lambda s: s.degree)
            a, b = long_._cos.copy(), long_._sin.copy()
            a[: short.degree] += short._cos
            b[: short.degree] += short._sin
            return TrigSeries._raw(self._mean + other._mean, a, b)
        if np.isscalar(other):
            return TrigSeries(self._mean + float(other), self._cos, self._sin)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return TrigSeries(-self._mean, -self._cos, -self._sin)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, TrigSeries):
            c = np.convolve(self.to_complex(), other.to_complex())
            return TrigSeries.from_complex(c)
        if np.isscalar(other):
            s = float(other)
            return TrigSeries(self._mean * s, self._cos * s, self._sin * s)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if np.isscalar(other):
            return self * (1.0 / float(other))
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, TrigSeries):
            return NotImplemented
        return (
            self._mean == other._mean
            and np.array_equal(self._cos, other._cos)
            and np.array_equal(self._sin, other._sin)
        )

    __hash__ = None

    def allclose(self, other: "TrigSeries", rtol=1e-12, atol=1e-12) -> bool:
        n = max(self.degree, other.degree)
        a1, b1 = self._padded(n)
        a2, b2 = other._padded(n)
        return bool(
            np.allclose([self._mean], [other._mean], rtol=rtol, atol=atol)
            and np.allclose(a1, a2, rtol=rtol, atol=atol)
            and np.allclose(b1, b2, rtol=rtol, atol=atol)
        )

    # transformations ------------------------------------------------------

    def derivative(self, k: int = 1) -> "TrigSeries":
        return derivative(self, k)

    def shift(self, phi: float) -> "TrigSeries":
        """The series ``t -> f(t + phi)``."""
        n = np.arange(1, self.degree + 1)
        c, s = np.cos(n * phi), np.sin(n * phi)
        a, b = self._cos, self._sin
        return TrigSeries(self._mean, a * c + b * s, b * c - a * s)

    def reflect(self) -> "TrigSeries":
        """The series ``t -> f(-t)``."""
        return TrigSeries(self._mean, self._cos, -self._sin)

    def to_complex(self) -> np.ndarray:
        """Coefficients ``a_{-N..N}`` with ``f = sum a_n exp(i n t)``."""
        pos = 0.5 * (self._cos - 1j * self._sin)
        return np.concatenate([np.conj(pos[::-1]), [self._mean + 0j], pos])

    @classmethod
    def from_complex(cls, c) -> "TrigSeries":
        c = np.asarray(c, dtype=complex)
        N = (len(c) - 1) // 2
        pos = c[N + 1 :]
        return cls(c[N].real, 2.0 * pos.real, -2.0 * pos.imag)

    # serialization --------------------------------------------------------

    def to_dict(self) -> dict:
        return {"mean": self._mean, "cos": self._cos.tolist(), "sin": self._sin.tolist()}

    @classmethod
    def from_dict(cls, data, where: str = "series") -> "TrigSeries":
        if not isinstance(data, dict):
            raise WirtlabError(f"{where}: expected an object with keys 'mean', 'cos', 'sin'")
        unknown = set(data) - {"mean", "cos", "sin"}
        if unknown:
            raise WirtlabError(f"{where}: unknown field(s) {sorted(unknown)}")
        mean = data.get("mean", 0.0)
        if isinstance(mean, bool) or not isinstance(mean, (int, float)) or not math.isfinite(mean):
            raise WirtlabError(f"{where}.mean: expected a finite number")
        lists = {}
        for key in ("cos", "sin"):
            vals = data.get(key, [])
            if not isinstance(vals, list) or any(
                isinstance(v, bool) or not isinstance(v, (int, float)) or not math.isfinite(v) for v in vals
            ):
                raise WirtlabError(f"{where}.{key}: expected a list of finite numbers")
            lists[key] = vals
        return cls(mean, lists["cos"], lists["sin"])

    def __repr__(self):
        return f"TrigSeries(mean={self._mean!r}, cos={self._cos.tolist()!r}, sin={self._sin.tolist()!r})"


def derivative(f: TrigSeries, k: int) -> TrigSeries:
    """k-th derivative, term by term: ``a_n -> (i n)^k a_n``."""
    if k < 0:
        raise ValueError("derivative order must be nonnegative")
    if k == 0:
        return f
    scale = np.arange(1, f.degree + 1, dtype=np.float64) ** k
    a, b = f.cos * scale, f.sin * scale
    a, b = {0: (a, b), 1: (b, -a), 2: (-a, -b), 3: (-b, a)}[k % 4]
    return TrigSeries._raw(0.0, a, b)


def l2_integral(f: TrigSeries) -> float:
    """``int_0^{2pi} f(t)^2 dt`` by Parseval."""
    return TWO_PI * f.mean**2 + math.pi * float(np.sum(f.weights()))


def inner(f: TrigSeries, g: TrigSeries) -> float:
    """``int_0^{2pi} f(t) g(t) dt`` by Parseval."""
    n = min(f.degree, g.degree)
    return TWO_PI * f.mean * g.mean + math.pi * float(
        np.dot(f.cos[:n], g.cos[:n]) + np.dot(f.sin[:n], g.sin[:n])
    )


def integral(f: TrigSeries) -> float:
    return TWO_PI * f.mean


def project_mean_zero(f: TrigSeries) -> TrigSeries:
    return TrigSeries(0.0, f.cos, f.sin)


def random_series(degree: int, rng: np.random.Generator, zero_mean: bool = True) -> TrigSeries:
    """Series with coefficients uniform on [-1, 1] up to ``degree``."""
    mean = 0.0 if zero_mean else rng.uniform(-1.0, 1.0)
    return TrigSeries(mean, rng.uniform(-1.0, 1.0, degree), rng.uniform(-1.0, 1.0, degree))


# ---------------------------------------------------------------------------
# uniform grids


def grid(n: int) -> np.ndarray:
    return TWO_PI * np.arange(n) / n


@dataclass(frozen=True)
class SampleGrid:
    """Values at ``t_j = 2 pi j / n``, j = 0..n-1."""

    values: np.ndarray

    def __post_init__(self):
        v = np.ascontiguousarray(self.values, dtype=np.float64).ravel()
        if len(v) < 1:
            raise WirtlabError("a sample grid needs at least one sample")
        object.__setattr__(self, "values", v)

    @property
    def n_samples(self) -> int:
        return len(self.values)

    @property
    def t(self) -> np.ndarray:
        return grid(self.n_samples)


def sample(f: TrigSeries, n: int) -> SampleGrid:
    if n < 1:
        raise WirtlabError(f"sample count must be positive, got {n}")
    return SampleGrid(f(grid(n)))


def analyze(g: SampleGrid, max_degree: int | None = None) -> TrigSeries:
    """Discrete Fourier analysis of uniform samples up to ``max_degree``.

    Harmonics at or above the Nyquist index ``n/2`` cannot be resolved and are
    refused.
    """
    n = g.n_samples
    if max_degree is None:
        max_degree = (n - 1) // 2
    if max_degree < 0 or 2 * max_degree >= n:
        raise AliasingError(f"max_degree {max_degree} must be below n/2 = {n / 2} for n = {n} samples")
    a0, a, b = _backend.dft_real(g.values, int(max_degree))
    return TrigSeries(a0, a, b)


def quad_trapezoid(g: SampleGrid) -> float:
    """Periodic trapezoid rule; exact for trig polynomials of degree < n.

    With very few samples the rule aliases: ``cos t`` on two samples
    integrates to 0 only by symmetry, and ``cos 2t`` on two samples gives 4 pi.
    """
    return TWO_PI * math.fsum(g.values) / g.n_samples


@dataclass(frozen=True)
class QuadResult:
    value: np.ndarray | float
    n: int
    converged: bool
    delta: np.ndarray | float  # |Q_n - Q_{n/2}| at the final step


def adaptive_trapezoid(func, rtol=1e-11, floor=0.0, n0=256, nmax=65536) -> QuadResult:
    """Integrate a periodic ``func(t)`` over [0, 2pi) by grid doubling.

    ``func`` maps a 1-d array of nodes to values of shape ``(n,)`` or
    ``(k, n)``; each of the k integrals must settle to
    ``|Q_n - Q_{n/2}| <= rtol * max(|Q_n|, floor)``.  Nodes already evaluated
    are reused after each doubling.  Stops at ``nmax`` with ``converged=False``.
    """
    n = n0
    total = np.sum(np.asarray(func(grid(n)), dtype=np.float64), axis=-1)
    prev = TWO_PI * total / n
    floor = np.asarray(floor, dtype=np.float64)
    while True:
        odd = TWO_PI * (np.arange(n) + 0.5) / n
        total = total + np.sum(np.asarray(func(odd), dtype=np.float64), axis=-1)
        n *= 2
        cur = TWO_PI * total / n
        delta = np.abs(cur - prev)
        ok = bool(np.all(delta <= rtol * np.maximum(np.abs(cur), floor)))
        if ok or n >= nmax:
            if not ok:
                log.warning("adaptive trapezoid stopped at n=%d without converging", n)
            if np.ndim(cur) == 0:
                return QuadResult(float(cur), n, ok, float(delta))
            return QuadResult(cur, n, ok, delta)
        prev = cur


def differentiate_samples(g: SampleGrid, k: int = 1) -> SampleGrid:
    """Spectral k-th derivative of periodic samples (Nyquist mode dropped)."""
    n = g.n_samples
    spectrum = np.fft.rfft(g.values)
    freq = np.arange(len(spectrum), dtype=np.float64)
    if n % 2 == 0:
        spectrum[-1] = 0.0
    return SampleGrid(np.fft.irfft(spectrum * (1j * freq) ** k, n))
