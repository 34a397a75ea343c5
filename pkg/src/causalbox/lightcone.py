"""Causality-violation probability for the expanded box.

At release, a light signal from the vanished inner wall travels outward at
zeta_front(tau) = min(1 + tau, Lambda): the boundary of the region that any
relativistically admissible evolution could populate (the union of forward
light cones of the initial support).  The violation probability is the
Schrodinger weight beyond that front,

    P(tau) = int_{zeta_front}^{Lambda} |psi(zeta, tau)|^2 dzeta,

zero at tau = 0 (the state starts inside) and again for tau >= Lambda - 1
(the front has swept the whole outer box).  It is a lower bound on how
wrong the non-relativistic density is, not an estimate of the true
relativistic dynamics.

Two evaluation routes are provided:

``pairwise`` (default)  Expands |psi|^2 into mode pairs.  The partial-range
    integrals int_f^Lambda sin(n pi zeta/L) sin(m pi zeta/L) dzeta have an
    elementary closed form in the index sum and difference, so P(tau)
    reduces to correlation sums over the phased coefficients, evaluated
    with FFTs in O(N log N).  Exact for the truncated spectrum: the only
    error is the spectrum's own tail (plus roundoff), reported as
    2 sqrt(tail_bound).

``quadrature``  Adaptive Gauss-Kronrod on the sampled density, seeded with
    panels at the finest retained oscillation scale Lambda/N so the error
    estimator never sees an unresolved beat.  Orders of magnitude slower
    for sweep work (each refinement wave re-evaluates the dense mode sum),
    kept as the independent cross-check of the pairwise algebra.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .boxmodes import ModeSpectrum, wavefunction
from .params import SystemParams, time_scales
from .quadrature import NumericalConvergenceError, QuadratureConfig, integrate

__all__ = [
    "LightConeGeometry",
    "ViolationCurve",
    "light_front",
    "violation_probability",
    "violation_curve",
    "default_sweep_grid",
]

_PI = math.pi


@dataclass(frozen=True)
class LightConeGeometry:
    """Front of the compatible region for an outer box of width Lambda."""

    lambda_factor: float

    def front(self, tau: float) -> float:
        return light_front(tau, self.lambda_factor)


def light_front(tau: float, lambda_factor: float) -> float:
    """Position min(1 + tau, Lambda) reached by light released at the inner wall."""
    if tau < 0:
        raise ValueError(f"tau must be non-negative, got {tau}")
    return min(1.0 + tau, lambda_factor)


@dataclass(frozen=True)
class ViolationCurve:
    """P(tau) sampled on a time grid, with per-point error estimates."""

    tau_grid: np.ndarray
    values: np.ndarray
    error_estimates: np.ndarray
    params: SystemParams
    tolerances: dict = field(default_factory=dict)


def _cosine_range_integrals(d: np.ndarray, front: float, lam: float) -> np.ndarray:
    """int_front^Lambda cos(d pi zeta / Lambda) dzeta for integer index d >= 1."""
    return -(lam / (d * _PI)) * np.sin(d * _PI * front / lam)


def _pairwise_value(spectrum: ModeSpectrum, s: float, tau: float,
                    front: float) -> float:
    lam = spectrum.lambda_factor
    n_max = spectrum.max_mode
    n = np.arange(1, n_max + 1, dtype=float)
    c = spectrum.coefficients * np.exp(
        -1j * _PI**2 * n * n * tau / (2.0 * lam * lam * s))
    size = 1 << int(math.ceil(math.log2(2 * n_max + 2)))
    pad = np.zeros(size, dtype=complex)
    pad[1:n_max + 1] = c
    spec_fft = np.fft.fft(pad)
    # lag sums over index difference (autocorrelation) and index sum (folded
    # convolution with the conjugate); real parts carry the cosine algebra
    auto = np.fft.ifft(spec_fft * np.conj(spec_fft))
    fold = np.fft.ifft(spec_fft * np.fft.fft(np.conj(pad)))
    d = np.arange(1, n_max, dtype=float)
    c_diff = _cosine_range_integrals(d, front, lam)
    p = np.arange(2, 2 * n_max + 1, dtype=float)
    c_sum = _cosine_range_integrals(p, front, lam)
    x_term = (lam - front) * auto[0].real + 2.0 * float(c_diff @ auto[1:n_max].real)
    y_term = float(c_sum @ fold[2:2 * n_max + 1].real)
    return 0.5 * (x_term - y_term)


def _quadrature_value(spectrum: ModeSpectrum, s: float, tau: float,
                      front: float, quad_cfg: QuadratureConfig | None):
    lam = spectrum.lambda_factor
    if quad_cfg is None:
        quad_cfg = QuadratureConfig(abs_tol=1e-9, rel_tol=1e-9,
                                    max_subdivisions=20000)
    # seed panels at the finest retained oscillation scale Lambda/N
    n_panels = int(math.ceil((lam - front) * spectrum.max_mode / lam)) + 1
    cuts = np.linspace(front, lam, n_panels + 1)[1:-1]
    cfg = QuadratureConfig(abs_tol=quad_cfg.abs_tol, rel_tol=quad_cfg.rel_tol,
                           max_subdivisions=quad_cfg.max_subdivisions,
                           breakpoints=tuple(cuts))
    res = integrate(
        lambda z: np.abs(wavefunction(spectrum, s, z, tau)) ** 2,
        front, lam, cfg)
    if not res.converged:
        raise NumericalConvergenceError(
            f"violation quadrature did not converge at tau={tau}: "
            f"achieved {res.error_estimate:.3e}", res.error_estimate)
    return res.value, res.error_estimate


def violation_probability(spectrum: ModeSpectrum, params: SystemParams,
                          tau: float, method: str = "pairwise",
                          quad_cfg: QuadratureConfig | None = None,
                          full_output: bool = False):
    """Probability weight beyond the light front at time tau.

    Returns the raw value (optionally with its error estimate when
    ``full_output`` is set).  Raw values may stray outside [0, 1] by up to
    the reported estimate; they are not clamped here, so that consumers can
    see the numerics.  A result outside [0, 1] by more than a generous
    multiple of the estimate raises, since that indicates a bug rather
    than roundoff.
    """
    if tau < 0:
        raise ValueError(f"tau must be non-negative, got {tau}")
    front = light_front(tau, spectrum.lambda_factor)
    if front >= spectrum.lambda_factor:
        return (0.0, 0.0) if full_output else 0.0
    if method == "pairwise":
        value = _pairwise_value(spectrum, params.s, tau, front)
        err = 2.0 * math.sqrt(spectrum.tail_bound) + 1e-12
    elif method == "quadrature":
        value, qerr = _quadrature_value(spectrum, params.s, tau, front, quad_cfg)
        err = qerr + 2.0 * math.sqrt(spectrum.tail_bound)
    else:
        raise ValueError(f"unknown method {method!r}")
    guard = max(1e-6, 10.0 * err)
    if not (-guard <= value <= 1.0 + guard):
        raise RuntimeError(
            f"violation probability {value} outside [0,1] beyond numerical "
            f"tolerance {guard}; inconsistent spectrum or parameters")
    return (value, err) if full_output else value


def violation_curve(spectrum: ModeSpectrum, params: SystemParams,
                    tau_grid, method: str = "pairwise",
                    quad_cfg: QuadratureConfig | None = None) -> ViolationCurve:
    """Evaluate P on an increasing time grid.

    Points are independent, so the result does not depend on evaluation
    order; failures of the quadrature route propagate with the offending
    tau attached.
    """
    grid = np.asarray(tau_grid, dtype=float)
    if grid.size == 0:
        raise ValueError("tau grid must not be empty")
    if grid.size > 1 and not np.all(np.diff(grid) > 0):
        raise ValueError("tau grid must be strictly increasing")
    if grid[0] < 0:
        raise ValueError("tau grid must start at or after 0")
    values = np.empty(grid.shape)
    errors = np.empty(grid.shape)
    for i, tau in enumerate(grid):
        try:
            values[i], errors[i] = violation_probability(
                spectrum, params, float(tau), method=method,
                quad_cfg=quad_cfg, full_output=True)
        except NumericalConvergenceError as exc:
            raise NumericalConvergenceError(
                f"curve evaluation failed at tau={tau}: {exc}",
                exc.error_estimate) from exc
    return ViolationCurve(
        tau_grid=grid, values=values, error_estimates=errors, params=params,
        tolerances={
            "method": method,
            "spectrum_tail_bound": spectrum.tail_bound,
            "max_error_estimate": float(errors.max()),
        })


def default_sweep_grid(params: SystemParams, tau_step: float = 0.005) -> np.ndarray:
    """Time grid for figure-quality sweeps over the violation window.

    Uniform spacing on [0, Lambda - 1], refined tenfold within 0.05 of the
    specular-revival time (whose peak can be much narrower than the base
    step) and pinned to contain tau_spec itself when it falls inside the
    window.
    """
    if not tau_step > 0:
        raise ValueError("tau_step must be positive")
    t_end = params.lambda_factor - 1.0
    n_base = int(round(t_end / tau_step))
    base = np.arange(n_base + 1) * tau_step
    pieces = [base, np.array([t_end])]
    tau_spec = time_scales(params).tau_specular
    if 0.0 <= tau_spec <= t_end:
        fine = tau_step / 10.0
        k_lo = int(math.floor(max(tau_spec - 0.05, 0.0) / fine))
        k_hi = int(math.ceil(min(tau_spec + 0.05, t_end) / fine))
        pieces.append(np.arange(k_lo, k_hi + 1) * fine)
        pieces.append(np.array([tau_spec]))
    grid = np.unique(np.round(np.concatenate(pieces), 12))
    return grid[(grid >= 0.0) & (grid <= t_end)]
