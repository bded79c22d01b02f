"""Closed-form decay-mode spectra of the gauged ring Hamiltonians.

Every valid (distance-symmetric) configuration carries N exact eigenmodes

    psi_m = r**(m-1) * exp(1j*(m-1)*w*theta),   w = 0..N-1,

whose site amplitudes form one shared geometric profile |r|**(m-1) while the
winding w distinguishes the phase patterns.  The eigenvalue of mode w under
gauge k is the hop sum over active distances q:

    E_w = t_bwd * t * sum_q a_q * r**q * exp(1j*q*(w-k)*theta),

which collapses to geometric-series closed forms for the fully connected
and half-connected patterns.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import SolverError, UsageError
from .graphs import GraphSpec, Pattern
from .solver import Spectrum

__all__ = [
    "AnalyticMode",
    "analytic_eigenvalue",
    "closed_form_fcg",
    "closed_form_hcs",
    "analytic_mode_vector",
    "full_analytic_spectrum",
    "SINGULAR_DENOMINATOR_EPS",
]

# below this, the geometric-series denominator is treated as singular and the
# finite direct sum is used instead (covers t = 1 at the selected winding)
SINGULAR_DENOMINATOR_EPS = 1e-9


@dataclass(frozen=True, eq=False)
class AnalyticMode:
    """One closed-form eigenpair: winding label, eigenvalue and site values.

    site_values[0] is always 1; successive magnitudes shrink (or grow) by
    the constant factor |r| — the pure-decay signature.
    """

    winding: int
    phase_step: float          # w * theta
    value: complex
    site_values: np.ndarray

    @property
    def amplitudes(self) -> np.ndarray:
        return np.abs(self.site_values)

    @property
    def vector(self) -> np.ndarray:
        return self.site_values


def _check_winding(spec: GraphSpec, w: int):
    if not 0 <= w < spec.sites:
        raise UsageError(f"winding must lie in [0, {spec.sites - 1}], got {w}")


def analytic_eigenvalue(spec: GraphSpec, w: int) -> complex:
    """Direct hop-sum eigenvalue of mode w (any valid connectivity)."""
    _check_winding(spec, w)
    t = spec.hopping_ratio
    r = spec.decay_rate
    beta = (w - spec.gauge) * spec.phase_step
    q = np.nonzero(spec.connectivity_vector)[0] + 1
    return complex(spec.t_bwd * t * np.sum(r**q * np.exp(1j * q * beta)))


def closed_form_fcg(spec: GraphSpec, w: int) -> complex:
    """Geometric-series eigenvalue for the fully connected pattern.

    E_w = t_bwd * t * (-1 + (1 - 1/t) / (1 - x)) with x = r*exp(1j*beta);
    falls back to the direct sum when |1 - x| is numerically singular.
    """
    if spec.pattern is not Pattern.FCG:
        raise UsageError(f"closed_form_fcg needs the fcg pattern, got {spec.pattern.value}")
    _check_winding(spec, w)
    t = spec.hopping_ratio
    x = spec.decay_rate * np.exp(1j * (w - spec.gauge) * spec.phase_step)
    if abs(1.0 - x) < SINGULAR_DENOMINATOR_EPS:
        return analytic_eigenvalue(spec, w)
    return complex(spec.t_bwd * t * (-1.0 + (1.0 - 1.0 / t) / (1.0 - x)))


def closed_form_hcs(spec: GraphSpec, w: int) -> complex:
    """Geometric-series eigenvalue for the half-connected pattern.

    The odd-distance sum collapses to t_bwd * (t - 1) * x / (1 - x**2); its
    |E| maximizers satisfy exp(2j*(w-k)*theta) = 1, i.e. w in {k, k + N/2}.
    """
    if spec.pattern is not Pattern.HCS:
        raise UsageError(f"closed_form_hcs needs the hcs pattern, got {spec.pattern.value}")
    _check_winding(spec, w)
    t = spec.hopping_ratio
    x = spec.decay_rate * np.exp(1j * (w - spec.gauge) * spec.phase_step)
    if abs(1.0 - x * x) < SINGULAR_DENOMINATOR_EPS:
        return analytic_eigenvalue(spec, w)
    return complex(spec.t_bwd * (t - 1.0) * x / (1.0 - x * x))


def analytic_mode_vector(spec: GraphSpec, w: int) -> np.ndarray:
    """Site values psi_m = r**(m-1) * exp(1j*(m-1)*w*theta), psi_1 = 1.

    For every valid connectivity this is an exact eigenvector of the
    assembled matrix with eigenvalue analytic_eigenvalue(spec, w),
    independent of the gauge index.
    """
    _check_winding(spec, w)
    m = np.arange(spec.sites)
    return spec.decay_rate**m * np.exp(1j * m * w * spec.phase_step)


def full_analytic_spectrum(spec: GraphSpec) -> Spectrum:
    """All N closed-form modes, w = 0..N-1, in winding order.

    Also certifies completeness: the mode-vector matrix must be invertible
    (it is a Vandermonde matrix in the N distinct points r*exp(1j*w*theta)).
    """
    modes = []
    for w in range(spec.sites):
        modes.append(
            AnalyticMode(
                winding=w,
                phase_step=w * spec.phase_step,
                value=analytic_eigenvalue(spec, w),
                site_values=analytic_mode_vector(spec, w),
            )
        )
    basis = np.column_stack([m.site_values for m in modes])
    if np.linalg.det(basis) == 0:
        raise SolverError("analytic mode basis is singular; modes do not span the ring")
    return Spectrum(modes=tuple(modes), source="analytic", ordering="by_winding")
