"""Build the photon state from physical parameters.

Chain: balanced input split over paths u/d with |+> polarization, then the
two mirror-image polarization interferometers imprint opposite phases on H
and V, path-dependently:

    |u,H> -> e^{+i theta} |u,H>     |d,H> -> e^{-i theta} |d,H>
    |u,V> -> e^{-i theta} |u,V>     |d,V> -> e^{+i theta} |d,V>

theta is the single-pass signal phase after recycling and arm gain,
theta = 2 * G_p * G_arm * k * dL with dL = h*L/2. Sign convention: positive
strain h stretches the H-arm on the u side. A common global phase is dropped
throughout.

The recycling and arm gains are taken as their scalar closed forms,
G_p = 2/T and G_arm = 2/sqrt(T_tilde); intra-cavity field dynamics is out of
scope.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import NamedTuple

from .config import DetectorConfig
from .errors import ConfigError
from .states import JointState


class Gains(NamedTuple):
    g_power: float
    g_arm: float


@dataclass(frozen=True)
class GwSignal:
    """Quasi-static plus-polarized strain amplitude at normal incidence."""

    strain_h: float

    def __post_init__(self) -> None:
        # Guard: the weak-signal treatment silently breaks down long before
        # |h| ~ 1e-3, so refuse anything beyond it.
        if not abs(self.strain_h) < 1e-3:
            raise ConfigError("strain_h out of weak-signal range: |h| must be < 1e-3")
        if not math.isfinite(self.strain_h):
            raise ConfigError("strain_h must be finite")


def gains(config: DetectorConfig) -> Gains:
    """(G_p, G_arm) = (2/T, 2/sqrt(T_tilde))."""
    return Gains(
        g_power=2.0 / config.power_recycle_T,
        g_arm=2.0 / math.sqrt(config.arm_input_T_tilde),
    )


def phase_from_strain(signal: GwSignal, config: DetectorConfig) -> float:
    """Signal phase theta = 2 * G_p * G_arm * k * (h*L/2) [rad]; linear in h."""
    g = gains(config)
    delta_l = signal.strain_h * config.arm_length_L / 2.0
    return 2.0 * g.g_power * g.g_arm * config.wavenumber_k * delta_l


def strain_from_phase(theta: float, config: DetectorConfig) -> float:
    """Exact inverse of :func:`phase_from_strain`."""
    g = gains(config)
    return theta / (g.g_power * g.g_arm * config.wavenumber_k * config.arm_length_L)


def prepare_input() -> JointState:
    """State after the balanced input splitter: all four amplitudes 1/2."""
    return JointState(0.5, 0.5, 0.5, 0.5)


def apply_pmi(state: JointState, theta: float) -> JointState:
    """Apply the diagonal phase imprint of the two mirror-image interferometers."""
    p = cmath.exp(1j * theta)
    m = cmath.exp(-1j * theta)
    return JointState(
        a_uH=state.a_uH * p,
        a_uV=state.a_uV * m,
        a_dH=state.a_dH * m,
        a_dV=state.a_dV * p,
    )
