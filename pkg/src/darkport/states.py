"""Exact complex linear algebra on the photon's path (x) polarization space.

Amplitudes are plain Python ``complex`` (IEEE double re/im). Two state kinds:

* :class:`PolarizationState` over the basis ``{|H>, |V>}``,
* :class:`JointState` over the fixed basis order
  ``{|u,H>, |u,V>, |d,H>, |d,V>}`` (u/d = upper/lower path).

Conventions
-----------
* ``|+> = (|H> + |V>)/sqrt(2)``
* ``|R> = (|H> + i|V>)/sqrt(2)``, ``|L> = (|H> - i|V>)/sqrt(2)``
* Inner products are conjugate-linear in the *first* argument.
* State equality in tests is defined up to global phase; use
  :func:`fidelity` (``|<a|b>| / (|a| |b|)``) for that comparison.

Relative phases of nearly-dark amplitudes must be read off with ``arg`` of
amplitude products, never by subtracting large angles; see ``weakmeas``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import NullStateError

_SQRT2_INV = 1.0 / math.sqrt(2.0)


@dataclass(frozen=True)
class PolarizationState:
    """Two complex amplitudes (aH, aV) over {|H>, |V>}."""

    aH: complex
    aV: complex

    def amplitudes(self) -> tuple[complex, ...]:
        return (self.aH, self.aV)

    def norm(self) -> float:
        a, b = self.aH, self.aV
        return math.hypot(a.real, a.imag, b.real, b.imag)


@dataclass(frozen=True)
class JointState:
    """Four complex amplitudes over {|u,H>, |u,V>, |d,H>, |d,V>}, in that order."""

    a_uH: complex
    a_uV: complex
    a_dH: complex
    a_dV: complex

    def amplitudes(self) -> tuple[complex, ...]:
        return (self.a_uH, self.a_uV, self.a_dH, self.a_dV)

    def norm(self) -> float:
        comps = []
        for a in self.amplitudes():
            comps.append(a.real)
            comps.append(a.imag)
        return math.hypot(*comps)


State = PolarizationState | JointState


def ket_h() -> PolarizationState:
    return PolarizationState(1.0, 0.0)


def ket_v() -> PolarizationState:
    return PolarizationState(0.0, 1.0)


def ket_plus() -> PolarizationState:
    return PolarizationState(_SQRT2_INV, _SQRT2_INV)


def ket_r() -> PolarizationState:
    return PolarizationState(_SQRT2_INV, 1j * _SQRT2_INV)


def ket_l() -> PolarizationState:
    return PolarizationState(_SQRT2_INV, -1j * _SQRT2_INV)


def normalize(state: State) -> tuple[State, float]:
    """Rescale to unit norm; returns ``(normalized_state, original_norm)``.

    Raises :class:`NullStateError` on an exactly null input (this is how a
    post-selection with probability zero announces itself).
    """
    n = state.norm()
    if n == 0.0:
        raise NullStateError("cannot normalize null state")
    scaled = [a / n for a in state.amplitudes()]
    return type(state)(*scaled), n


def inner_product(a: State, b: State) -> complex:
    """<a|b>, conjugate-linear in ``a``. Both states must be the same kind."""
    if type(a) is not type(b):
        raise TypeError(f"state kinds differ: {type(a).__name__} vs {type(b).__name__}")
    return sum(
        x.conjugate() * y for x, y in zip(a.amplitudes(), b.amplitudes())
    )


def projector_probability(state: State, basis_state: State) -> float:
    """|<basis|state>|^2 for normalized inputs; lands in [0, 1]."""
    return abs(inner_product(basis_state, state)) ** 2


def fidelity(a: State, b: State) -> float:
    """|<a|b>| / (|a| |b|): 1 iff the states agree up to global phase."""
    na, nb = a.norm(), b.norm()
    if na == 0.0 or nb == 0.0:
        raise NullStateError("fidelity undefined for null state")
    return abs(inner_product(a, b)) / (na * nb)


def relative_phase(state: PolarizationState) -> float:
    """arg(aV * conj(aH)) in (-pi, pi].

    Computed from the amplitude product, which stays well-conditioned even
    when the common amplitude magnitude is ~1e-150.
    """
    return cmath.phase(state.aV * state.aH.conjugate())
