"""Exception hierarchy. The CLI maps these onto exit codes."""


class DarkportError(Exception):
    """Base class for all library errors."""


class ConfigError(DarkportError):
    """Invalid detector configuration (bad value, unknown key, missing key)."""


class PhysicsError(DarkportError):
    """Physically undefined operation (null state, undefined amplification...)."""


class NullStateError(PhysicsError):
    """Normalization or post-selection hit an exactly dark output."""


class BracketError(PhysicsError):
    """A root search could not bracket its target; carries diagnostics."""


class BudgetError(PhysicsError):
    """Photon budget too large to simulate photon-by-photon statistics."""
