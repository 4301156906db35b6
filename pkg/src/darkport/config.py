"""Detector configuration: physical parameters, validation, file parsing.

Config files are flat ``key = value`` text, one pair per line, ``#`` comments.
Keys mirror :class:`DetectorConfig` field names exactly; unknown keys are hard
errors. Every key has a documented default, so an empty file is valid.

Default values are representative Advanced-LIGO-class numbers (4 km arms,
1064 nm, 125 W input, recycling/arm-cavity transmissivities 0.014). They are
a documented choice, not a claim about any particular instrument.
"""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass

from .constants import wavenumber
from .errors import ConfigError


@dataclass(frozen=True)
class DetectorConfig:
    """All physical and optical parameters of one detector setup (SI units)."""

    arm_length_L: float = 4000.0            # m
    wavelength_lambda: float = 1.064e-6     # m
    power_recycle_T: float = 0.014          # recycling mirror transmissivity, in (0,1)
    arm_input_T_tilde: float = 0.014        # arm input mirror transmissivity, in (0,1)
    post_select_delta: float = 0.01         # t/r = 1 + delta, delta >= 0
    input_power: float = 125.0              # W
    integration_time_tau: float = 1.0       # s
    detection_efficiency: float = 0.9       # in (0,1]
    dc_arm_asymmetry_dl: float = 1.0e-11    # m, deliberate arm-length offset (DC comparator)
    dc_leak_intensity_Id: float = 1.0e-3    # W, leakage light (DC comparator)

    def __post_init__(self) -> None:
        _require(self.arm_length_L > 0.0, "arm_length_L must be > 0")
        _require(self.wavelength_lambda > 0.0, "wavelength_lambda must be > 0")
        _require(0.0 < self.power_recycle_T < 1.0, "power_recycle_T must be in (0,1)")
        _require(0.0 < self.arm_input_T_tilde < 1.0, "arm_input_T_tilde must be in (0,1)")
        _require(self.post_select_delta >= 0.0, "post_select_delta must be >= 0")
        _require(self.input_power > 0.0, "input_power must be > 0")
        _require(self.integration_time_tau > 0.0, "integration_time_tau must be > 0")
        _require(
            0.0 < self.detection_efficiency <= 1.0,
            "detection_efficiency must be in (0,1]",
        )
        _require(self.dc_arm_asymmetry_dl >= 0.0, "dc_arm_asymmetry_dl must be >= 0")
        _require(self.dc_leak_intensity_Id >= 0.0, "dc_leak_intensity_Id must be >= 0")
        for name, value in self.as_dict().items():
            _require(math.isfinite(value), f"{name} must be finite")

    @property
    def wavenumber_k(self) -> float:
        return wavenumber(self.wavelength_lambda)

    def as_dict(self) -> dict[str, float]:
        return dataclasses.asdict(self)

    def replace(self, **changes: float) -> "DetectorConfig":
        for key in changes:
            if key not in FIELD_NAMES:
                raise ConfigError(
                    f"unknown config key '{key}'; valid keys: {', '.join(FIELD_NAMES)}"
                )
        return dataclasses.replace(self, **changes)


FIELD_NAMES = tuple(f.name for f in dataclasses.fields(DetectorConfig))


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise ConfigError(message)


def _parse_value(key: str, raw: str) -> float:
    try:
        return float(raw)
    except ValueError as exc:
        raise ConfigError(f"config key '{key}': cannot parse '{raw}' as a number") from exc


def parse_config_text(text: str, source: str = "<config>") -> dict[str, float]:
    """Parse flat key=value text into a {field: value} dict (no validation)."""
    values: dict[str, float] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.split("#", 1)[0].strip()
        if not stripped:
            continue
        if "=" not in stripped:
            raise ConfigError(f"{source}:{lineno}: expected 'key = value', got '{stripped}'")
        key, _, raw = stripped.partition("=")
        key = key.strip()
        if key not in FIELD_NAMES:
            raise ConfigError(
                f"{source}:{lineno}: unknown config key '{key}'; "
                f"valid keys: {', '.join(FIELD_NAMES)}"
            )
        if key in values:
            raise ConfigError(f"{source}:{lineno}: duplicate config key '{key}'")
        values[key] = _parse_value(key, raw.strip())
    return values


def parse_overrides(pairs: list[str]) -> dict[str, float]:
    """Parse ``key=value`` override strings (CLI --set)."""
    values: dict[str, float] = {}
    for pair in pairs:
        key, sep, raw = pair.partition("=")
        key = key.strip()
        if not sep or not key:
            raise ConfigError(f"override '{pair}' is not of the form key=value")
        if key not in FIELD_NAMES:
            raise ConfigError(
                f"unknown config key '{key}'; valid keys: {', '.join(FIELD_NAMES)}"
            )
        values[key] = _parse_value(key, raw.strip())
    return values


def load_config(path: str | None, overrides: list[str] | None = None) -> DetectorConfig:
    """Build a validated DetectorConfig from a file plus overrides.

    File values replace documented defaults; overrides are applied last.
    """
    values: dict[str, float] = {}
    if path is not None:
        with open(path, "r", encoding="utf-8") as fh:
            values.update(parse_config_text(fh.read(), source=path))
    if overrides:
        values.update(parse_overrides(list(overrides)))
    return DetectorConfig(**values)
