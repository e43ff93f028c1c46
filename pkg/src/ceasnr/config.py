"""YAML run configuration: parsing with field diagnostics, and full echo.

Layout (every key optional; omitted keys take the defaults shown)::

    source:
      frequency_hz: 50.0
      amplitude_volt: 0.001
      phase_rad: 0.0
    amplifier:
      voltage_gain: 100.0
    noise:
      resistance_ohm: 10000.0
      temperature_kelvin: 300.0
      shot_enabled: false
      shot_base_current_amp: 1.0e-05
      shot_transresistance_ohm: 1000.0
    filter:
      family: butterworth        # butterworth | chebyshev1 | chebyshev2 | elliptic
      order: 1
      cutoff_hz: 600.0
      passband_ripple_db: 0.5
      stopband_atten_db: 30.0
    run:
      sample_rate_hz: 100000.0
      duration_s: 2.0
      seed: 0
      trials: 32
      transient: discard         # discard | include
      min_periods: 50
    sweep:                       # read by the sweep and compare commands
      axis: order                # order | cutoff | family | transient
      values: [1, 2, 3, 4]

JSON is valid YAML, so a run manifest (whose ``config_echo`` holds this
structure) can be passed back as a configuration.
"""

import copy

import yaml

from .amp import AmplifierSpec, ShotNoiseInjection, SourceSpec
from .experiments import SimulationConfig
from .filters import FilterFamily, FilterSpec
from .noise import ThermalNoiseSpec
from .snr import SnrMeasurementPolicy

DEFAULTS = {
    "source": {"frequency_hz": 50.0, "amplitude_volt": 1e-3, "phase_rad": 0.0},
    "amplifier": {"voltage_gain": 100.0},
    "noise": {
        "resistance_ohm": 10e3,
        "temperature_kelvin": 300.0,
        "shot_enabled": False,
        "shot_base_current_amp": 10e-6,
        "shot_transresistance_ohm": 1e3,
    },
    "filter": {
        "family": "butterworth",
        "order": 1,
        "cutoff_hz": 600.0,
        "passband_ripple_db": 0.5,
        "stopband_atten_db": 30.0,
    },
    "run": {
        "sample_rate_hz": 100e3,
        "duration_s": 2.0,
        "seed": 0,
        "trials": 32,
        "transient": "discard",
        "min_periods": 50,
    },
    "sweep": {"axis": None, "values": None},
}

_TYPES = {
    ("noise", "shot_enabled"): bool,
    ("filter", "family"): str,
    ("filter", "order"): int,
    ("run", "seed"): int,
    ("run", "trials"): int,
    ("run", "min_periods"): int,
    ("run", "transient"): str,
    ("sweep", "axis"): str,
    ("sweep", "values"): list,
}


class ConfigError(ValueError):
    """Invalid configuration; message names the field and, when known, the line."""


def _key_lines(text):
    """Map ``(section, key)`` to 1-based line numbers in a YAML document."""
    lines = {}
    try:
        root = yaml.compose(text)
    except yaml.YAMLError:
        return lines
    if not isinstance(root, yaml.MappingNode):
        return lines
    for knode, vnode in root.value:
        lines[(knode.value,)] = knode.start_mark.line + 1
        if isinstance(vnode, yaml.MappingNode):
            for k2, _ in vnode.value:
                lines[(knode.value, k2.value)] = k2.start_mark.line + 1
    return lines


def _where(lines, *path):
    ln = lines.get(tuple(path))
    name = ".".join(path)
    return f"{name} (line {ln})" if ln else name


def _coerce(section, key, value, lines):
    want = _TYPES.get((section, key), float)
    if value is None and section == "sweep":
        return None
    where = _where(lines, section, key)
    if want is bool:
        if not isinstance(value, bool):
            raise ConfigError(f"{where}: expected true/false, got {value!r}")
        return value
    if want is int:
        if isinstance(value, bool) or not isinstance(value, (int, float)) or int(value) != value:
            raise ConfigError(f"{where}: expected an integer, got {value!r}")
        return int(value)
    if want is str:
        value = str(value)
        if (section, key) == ("run", "transient") and value not in ("discard", "include"):
            raise ConfigError(f"{where}: expected discard or include, got {value!r}")
        if (section, key) == ("filter", "family"):
            try:
                value = FilterFamily.parse(value).value
            except ValueError as exc:
                raise ConfigError(f"{where}: {exc}") from None
        return value
    if want is list:
        if isinstance(value, str):
            value = [v for v in value.split(",") if v.strip()]
        if not isinstance(value, list):
            raise ConfigError(f"{where}: expected a list, got {value!r}")
        return value
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        try:
            return float(value)
        except (TypeError, ValueError):
            raise ConfigError(f"{where}: expected a number, got {value!r}") from None
    return float(value)


def merge(data, lines=None):
    """Overlay user data on :data:`DEFAULTS`, validating keys and types."""
    lines = lines or {}
    if data is None:
        data = {}
    if not isinstance(data, dict):
        raise ConfigError("configuration must be a mapping of sections")
    if "config_echo" in data:
        data = data["config_echo"]
    out = copy.deepcopy(DEFAULTS)
    for section, body in data.items():
        if section not in DEFAULTS:
            raise ConfigError(f"{_where(lines, section)}: unknown section")
        if body is None:
            continue
        if not isinstance(body, dict):
            raise ConfigError(f"{_where(lines, section)}: expected a mapping")
        for key, value in body.items():
            if key not in DEFAULTS[section]:
                raise ConfigError(f"{_where(lines, section, key)}: unknown field")
            out[section][key] = _coerce(section, key, value, lines)
    return out


def load_text(text):
    """Parse YAML text; returns ``(resolved, key_lines)``."""
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        mark = getattr(exc, "problem_mark", None)
        where = f" at line {mark.line + 1}" if mark else ""
        raise ConfigError(f"config is not valid YAML{where}: {exc}") from None
    lines = _key_lines(text)
    return merge(data, lines), lines


def load_file(path):
    with open(path, encoding="utf-8") as fh:
        return load_text(fh.read())


def apply_override(resolved, assignment):
    """Apply ``section.key=value`` (value parsed as YAML) to a resolved dict."""
    if "=" not in assignment:
        raise ConfigError(f"override {assignment!r}: expected section.key=value")
    path, raw = assignment.split("=", 1)
    parts = path.strip().split(".")
    if len(parts) != 2:
        raise ConfigError(f"override {assignment!r}: expected section.key=value")
    section, key = parts
    if section not in DEFAULTS or key not in DEFAULTS[section]:
        raise ConfigError(f"{path}: unknown field")
    resolved = copy.deepcopy(resolved)
    resolved[section][key] = _coerce(section, key, yaml.safe_load(raw), {})
    return resolved


def build(resolved, lines=None):
    """Turn a resolved dict into a :class:`SimulationConfig`."""
    lines = lines or {}
    src, amp, nz, flt, run = (resolved[k] for k in ("source", "amplifier", "noise", "filter", "run"))

    def make(section, fn):
        try:
            return fn()
        except ValueError as exc:
            msg = str(exc)
            field = msg.split(":", 1)[0] if ":" in msg else ""
            key = field.split(".")[-1]
            target = "run" if key == "sample_rate_hz" else section
            where = _where(lines, target, key) if key in resolved.get(target, {}) else target
            raise ConfigError(f"{where}: {msg.split(':', 1)[-1].strip()}") from None

    source = make("source", lambda: SourceSpec(src["frequency_hz"], src["amplitude_volt"], src["phase_rad"]))
    amplifier = make("amplifier", lambda: AmplifierSpec(amp["voltage_gain"]))
    thermal = make("noise", lambda: ThermalNoiseSpec(nz["resistance_ohm"], nz["temperature_kelvin"]))
    shot = ShotNoiseInjection(nz["shot_base_current_amp"], nz["shot_transresistance_ohm"])
    fspec = make(
        "filter",
        lambda: FilterSpec(
            flt["family"],
            flt["order"],
            flt["cutoff_hz"],
            run["sample_rate_hz"],
            flt["passband_ripple_db"],
            flt["stopband_atten_db"],
        ),
    )
    policy = make("run", lambda: SnrMeasurementPolicy(run["transient"], run["min_periods"]))
    return make(
        "run",
        lambda: SimulationConfig(
            source=source,
            amplifier=amplifier,
            thermal=thermal,
            shot_enabled=nz["shot_enabled"],
            shot=shot,
            filter=fspec,
            sample_rate_hz=run["sample_rate_hz"],
            duration_s=run["duration_s"],
            seed=run["seed"],
            trials=run["trials"],
            policy=policy,
        ),
    )


def echo(config, sweep=None):
    """Fully resolved dict for ``config``, defaults included."""
    f = config.filter
    return {
        "source": {
            "frequency_hz": config.source.frequency_hz,
            "amplitude_volt": config.source.amplitude_volt,
            "phase_rad": config.source.phase_rad,
        },
        "amplifier": {"voltage_gain": config.amplifier.voltage_gain},
        "noise": {
            "resistance_ohm": config.thermal.resistance_ohm,
            "temperature_kelvin": config.thermal.temperature_kelvin,
            "shot_enabled": config.shot_enabled,
            "shot_base_current_amp": config.shot.base_current_amp,
            "shot_transresistance_ohm": config.shot.transresistance_ohm,
        },
        "filter": {
            "family": f.family.value,
            "order": f.order,
            "cutoff_hz": f.cutoff_hz,
            "passband_ripple_db": f.passband_ripple_db,
            "stopband_atten_db": f.stopband_atten_db,
        },
        "run": {
            "sample_rate_hz": config.sample_rate_hz,
            "duration_s": config.duration_s,
            "seed": config.seed,
            "trials": config.trials,
            "transient": config.policy.transient_mode.value,
            "min_periods": config.policy.min_periods,
        },
        "sweep": dict(sweep) if sweep else {"axis": None, "values": None},
    }
