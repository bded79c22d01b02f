"""Experiment configuration: TOML documents -> validated ExperimentConfig.

A config is a flat TOML document plus one or more [[axis]] tables (a single
axis may instead be written with its keys at the top level).  Complex
numbers are accepted as plain numbers, "a+bi" strings ("2i", "1.5+0.5j"),
or {re, im} tables; angles accept plain radians or "pi" fractions such as
"pi/3" or "2pi/5".
"""

from __future__ import annotations

import re
import sys
from dataclasses import dataclass, field

from .errors import ConfigurationError
from .graphs import GraphSpec, expand_pattern, validate_pure_decay

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

__all__ = ["ExperimentConfig", "parse_config", "config_from_mapping", "config_to_mapping",
           "parse_complex", "parse_angle", "KINDS", "FORMATS"]

KINDS = ("spectrum", "modes", "sweep", "rotate", "fold", "compare", "validate")
FORMATS = ("csv", "json")
SOURCES = ("numeric", "analytic")

_TOP_KEYS = {
    "kind", "criterion", "format", "output", "source", "phi", "sweep", "windings",
    "tie_tol", "match_tol", "solver_tol", "dedup_tol", "pairing_tol",
    "allow_invalid", "axis",
}
_AXIS_KEYS = {"sites", "pattern", "t_forward", "t_backward", "gauge", "connectivity"}
_SWEEP_KEYS = {"start", "stop", "step"}


def parse_complex(value, key: str) -> complex:
    """Accept a number, an "a+bi" string, or a {re, im} table."""
    if isinstance(value, bool):
        raise ConfigurationError(f"{key}: expected a complex number, got a boolean")
    if isinstance(value, (int, float)):
        return complex(value)
    if isinstance(value, dict):
        unknown = set(value) - {"re", "im"}
        if unknown:
            raise ConfigurationError(f"{key}: unknown complex fields {sorted(unknown)}")
        try:
            return complex(float(value.get("re", 0.0)), float(value.get("im", 0.0)))
        except (TypeError, ValueError):
            raise ConfigurationError(f"{key}: re/im must be numbers") from None
    if isinstance(value, str):
        text = value.strip().lower().replace(" ", "").replace("i", "j")
        try:
            return complex(text)
        except ValueError:
            raise ConfigurationError(f"{key}: cannot parse complex number {value!r}") from None
    raise ConfigurationError(f"{key}: cannot parse complex number {value!r}")


_PI_FORM = re.compile(
    r"^(?P<sign>[+-]?)(?P<coeff>\d+(\.\d+)?)?\*?pi(/(?P<div>\d+(\.\d+)?))?$"
)


def parse_angle(value, key: str) -> float:
    """Radians as a number or a pi fraction string like "pi/3" or "2pi/5"."""
    if isinstance(value, (int, float)) and not isinstance(value, bool):
        return float(value)
    if isinstance(value, str):
        m = _PI_FORM.match(value.strip().lower().replace(" ", ""))
        if m:
            import math

            coeff = float(m.group("coeff") or 1.0)
            div = float(m.group("div") or 1.0)
            sign = -1.0 if m.group("sign") == "-" else 1.0
            return sign * coeff * math.pi / div
        try:
            return float(value)
        except ValueError:
            raise ConfigurationError(f"{key}: cannot parse angle {value!r}") from None
    raise ConfigurationError(f"{key}: cannot parse angle {value!r}")


def _positive(value, key: str) -> float:
    try:
        out = float(value)
    except (TypeError, ValueError):
        raise ConfigurationError(f"{key}: expected a number, got {value!r}") from None
    if out <= 0:
        raise ConfigurationError(f"{key}: tolerance must be positive, got {out}")
    return out


@dataclass(frozen=True)
class ExperimentConfig:
    """A fully validated experiment: axes plus kind-specific knobs."""

    kind: str
    axes: tuple[GraphSpec, ...]
    criterion: str = "max_im"
    tie_tol: float = 1e-8
    match_tol: float = 1e-9
    solver_tol: float = 1e-9
    pairing_tol: float = 1e-10
    dedup_tol: float | None = None
    phi: float = 0.0
    sweep_sites: tuple[int, ...] = ()
    emit_format: str = "csv"
    output: str | None = None
    source: str = "numeric"
    windings: tuple[int, ...] = ()
    allow_invalid: bool = False


def _axis_from_mapping(mapping, where: str, allow_invalid: bool) -> GraphSpec:
    unknown = set(mapping) - _AXIS_KEYS
    if unknown:
        raise ConfigurationError(f"{where}: unknown keys {sorted(unknown)}")
    for required in ("sites", "t_forward", "t_backward"):
        if required not in mapping:
            raise ConfigurationError(f"{where}: missing required key '{required}'")
    sites = mapping["sites"]
    if not isinstance(sites, int) or isinstance(sites, bool):
        raise ConfigurationError(f"{where}: sites must be an integer, got {sites!r}")
    pattern = str(mapping.get("pattern", "fcg")).lower()
    gauge = mapping.get("gauge", 0)
    if not isinstance(gauge, int) or isinstance(gauge, bool):
        raise ConfigurationError(f"{where}: gauge must be an integer, got {gauge!r}")
    connectivity = mapping.get("connectivity")
    if connectivity is not None:
        if pattern != "custom":
            raise ConfigurationError(f"{where}: connectivity only applies to pattern='custom'")
        connectivity = tuple(connectivity)
    spec = GraphSpec(
        sites=sites,
        pattern=pattern,
        t_fwd=parse_complex(mapping["t_forward"], f"{where}.t_forward"),
        t_bwd=parse_complex(mapping["t_backward"], f"{where}.t_backward"),
        gauge=gauge,
        connectivity=connectivity,
    )
    if not allow_invalid:
        report = validate_pure_decay(spec.connectivity_vector)
        if not report.valid:
            raise ConfigurationError(
                f"{where}: connectivity breaks the pure-decay rule a_d = a_(N-d) at "
                f"distances {report.violations}; set allow_invalid = true to explore anyway"
            )
    return spec


def config_from_mapping(mapping) -> ExperimentConfig:
    """Validate a parsed TOML mapping into an ExperimentConfig."""
    if not isinstance(mapping, dict):
        raise ConfigurationError(f"config must be a table, got {type(mapping).__name__}")
    inline_axis = set(mapping) & _AXIS_KEYS
    unknown = set(mapping) - _TOP_KEYS - _AXIS_KEYS
    if unknown:
        raise ConfigurationError(f"unknown config keys {sorted(unknown)}")

    kind = str(mapping.get("kind", "spectrum")).lower()
    if kind not in KINDS:
        raise ConfigurationError(f"unknown kind {kind!r}; expected one of {KINDS}")
    criterion = str(mapping.get("criterion", "max_im")).lower()
    if criterion not in ("max_im", "max_abs"):
        raise ConfigurationError(f"unknown criterion {criterion!r}; use max_im or max_abs")
    emit_format = str(mapping.get("format", "csv")).lower()
    if emit_format not in FORMATS:
        raise ConfigurationError(f"unknown format {emit_format!r}; expected one of {FORMATS}")
    source = str(mapping.get("source", "numeric")).lower()
    if source not in SOURCES:
        raise ConfigurationError(f"unknown source {source!r}; expected one of {SOURCES}")
    allow_invalid = bool(mapping.get("allow_invalid", False))

    axes_tables = mapping.get("axis")
    if axes_tables is not None and inline_axis:
        raise ConfigurationError("give axis keys either inline or as [[axis]] tables, not both")
    if axes_tables is None:
        if not inline_axis:
            raise ConfigurationError("config defines no axis (sites/t_forward/t_backward)")
        axes_tables = [{k: mapping[k] for k in inline_axis}]
    if not isinstance(axes_tables, list) or not axes_tables:
        raise ConfigurationError("axis must be a non-empty list of tables")
    axes = tuple(
        _axis_from_mapping(ax, f"axis[{i}]", allow_invalid)
        for i, ax in enumerate(axes_tables)
    )

    sweep_sites: tuple[int, ...] = ()
    if "sweep" in mapping:
        sweep = mapping["sweep"]
        if isinstance(sweep, dict):
            unknown = set(sweep) - _SWEEP_KEYS
            if unknown:
                raise ConfigurationError(f"sweep: unknown keys {sorted(unknown)}")
            try:
                start, stop = int(sweep["start"]), int(sweep["stop"])
                step = int(sweep.get("step", 1))
            except (KeyError, TypeError, ValueError):
                raise ConfigurationError("sweep needs integer start/stop (and optional step)") from None
            if step <= 0 or stop < start:
                raise ConfigurationError("sweep needs step > 0 and stop >= start")
            sweep_sites = tuple(range(start, stop + 1, step))
        elif isinstance(sweep, list):
            sweep_sites = tuple(int(n) for n in sweep)
        else:
            raise ConfigurationError("sweep must be a {start, stop, step} table or a list")

    windings = mapping.get("windings", ())
    if windings and not all(isinstance(w, int) and not isinstance(w, bool) for w in windings):
        raise ConfigurationError("windings must be a list of integers")

    cfg = ExperimentConfig(
        kind=kind,
        axes=axes,
        criterion=criterion,
        tie_tol=_positive(mapping.get("tie_tol", 1e-8), "tie_tol"),
        match_tol=_positive(mapping.get("match_tol", 1e-9), "match_tol"),
        solver_tol=_positive(mapping.get("solver_tol", 1e-9), "solver_tol"),
        pairing_tol=_positive(mapping.get("pairing_tol", 1e-10), "pairing_tol"),
        dedup_tol=(
            _positive(mapping["dedup_tol"], "dedup_tol") if "dedup_tol" in mapping else None
        ),
        phi=parse_angle(mapping.get("phi", 0.0), "phi"),
        sweep_sites=sweep_sites,
        emit_format=emit_format,
        output=str(mapping["output"]) if "output" in mapping else None,
        source=source,
        windings=tuple(int(w) for w in windings),
        allow_invalid=allow_invalid,
    )
    _check_kind_requirements(cfg)
    return cfg


def _check_kind_requirements(cfg: ExperimentConfig):
    if cfg.kind == "sweep" and not cfg.sweep_sites:
        raise ConfigurationError("kind='sweep' needs a sweep = {start, stop, step} range")
    if cfg.kind == "fold" and len(cfg.axes) < 2:
        raise ConfigurationError("kind='fold' needs at least two [[axis]] tables")
    if cfg.kind != "fold" and len(cfg.axes) != 1:
        raise ConfigurationError(f"kind='{cfg.kind}' takes exactly one axis")
    for w in cfg.windings:
        if not 0 <= w < cfg.axes[0].sites:
            raise ConfigurationError(f"windings entry {w} out of range [0, {cfg.axes[0].sites - 1}]")


def parse_config(text: str, overrides: dict | None = None) -> ExperimentConfig:
    """Parse and validate a TOML experiment document.

    `overrides` entries replace top-level keys before validation (used by the
    CLI so flags beat the file, and so `validate` can inspect broken graphs).
    """
    try:
        mapping = tomllib.loads(text)
    except tomllib.TOMLDecodeError as exc:
        raise ConfigurationError(f"config is not valid TOML: {exc}") from exc
    if overrides:
        mapping.update(overrides)
    return config_from_mapping(mapping)


def _complex_to_mapping(z: complex):
    return {"re": z.real, "im": z.imag}


def config_to_mapping(cfg: ExperimentConfig) -> dict:
    """Canonical plain mapping (stable key order) embedding the full config."""
    out = {
        "kind": cfg.kind,
        "criterion": cfg.criterion,
        "format": cfg.emit_format,
        "source": cfg.source,
        "tie_tol": cfg.tie_tol,
        "match_tol": cfg.match_tol,
        "solver_tol": cfg.solver_tol,
        "pairing_tol": cfg.pairing_tol,
    }
    if cfg.dedup_tol is not None:
        out["dedup_tol"] = cfg.dedup_tol
    if cfg.phi:
        out["phi"] = cfg.phi
    if cfg.sweep_sites:
        out["sweep"] = list(cfg.sweep_sites)
    if cfg.windings:
        out["windings"] = list(cfg.windings)
    if cfg.output is not None:
        out["output"] = cfg.output
    if cfg.allow_invalid:
        out["allow_invalid"] = True
    axes = []
    for spec in cfg.axes:
        ax = {
            "sites": spec.sites,
            "pattern": spec.pattern.value,
            "t_forward": _complex_to_mapping(spec.t_fwd),
            "t_backward": _complex_to_mapping(spec.t_bwd),
            "gauge": spec.gauge,
        }
        if spec.connectivity is not None:
            ax["connectivity"] = list(spec.connectivity)
        axes.append(ax)
    out["axis"] = axes
    return out
