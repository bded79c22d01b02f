"""Command-line front end: parse a config, run the pipeline, emit files.

Subcommands: validate, spectrum, modes, sweep, rotate, fold, compare.
Exit status: 0 success, 1 configuration/usage error, 2 numerical failure.
"""

from __future__ import annotations

import argparse
import dataclasses
import os
import sys

import numpy as np

from . import emit
from .analysis import dominance_report, gap_sweep, rotation_check, winding_number
from .analytic import full_analytic_spectrum
from .config import (
    ExperimentConfig,
    _check_kind_requirements,
    config_to_mapping,
    parse_config,
)
from .errors import ConfigurationError, SolverError, UsageError
from .folding import (
    assemble_dimensions,
    folded_spectrum,
    multimode_select,
    separable_mode,
)
from .graphs import assemble_hamiltonian, validate_pure_decay
from .solver import eigendecompose, match_spectra, residual

__all__ = ["run", "main"]


class _Parser(argparse.ArgumentParser):
    """argparse that reports usage problems as ConfigurationError (exit 1)."""

    def error(self, message):
        raise ConfigurationError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="gaugegraph", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in [
        ("validate", "check the pure-decay symmetry of every axis"),
        ("spectrum", "emit the eigenvalue spectrum of a single-axis config"),
        ("modes", "emit the spectrum plus per-mode eigenvector files"),
        ("sweep", "emit the dominance gap across a range of system sizes"),
        ("rotate", "rotate both hoppings by phi and check the spectrum follows"),
        ("fold", "emit the folded multi-axis spectrum and its census"),
        ("compare", "match the closed-form spectrum against the dense eigensolver"),
    ]:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("config", help="path to a TOML experiment config")
        p.add_argument("-o", "--output", help="output stem (default: config stem)")
        p.add_argument("--output-dir", default=None, help="directory for emitted files")
        p.add_argument("--format", choices=("csv", "json"), default=None)
        p.add_argument("--criterion", choices=("max_im", "max_abs"), default=None)
        p.add_argument("--source", choices=("numeric", "analytic"), default=None)
        p.add_argument("--tie-tol", type=float, default=None)
        p.add_argument("--match-tol", type=float, default=None)
        p.add_argument("--solver-tol", type=float, default=None)
        p.add_argument("--dedup-tol", type=float, default=None)
        p.add_argument("--pairing-tol", type=float, default=None)
        p.add_argument("--allow-invalid", action="store_true", default=None)
    return parser


def _load_config(args) -> ExperimentConfig:
    try:
        with open(args.config, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ConfigurationError(f"cannot read config {args.config!r}: {exc}") from exc
    # validation must reach the reporting stage even for broken graphs
    overrides = {"allow_invalid": True} if args.command == "validate" else None
    cfg = parse_config(text, overrides)
    overrides = {}
    for attr, key in [
        ("output", "output"), ("format", "emit_format"), ("criterion", "criterion"),
        ("source", "source"), ("tie_tol", "tie_tol"), ("match_tol", "match_tol"),
        ("solver_tol", "solver_tol"), ("dedup_tol", "dedup_tol"),
        ("pairing_tol", "pairing_tol"), ("allow_invalid", "allow_invalid"),
    ]:
        value = getattr(args, attr)
        if value is not None:
            overrides[key] = value
    if overrides:
        cfg = dataclasses.replace(cfg, **overrides)
    if cfg.kind != args.command:
        # configs may be reused across commands as long as required fields exist
        cfg = dataclasses.replace(cfg, kind=args.command)
        _check_kind_requirements(cfg)
    return cfg


def _stem(args, cfg) -> str:
    stem = cfg.output or os.path.splitext(os.path.basename(args.config))[0]
    out_dir = args.output_dir or "."
    return os.path.join(out_dir, stem)


# ── single-axis spectrum pipeline ─────────────────────────────────────────


def _axis_pipeline(cfg: ExperimentConfig, spec=None):
    """Assemble, solve both routes, match labels, rank dominance."""
    spec = spec or cfg.axes[0]
    H = assemble_hamiltonian(spec, allow_invalid=cfg.allow_invalid)
    hnorm = float(np.linalg.norm(H))
    analytic = full_analytic_spectrum(spec)
    numeric = eigendecompose(H, tol=cfg.solver_tol)
    match = match_spectra(analytic, numeric)
    by_winding = {i: j for i, j in match.assignment}

    values, vectors, residuals = [], [], []
    for w in range(spec.sites):
        if cfg.source == "numeric":
            pair = numeric.modes[by_winding[w]]
            values.append(pair.value)
            vectors.append(pair.vector)
            residuals.append(pair.residual)
        else:
            mode = analytic.modes[w]
            values.append(mode.value)
            vectors.append(mode.site_values)
            residuals.append(residual(H, mode))
    dom = dominance_report(
        np.array(values), cfg.criterion, cfg.tie_tol, scale=hnorm,
        labels=tuple(range(spec.sites)),
    )
    rows = [
        emit.spectrum_row(
            w,
            values[w],
            winding_number(vectors[w], radial=spec.decay_rate),
            residuals[w],
            w in dom.dominant_indices,
        )
        for w in range(spec.sites)
    ]
    return {
        "spec": spec, "H": H, "hnorm": hnorm, "analytic": analytic,
        "numeric": numeric, "match": match, "rows": rows, "dominance": dom,
        "vectors": vectors,
    }


def _emit_rows(cfg, stem, rows, extra_payload=None, vectors=None):
    written = []
    if cfg.emit_format == "csv":
        path = stem + ".csv"
        emit.write_bytes(path, emit.csv_bytes(emit.SPECTRUM_HEADER, rows))
        written.append(path)
        for w, vec in (vectors or {}).items():
            vpath = f"{stem}.mode{w}.csv"
            emit.write_bytes(vpath, emit.csv_bytes(emit.VECTOR_HEADER, emit.vector_rows(vec)))
            written.append(vpath)
        if extra_payload is not None:
            path = stem + ".json"
            emit.write_bytes(path, emit.json_bytes(extra_payload))
            written.append(path)
    else:
        payload = dict(extra_payload or {"config": config_to_mapping(cfg)})
        payload["rows"] = [emit.spectrum_row_json(r) for r in rows]
        if vectors:
            payload["vectors"] = {
                str(w): [emit.vector_row_json(r) for r in emit.vector_rows(vec)]
                for w, vec in vectors.items()
            }
        path = stem + ".json"
        emit.write_bytes(path, emit.json_bytes(payload))
        written.append(path)
    return written


# ── subcommand implementations ────────────────────────────────────────────


def _cmd_validate(args) -> int:
    cfg = _load_config(args)
    all_valid = True
    for i, spec in enumerate(cfg.axes):
        report = validate_pure_decay(spec.connectivity_vector)
        state = "valid" if report.valid else f"invalid at distances {report.violations}"
        print(f"axis[{i}] sites={spec.sites} pattern={spec.pattern.value}: {state}")
        all_valid &= report.valid
    return 0 if all_valid else 1


def _cmd_spectrum(args) -> int:
    cfg = _load_config(args)
    result = _axis_pipeline(cfg)
    stem = _stem(args, cfg)
    written = _emit_rows(cfg, stem, result["rows"])
    dom = result["dominance"]
    print(
        f"spectrum: sites={result['spec'].sites} pattern={result['spec'].pattern.value} "
        f"gauge={result['spec'].gauge} dominant={list(dom.dominant_indices)} "
        f"gap={dom.gap:.6g} -> {', '.join(written)}"
    )
    return 0


def _cmd_modes(args) -> int:
    cfg = _load_config(args)
    result = _axis_pipeline(cfg)
    selected = cfg.windings or tuple(result["dominance"].dominant_indices)
    vectors = {w: result["vectors"][w] for w in selected}
    stem = _stem(args, cfg)
    written = _emit_rows(cfg, stem, result["rows"], vectors=vectors)
    print(
        f"modes: sites={result['spec'].sites} emitted windings={sorted(vectors)} "
        f"-> {', '.join(written)}"
    )
    return 0


def _cmd_sweep(args) -> int:
    cfg = _load_config(args)
    points = gap_sweep(cfg.axes[0], cfg.sweep_sites, cfg.criterion, cfg.tie_tol)
    stem = _stem(args, cfg)
    if cfg.emit_format == "csv":
        path = stem + ".csv"
        emit.write_bytes(path, emit.csv_bytes(emit.SWEEP_HEADER, points))
    else:
        path = stem + ".json"
        payload = {
            "config": config_to_mapping(cfg),
            "points": [{"sites": n, "gap": g} for n, g in points],
        }
        emit.write_bytes(path, emit.json_bytes(payload))
    gaps = [g for _, g in points]
    monotone = all(b > a for a, b in zip(gaps, gaps[1:]))
    print(f"sweep: {len(points)} sizes, gap {gaps[0]:.6g} -> {gaps[-1]:.6g}, "
          f"strictly increasing={monotone} -> {path}")
    return 0


def _cmd_rotate(args) -> int:
    cfg = _load_config(args)
    spec = cfg.axes[0]
    report = rotation_check(spec, cfg.phi, cfg.criterion, cfg.tie_tol)
    factor = np.exp(1j * cfg.phi)
    rotated_cfg = dataclasses.replace(
        cfg,
        axes=(spec.replace(t_fwd=spec.t_fwd * factor, t_bwd=spec.t_bwd * factor),),
    )
    result = _axis_pipeline(rotated_cfg)
    values = np.array([complex(r[1], r[2]) for r in result["rows"]])
    # emphasize by the de-rotated metric so the same physical mode stays marked
    derot = dominance_report(
        values * np.conj(factor), cfg.criterion, cfg.tie_tol,
        scale=result["hnorm"], labels=tuple(range(spec.sites)),
    )
    rows = [
        emit.spectrum_row(r[0], values[i], r[4], r[5], r[0] in derot.dominant_indices)
        for i, r in enumerate(result["rows"])
    ]
    payload = {
        "config": config_to_mapping(cfg),
        "phi": report.phi,
        "max_deviation": report.max_deviation,
        "dominance_preserved": report.dominance_preserved,
    }
    stem = _stem(args, cfg)
    written = _emit_rows(cfg, stem, rows, extra_payload=payload)
    print(
        f"rotate: phi={report.phi:.6g} max_deviation={report.max_deviation:.3e} "
        f"dominance_preserved={report.dominance_preserved} -> {', '.join(written)}"
    )
    return 0


def _cmd_fold(args) -> int:
    cfg = _load_config(args)
    specs = list(cfg.axes)
    report = folded_spectrum(specs, cfg.dedup_tol)
    select = multimode_select(specs, cfg.criterion, cfg.tie_tol)
    H = assemble_dimensions(specs, cfg.allow_invalid)
    hnorm = float(np.linalg.norm(H))
    sizes = [s.sites for s in specs]
    dominant = set(select.dominant_indices)

    rows = []
    for labels, energy in report.pair_energies:
        vec = separable_mode(specs, labels)
        flat = int(np.ravel_multi_index(labels, sizes))
        rows.append(
            emit.spectrum_row(flat, energy, labels[0], residual(H, energy, vec),
                              labels in dominant)
        )
    payload = {
        "config": config_to_mapping(cfg),
        "sizes": sizes,
        "pair_count": len(report.pair_energies),
        "distinct_count": report.distinct_count,
        "lcm_sites": report.lcm_sites,
        "dedup_tol": report.dedup_tol,
        "hnorm": hnorm,
        "dominant": [list(lab) for lab in select.dominant_indices],
        "gap": select.gap,
        "multiplicities": [
            {"re": e.real, "im": e.imag, "count": c} for e, c in report.multiplicities
        ],
    }
    stem = _stem(args, cfg)
    written = _emit_rows(cfg, stem, rows, extra_payload=payload)
    print(
        f"fold: sizes={sizes} pairs={len(rows)} distinct={report.distinct_count} "
        f"lcm={report.lcm_sites} dominant={len(select.dominant_indices)} -> {', '.join(written)}"
    )
    return 0


def _cmd_compare(args) -> int:
    cfg = _load_config(args)
    spec = cfg.axes[0]
    H = assemble_hamiltonian(spec, allow_invalid=cfg.allow_invalid)
    hnorm = float(np.linalg.norm(H))
    analytic = full_analytic_spectrum(spec)
    numeric = eigendecompose(H, tol=cfg.solver_tol)
    match = match_spectra(analytic, numeric)
    max_res = max(residual(H, mode) for mode in analytic.modes)
    passed = match.max_distance <= cfg.match_tol * hnorm
    payload = {
        "config": config_to_mapping(cfg),
        "sites": spec.sites,
        "hnorm": hnorm,
        "max_distance": match.max_distance,
        "mean_distance": match.mean_distance,
        "max_analytic_residual": max_res,
        "match_tol": cfg.match_tol,
        "passed": passed,
    }
    stem = _stem(args, cfg)
    path = stem + ".json"
    emit.write_bytes(path, emit.json_bytes(payload))
    print(
        f"compare: sites={spec.sites} max_distance={match.max_distance:.3e} "
        f"(tol {cfg.match_tol:.1e}*{hnorm:.3g}) passed={passed} -> {path}"
    )
    if not passed:
        raise SolverError(
            f"analytic and numeric spectra disagree: {match.max_distance:.3e} > "
            f"{cfg.match_tol:.3e} * {hnorm:.6g}"
        )
    return 0


_COMMANDS = {
    "validate": _cmd_validate,
    "spectrum": _cmd_spectrum,
    "modes": _cmd_modes,
    "sweep": _cmd_sweep,
    "rotate": _cmd_rotate,
    "fold": _cmd_fold,
    "compare": _cmd_compare,
}


def run(argv=None) -> int:
    """Execute one CLI invocation; returns the process exit status."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except (ConfigurationError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 1
    except (SolverError, np.linalg.LinAlgError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())
