"""Command-line front end.

Every subcommand builds a flat experiment config, validates it, runs it and
writes ``report.json`` plus CSV tables and SVG plots into the output
directory (``--out``, else ``$TRIVOLTERRA_OUT``, else ``./trivolterra-out``).

Exit codes: 0 all verdicts pass, 1 a verdict failed, 2 invalid config,
3 the computation itself failed.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .discretize import (
    Grid,
    GridFn,
    build_J,
    build_Q,
    build_R,
    build_S,
    build_T,
    build_V,
)
from .errors import DomainError, ResolutionError, TrivolterraError
from .friedrichs import (
    build_A,
    build_A_two_param,
    build_B,
    compose_two_param,
    conjugate_A,
    conjugate_B,
    relative_frobenius,
    spectrum_distance,
)
from .report import svg_plot, write_csv, write_json
from .specfun import EULER_GAMMA, KernelParams, asymptotic_E, eval_E
from .spectral import hs_trace_probe, krylov_completeness_probe, unit_circle_probe
from .symbols import VARIANTS, symbol_asymptotics
from .verify import check_left_inverse_R, check_semigroup_J, check_semigroup_V, check_strong_identity_limit
from .waveops import WaveConfig, wave_limit_run

OUT_ENV = "TRIVOLTERRA_OUT"

EXIT_OK, EXIT_FAIL, EXIT_CONFIG, EXIT_COMPUTE = 0, 1, 2, 3


class ConfigError(ValueError):
    pass


def parse_complex(v) -> complex:
    """Accept ``0.5``, ``0.5i``, ``1+1i``, ``1-1j``, ``[re, im]`` or ``{"re":..,"im":..}``."""
    if isinstance(v, (list, tuple)) and len(v) == 2:
        return complex(float(v[0]), float(v[1]))
    if isinstance(v, dict):
        return complex(float(v.get("re", 0.0)), float(v.get("im", 0.0)))
    if isinstance(v, (int, float, complex)):
        return complex(v)
    s = str(v).strip().replace(" ", "").replace("i", "j")
    if s in ("j", "+j", "-j"):
        s = s.replace("j", "1j")
    try:
        return complex(s)
    except ValueError as exc:
        raise ConfigError(f"cannot read {v!r} as a complex number") from exc


def _ints(v) -> list[int]:
    if isinstance(v, str):
        v = [p for p in v.split(",") if p]
    return [int(p) for p in v]


def _floats(v) -> list[float]:
    if isinstance(v, str):
        v = [p for p in v.split(",") if p]
    return [float(p) for p in v]


def _cjson(z: complex) -> list[float]:
    z = complex(z)
    return [z.real, z.imag]


# ----------------------------------------------------------------- defaults

DEFAULTS: dict[str, dict] = {
    "kernel": {"beta": 1.0, "C": EULER_GAMMA, "omega": 0.5, "x": [1e-2, 1e-4, 1e-6, 1e-9, 1e-12]},
    "build-op": {"op": "V", "beta": 0.5, "C": EULER_GAMMA, "omega": 0.5, "n": 64},
    "semigroup": {"family": "V", "alpha": 0.5, "beta": 0.5, "C": EULER_GAMMA, "omega": 0.5, "n": [64, 128, 256, 512]},
    "left-inverse": {"phi": "x", "C": EULER_GAMMA, "omega": 0.5, "n": [64, 128, 256, 512]},
    "strong-limit": {"betas": [0.5, 0.1, 0.02], "ms": [1, 2, 3], "C": EULER_GAMMA, "omega": 0.5, "n": 256},
    "symbol": {"beta": 0.5, "omega": 0.5, "variant": "weighted", "lambdas": None},
    "friedrichs": {"model": "A", "alpha": 0.5j, "beta": 0.5, "C": EULER_GAMMA, "omega": 0.5, "n": [64, 128, 256, 512]},
    "spectral": {"op": "T", "probe": "hs", "beta": 0.5, "omega": 0.5, "n": [128, 256, 512], "z": 1.0, "k": 0, "M": [100, 1000, 10000]},
    "wave": {"model": "B", "alpha": 0.5j, "n": 1024, "omega": 0.5, "t": [10.0, 100.0, 1000.0], "renorm": "power", "sign": 1, "direction": 1},
}

_COMPLEX_KEYS = {"beta", "alpha", "C", "z"}


def resolve_config(raw: dict) -> dict:
    """Merge with defaults, coerce types and check preconditions; raises ``ConfigError``."""
    if not isinstance(raw, dict):
        raise ConfigError("config must be a JSON object")
    kind = raw.get("experiment")
    if kind not in DEFAULTS:
        raise ConfigError(f"experiment must be one of {sorted(DEFAULTS)}, got {kind!r}")
    unknown = set(raw) - set(DEFAULTS[kind]) - {"experiment", "output_dir"}
    if unknown:
        raise ConfigError(f"unknown keys for {kind}: {sorted(unknown)}")
    cfg = dict(DEFAULTS[kind])
    cfg.update({k: v for k, v in raw.items() if v is not None})
    cfg["experiment"] = kind
    try:
        for key in _COMPLEX_KEYS & set(cfg):
            cfg[key] = parse_complex(cfg[key])
        cfg["omega"] = float(cfg["omega"])
        if kind in ("build-op", "wave", "strong-limit"):
            cfg["n"] = int(cfg["n"])
        elif "n" in cfg:
            cfg["n"] = _ints(cfg["n"] if isinstance(cfg["n"], (list, tuple, str)) else [cfg["n"]])
        for key in ("x", "t", "betas", "M", "ms"):
            if key in cfg and cfg[key] is not None:
                cfg[key] = _floats(cfg[key]) if key in ("x", "t", "betas") else _ints(cfg[key])
        if kind == "symbol" and cfg["lambdas"] is not None:
            cfg["lambdas"] = _floats(cfg["lambdas"])
    except (TypeError, ValueError) as exc:
        raise ConfigError(str(exc)) from exc

    if not 0.0 < cfg["omega"] < 1.0:
        raise ConfigError(f"omega must satisfy 0 < omega < 1 (the kernel needs |ln x| > 0 on the interval); got {cfg['omega']}")
    if "C" in cfg and cfg["C"].real - math.log(cfg["omega"]) <= 0:
        raise ConfigError("Re(C) - ln(omega) must be positive")
    _validate(kind, cfg)
    return cfg


def _validate(kind: str, cfg: dict) -> None:
    if kind == "kernel":
        if cfg["beta"].real <= 0:
            raise ConfigError("kernel needs Re(beta) > 0")
        if any(not 0 < x <= cfg["omega"] for x in cfg["x"]):
            raise ConfigError("every x must lie in (0, omega]")
    elif kind == "build-op":
        if cfg["op"] not in ("V", "J", "S", "T", "R", "Q", "A", "B"):
            raise ConfigError(f"unknown operator {cfg['op']!r}")
    elif kind == "semigroup":
        if cfg["family"] not in ("V", "J"):
            raise ConfigError("family must be V or J")
        if cfg["alpha"].real <= 0 or cfg["beta"].real <= 0:
            raise ConfigError("semigroup check needs Re(alpha), Re(beta) > 0")
    elif kind == "left-inverse":
        if cfg["phi"] not in _PHI:
            raise ConfigError(f"phi must be one of {sorted(_PHI)}")
    elif kind == "strong-limit":
        b = cfg["betas"]
        if any(x <= 0 for x in b) or any(b[i + 1] >= b[i] for i in range(len(b) - 1)):
            raise ConfigError("betas must be positive and strictly decreasing")
    elif kind == "symbol":
        if cfg["variant"] not in VARIANTS:
            raise ConfigError(f"variant must be one of {VARIANTS}")
    elif kind == "friedrichs":
        if cfg["model"] not in ("A", "B", "A2"):
            raise ConfigError("model must be A, B or A2")
        if cfg["model"] in ("A", "B") and (cfg["alpha"].real != 0 or cfg["alpha"] == 0):
            raise ConfigError("models A and B need purely imaginary non-zero alpha")
        if cfg["model"] == "A2" and (cfg["alpha"].real <= 0 or cfg["beta"].real <= 0):
            raise ConfigError("model A2 needs Re(alpha), Re(beta) > 0")
    elif kind == "spectral":
        if cfg["probe"] not in ("hs", "circle", "krylov"):
            raise ConfigError("probe must be hs, circle or krylov")
        if cfg["probe"] == "hs" and (cfg["op"] != "T" or cfg["beta"].imag != 0 or cfg["beta"].real <= 0):
            raise ConfigError("hs probe runs on T with real beta > 0")
        if cfg["probe"] == "circle" and (cfg["op"] not in ("S", "V") or cfg["beta"].real != 0):
            raise ConfigError("circle probe runs on S or V with purely imaginary beta")
        if cfg["probe"] == "krylov":
            n = cfg["n"][0] if isinstance(cfg["n"], list) else cfg["n"]
            if n > 64:
                raise ConfigError("Krylov probe is limited to n <= 64")
            if not 0 <= int(cfg["k"]) <= n:
                raise ConfigError("k must lie in [0, n]")
    elif kind == "wave":
        if cfg["model"] not in ("A", "B"):
            raise ConfigError("model must be A or B")
        try:
            WaveConfig(cfg["model"], cfg["alpha"], Grid(cfg["omega"], cfg["n"]), tuple(cfg["t"]),
                       cfg["renorm"], int(cfg["sign"]), int(cfg["direction"]))
        except ResolutionError as exc:
            raise ConfigError(f"resolution error: {exc}") from exc
        except DomainError as exc:
            raise ConfigError(str(exc)) from exc


_PHI = {
    "one": lambda x: np.ones_like(x),
    "x": lambda x: x,
    "x2": lambda x: x**2,
}


# ----------------------------------------------------------------- runners


class Result:
    def __init__(self) -> None:
        self.verdicts: dict[str, bool] = {}
        self.tables: dict[str, list[dict]] = {}
        self.plots: dict[str, str] = {}
        self.summary: dict = {}


def _run_kernel(cfg: dict) -> Result:
    r = Result()
    params = KernelParams(cfg["beta"], cfg["C"], cfg["omega"])
    rows = []
    for x in cfg["x"]:
        e = eval_E(params, x)
        row = {"x": x, "e": e}
        if x < 1:
            a = asymptotic_E(params, x)
            row.update({"asymptotic": a, "ratio": e / a})
        rows.append(row)
    r.tables["kernel"] = rows
    r.verdicts["finite"] = all(np.isfinite(row["e"]) for row in rows)
    return r


def _build_op(cfg: dict):
    g = Grid(cfg["omega"], cfg["n"])
    op, beta = cfg["op"], cfg["beta"]
    if op == "V":
        return build_V(g, KernelParams(beta, cfg["C"], cfg["omega"]))
    if op == "J":
        return build_J(g, beta)
    if op == "S":
        return build_S(g, beta)
    if op == "T":
        return build_T(g, beta.real)
    if op == "R":
        return build_R(g)
    if op == "Q":
        return build_Q(g)
    if op == "A":
        return build_A(beta, g, C=cfg["C"]).base
    return build_B(beta, g).base


def _run_build_op(cfg: dict) -> Result:
    r = Result()
    op = _build_op(cfg)
    m = op.matrix
    r.tables["matrix"] = [{"i": i, "j": j, "value": m[i, j]} for i in range(op.n) for j in range(i + 1)]
    r.summary["spec"] = op.spec.as_dict()
    r.summary["kind"] = op.kind
    r.verdicts["lower_triangular"] = op.is_lower_triangular()
    return r


def _record_plot(name: str, records: dict) -> str:
    series = {k: (rec.sweep, rec.residuals) for k, rec in records.items()}
    return svg_plot(series, title=name, xlabel="n", ylabel="residual")


def _run_semigroup(cfg: dict) -> Result:
    r = Result()
    if cfg["family"] == "V":
        rec = check_semigroup_V(cfg["alpha"], cfg["beta"], cfg["C"], cfg["omega"], cfg["n"])
        recs = {"operator": rec}
    else:
        op, fn = check_semigroup_J(cfg["alpha"], cfg["beta"], cfg["omega"], cfg["n"])
        recs = {"operator": op, "beta_integral": fn}
    for key, rec in recs.items():
        r.tables[key] = rec.rows()
        r.verdicts[key] = rec.verdict
        r.summary[key] = {"order": rec.order, "log_order": rec.log_order, "ratios": rec.ratios}
    r.plots["residuals"] = _record_plot("semigroup residual", recs)
    return r


def _run_left_inverse(cfg: dict) -> Result:
    r = Result()
    rec = check_left_inverse_R(_PHI[cfg["phi"]], cfg["C"], cfg["omega"], cfg["n"])
    r.tables["residuals"] = rec.rows()
    r.verdicts["decay"] = rec.verdict
    r.summary["ratios"] = rec.ratios
    r.plots["residuals"] = _record_plot("left inverse residual", {"phi=" + cfg["phi"]: rec})
    return r


def _run_strong_limit(cfg: dict) -> Result:
    r = Result()
    rep = check_strong_identity_limit(cfg["betas"], cfg["ms"], cfg["C"], cfg["omega"], cfg["n"])
    rows = []
    for m in rep.ms:
        for b, dev in zip(rep.betas, rep.identity_deviation[m]):
            rows.append({"m": m, "beta": b, "identity_deviation": dev, "eigen_relation": rep.eigen_relation_residual[(m, b)]})
        r.verdicts[f"m{m}_decreasing"] = rep.records[m].verdict
    r.tables["strong_limit"] = rows
    return r


def _run_symbol(cfg: dict) -> Result:
    r = Result()
    rep = symbol_asymptotics(cfg["beta"], cfg["omega"], cfg["variant"], cfg["lambdas"])
    r.tables["symbol"] = rep.rows()
    r.verdicts["converging"] = rep.converging
    dev = np.abs(rep.ratio - 1)
    pos = rep.lam > 0
    r.plots["ratio"] = svg_plot(
        {"lambda>0": (rep.lam[pos], dev[pos]), "lambda<0": (-rep.lam[~pos], dev[~pos])},
        title="|ratio - 1|", xlabel="|lambda|", ylabel="deviation",
    )
    return r


def _run_friedrichs(cfg: dict) -> Result:
    r = Result()
    rows = []
    for n in cfg["n"]:
        g = Grid(cfg["omega"], n)
        if cfg["model"] == "A2":
            k = build_A_two_param(cfg["alpha"], cfg["beta"], g, C=cfg["C"])
            c = compose_two_param(cfg["alpha"], cfg["beta"], g, C=cfg["C"])
            rows.append({"n": n, "kernel_vs_composed": relative_frobenius(k.matrix, c.matrix)})
        else:
            if cfg["model"] == "A":
                k, c = build_A(cfg["alpha"], g, C=cfg["C"]), conjugate_A(cfg["alpha"], g, C=cfg["C"])
            else:
                k, c = build_B(cfg["alpha"], g), conjugate_B(cfg["alpha"], g)
            rows.append({
                "n": n,
                "kernel_vs_conjugation": relative_frobenius(k.matrix, c.matrix),
                "hausdorff_kernel": spectrum_distance(k),
                "hausdorff_conjugation": spectrum_distance(c),
            })
    r.tables["friedrichs"] = rows
    key = "kernel_vs_composed" if cfg["model"] == "A2" else "kernel_vs_conjugation"
    vals = [row[key] for row in rows]
    r.verdicts[key + "_decay_1.4"] = all(a >= 1.4 * b for a, b in zip(vals, vals[1:]))
    if cfg["model"] != "A2":
        hd = [row["hausdorff_kernel"] for row in rows]
        r.verdicts["hausdorff_decreasing"] = all(b < a for a, b in zip(hd, hd[1:]))
    r.plots["friedrichs"] = svg_plot(
        {k2: (cfg["n"], [row[k2] for row in rows]) for k2 in rows[0] if k2 != "n" and k2 != "hausdorff_conjugation"},
        title=f"model {cfg['model']}", xlabel="n", ylabel="distance",
    )
    return r


def _run_spectral(cfg: dict) -> Result:
    r = Result()
    ns = cfg["n"] if isinstance(cfg["n"], list) else [cfg["n"]]
    if cfg["probe"] == "hs":
        rep = hs_trace_probe(cfg["beta"].real, cfg["omega"], ns, cfg["M"])
        r.tables["singular_values"] = [{"j": j + 1, "s": s, "partial_sum": p} for j, (s, p) in enumerate(zip(rep.singular_values, rep.partial_sums))]
        r.tables["sweep"] = [{"n": n, "frobenius": f, "trace_sum": t} for n, f, t in zip(ns, rep.frobenius, rep.data["trace_sums"])]
        r.tables["diagonal_sums"] = [
            {"M": M, "sum": a, "sum_orthonormal": b}
            for M, a, b in zip(rep.data["M_values"], rep.data["diagonal_sums"], rep.data["diagonal_sums_orthonormal"])
        ]
        r.plots["partial_sums"] = svg_plot(
            {"sum s_j": (np.arange(1, len(rep.partial_sums) + 1), rep.partial_sums)},
            title="partial sums of singular values", xlabel="j", ylabel="sum",
        )
    elif cfg["probe"] == "circle":
        rep = unit_circle_probe(cfg["beta"], cfg["z"], cfg["op"], cfg["omega"], ns, EULER_GAMMA)
        r.tables["sigma_min"] = [{"n": n, "sigma_min": s, "range_bound": b} for n, s, b in zip(ns, rep.data["sigma_min"], rep.data["range_bound"])]
    else:
        n, k = ns[0], int(cfg["k"])
        g = Grid(cfg["omega"], n)
        v = np.zeros(n, dtype=complex)
        v[k:] = 1.0 + np.arange(n - k)
        rep = krylov_completeness_probe(cfg["beta"].real, GridFn(g, v))
        r.tables["krylov"] = [rep.data]
    r.verdicts.update(rep.verdicts)
    r.summary["note"] = rep.note
    return r


def _run_wave(cfg: dict) -> Result:
    r = Result()
    wc = WaveConfig(cfg["model"], cfg["alpha"], Grid(cfg["omega"], cfg["n"]), tuple(cfg["t"]),
                    cfg["renorm"], int(cfg["sign"]), int(cfg["direction"]))
    rep = wave_limit_run(wc)
    r.tables["wave"] = rep.rows()
    r.verdicts.update({f"nonincreasing_{k}": v for k, v in rep.verdicts.items()})
    r.summary["renorm_defects"] = rep.renorm_defects
    r.plots["wave"] = svg_plot(
        {name: (wc.t_values, res) for name, res in rep.residuals.items()},
        title=f"model {cfg['model']}, renorm {cfg['renorm']}", xlabel="t", ylabel="residual",
    )
    return r


RUNNERS = {
    "kernel": _run_kernel,
    "build-op": _run_build_op,
    "semigroup": _run_semigroup,
    "left-inverse": _run_left_inverse,
    "strong-limit": _run_strong_limit,
    "symbol": _run_symbol,
    "friedrichs": _run_friedrichs,
    "spectral": _run_spectral,
    "wave": _run_wave,
}


def _json_config(cfg: dict) -> dict:
    return {k: (_cjson(v) if isinstance(v, complex) else v) for k, v in cfg.items()}


def execute(raw: dict, out_dir: Path | None = None, stream=sys.stdout) -> int:
    """Validate, run and report one experiment; returns the exit code."""
    try:
        cfg = resolve_config(raw)
    except ConfigError as exc:
        print(json.dumps({"error": "config-invalid", "message": str(exc)}), file=sys.stderr)
        return EXIT_CONFIG
    out = Path(out_dir or raw.get("output_dir") or os.environ.get(OUT_ENV) or "trivolterra-out")
    cfg.pop("output_dir", None)
    try:
        out.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        print(json.dumps({"error": "config-invalid", "message": f"output directory: {exc}"}), file=sys.stderr)
        return EXIT_CONFIG
    try:
        result = RUNNERS[cfg["experiment"]](cfg)
    except (TrivolterraError, ArithmeticError, ValueError, RuntimeError, np.linalg.LinAlgError) as exc:
        print(json.dumps({"error": "computation-failed", "type": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
        return EXIT_COMPUTE
    passed = all(result.verdicts.values())
    files = []
    for name, rows in result.tables.items():
        write_csv(out / f"{name}.csv", rows)
        files.append(f"{name}.csv")
    for name, svg in result.plots.items():
        (out / f"{name}.svg").write_text(svg)
        files.append(f"{name}.svg")
    report = {
        "tool": "trivolterra",
        "version": __version__,
        "config": _json_config(cfg),
        "verdicts": result.verdicts,
        "passed": passed,
        "summary": result.summary,
        "files": sorted(files),
    }
    write_json(out / "report.json", report)
    for key, ok in result.verdicts.items():
        print(f"{'PASS' if ok else 'FAIL'}  {key}", file=stream)
    print(f"report: {out / 'report.json'}", file=stream)
    return EXIT_OK if passed else EXIT_FAIL


# ----------------------------------------------------------------- argparse


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="trivolterra", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, omega=True):
        sp.add_argument("--out", help=f"output directory (default ${OUT_ENV} or ./trivolterra-out)")
        if omega:
            sp.add_argument("--omega", default=None, help="interval length, 0 < omega < 1")

    sp = sub.add_parser("run", help="run an experiment described by a JSON config file")
    sp.add_argument("config", help="path to a JSON file with an 'experiment' key")
    sp.add_argument("--out")

    sp = sub.add_parser("eval-kernel", help="evaluate the kernel E_beta at points x")
    sp.add_argument("--beta", default=None)
    sp.add_argument("--C", default=None)
    sp.add_argument("--x", default=None, help="comma-separated points in (0, omega]")
    common(sp)

    sp = sub.add_parser("build-op", help="discretize an operator and write its matrix")
    sp.add_argument("--op", default=None, choices=["V", "J", "S", "T", "R", "Q", "A", "B"])
    sp.add_argument("--beta", default=None, help="order (alpha for A/B)")
    sp.add_argument("--C", default=None)
    sp.add_argument("--n", default=None)
    common(sp)

    sp = sub.add_parser("semigroup-check", help="grid sweep of the semigroup defect")
    sp.add_argument("--family", default=None, choices=["V", "J"])
    sp.add_argument("--alpha", default=None)
    sp.add_argument("--beta", default=None)
    sp.add_argument("--C", default=None)
    sp.add_argument("--n", default=None, help="comma-separated grid sizes")
    common(sp)

    sp = sub.add_parser("left-inverse", help="grid sweep of || R V_1 phi - phi ||")
    sp.add_argument("--phi", default=None, choices=sorted(_PHI))
    sp.add_argument("--C", default=None)
    sp.add_argument("--n", default=None)
    common(sp)

    sp = sub.add_parser("strong-limit", help="V_beta applied to the E_m family as beta decreases")
    sp.add_argument("--betas", default=None)
    sp.add_argument("--n", default=None)
    common(sp)

    sp = sub.add_parser("symbol-asymptotics", help="symbol sweep against its leading term")
    sp.add_argument("--beta", default=None)
    sp.add_argument("--variant", default=None, choices=list(VARIANTS))
    sp.add_argument("--lambdas", default=None, help="comma-separated frequencies")
    common(sp)

    sp = sub.add_parser("friedrichs-check", help="kernel-built model vs conjugation/composition")
    sp.add_argument("--model", default=None, choices=["A", "B", "A2"])
    sp.add_argument("--alpha", default=None)
    sp.add_argument("--beta", default=None, help="second parameter of A2")
    sp.add_argument("--n", default=None)
    common(sp)

    sp = sub.add_parser("spectral-report", help="singular-value and spectrum probes")
    sp.add_argument("--op", default=None, choices=["T", "S", "V"])
    sp.add_argument("--beta", default=None)
    sp.add_argument("--probe", default=None, choices=["hs", "circle", "krylov"])
    sp.add_argument("--z", default=None, help="point for the circle probe")
    sp.add_argument("--k", default=None, help="leading zeros for the Krylov probe")
    sp.add_argument("--n", default=None)
    common(sp)

    sp = sub.add_parser("wave-run", help="renormalized wave-operator trajectory")
    sp.add_argument("--model", default=None, choices=["A", "B"])
    sp.add_argument("--alpha", default=None)
    sp.add_argument("--n", default=None)
    sp.add_argument("--t", default=None, help="comma-separated times > 1")
    sp.add_argument("--renorm", default=None, choices=["log", "power", "none"])
    sp.add_argument("--sign", default=None, choices=["1", "-1"], help="exponent sign of the renormalization")
    sp.add_argument("--direction", default=None, choices=["1", "-1"], help="t -> +inf or -inf")
    common(sp)
    return p


_COMMAND_KIND = {
    "eval-kernel": "kernel",
    "build-op": "build-op",
    "semigroup-check": "semigroup",
    "left-inverse": "left-inverse",
    "strong-limit": "strong-limit",
    "symbol-asymptotics": "symbol",
    "friedrichs-check": "friedrichs",
    "spectral-report": "spectral",
    "wave-run": "wave",
}


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    if args.command == "run":
        try:
            raw = json.loads(Path(args.config).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            print(json.dumps({"error": "config-invalid", "message": str(exc)}), file=sys.stderr)
            return EXIT_CONFIG
        return execute(raw, Path(args.out) if args.out else None)
    raw = {"experiment": _COMMAND_KIND[args.command]}
    for key, val in vars(args).items():
        if key in ("command", "out") or val is None:
            continue
        raw[key] = val
    if raw["experiment"] == "kernel" and "x" in raw:
        raw["x"] = _floats(raw["x"])
    return execute(raw, Path(args.out) if args.out else None)


if __name__ == "__main__":
    sys.exit(main())
