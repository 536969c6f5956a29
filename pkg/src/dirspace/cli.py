"""Batch front door: config in, machine-readable report out.

Usage:

    dirspace <command> --config FILE [--out DIR] [--format json|csv]
                       [--seed-override U64]

Commands: classify, sections, rkt, moments, carleson, random-sim, doublesum,
demo.  Exit codes: 0 success, 1 a demo check failed, 2 usage/config error.

Config schema (JSON object; fields by command, all numeric grids strictly
increasing):

    symbol      object; one of
                  {"kind": "explicit", "values": [x | {"re","im"} ...]}
                  {"kind": "powerlog", "alpha": f, "beta": f, "scale": f=1}
                  {"kind": "moments", "measure": {...}}
                  {"kind": "lacunary", "support": [int...], "values": [...],
                   "q": f (optional)}
                  {"kind": "lacunary", "rule": {"decay": f, "power": f=0,
                   "scale": f=1}, "start": int=1, "q": f=2}
                  {"kind": "randomized", "base": {...}, "dist": name,
                   "normalized": bool=true, "seed": int, "stream": int=0}
    measure     {"atoms": [{"loc": f, "mass": f}...],
                 "densities": [{"c": f, "gamma": f, "delta": f=0,
                 "kappa": f=0}...]} or {"named": "lebesgue"}
    kind        "hankel" | "cesaro" (default "hankel")
    route       classify only: "widom" (default) | "carleson"
    n           degree/dimension (rkt kernel degree, random-sim section dim,
                moments table length)
    n_grid      section dimensions / test degrees
    m_grid      tail cutoffs (indices)
    t_grid      kernel points in [0, 1)
    delta_grid  annulus widths in (0, 1)
    dist        "rademacher" | "uniform-symmetric" | "gaussian"
    normalized  fourth-moment normalization flag (default true)
    replicas    random-sim replica count
    count/max_len  doublesum battery size
    seed/stream    required for stochastic commands
    classify    optional overrides {"m_grid", "nmax", "plateau_band",
                "compact_factor", "divergence_cap", "bracket_rel_width"}
    power       optional {"tol": f, "max_iter": int} for norm estimates
    preset      demo only; a preset name or "all"

Every reported norm carries its section dimension; every tail carries its
bracket; every stochastic value carries its seed.  Reports are byte-identical
across runs up to the wall-time provenance field.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from pathlib import Path

import numpy as np

from . import __version__, _accel, carleson, criteria, measures, operators, stochastic, symbols
from .coeffspace import TaylorPoly

COMMANDS = ("classify", "sections", "rkt", "moments", "carleson", "random-sim", "doublesum", "demo")


class ConfigError(ValueError):
    """Invalid configuration; carries the offending field path."""

    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"config error at {path}: {message}")


# ---------------------------------------------------------------------------
# config access helpers
# ---------------------------------------------------------------------------


def _get(cfg: dict, key: str, default=None):
    return cfg.get(key, default)


def _require(cfg: dict, key: str, path: str = ""):
    if key not in cfg:
        raise ConfigError(f"{path}{key}", "required field missing")
    return cfg[key]


def _as_int(value, path: str) -> int:
    if isinstance(value, bool) or not isinstance(value, (int, float)) or int(value) != value:
        raise ConfigError(path, f"expected an integer, got {value!r}")
    return int(value)


def _as_number(value, path: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(path, f"expected a number, got {value!r}")
    return float(value)


def _as_grid(value, path: str, integer: bool = True) -> list:
    if not isinstance(value, (list, tuple)) or not value:
        raise ConfigError(path, "expected a nonempty array")
    out = [_as_int(v, f"{path}[{i}]") if integer else _as_number(v, f"{path}[{i}]") for i, v in enumerate(value)]
    if any(b <= a for a, b in zip(out, out[1:])):
        raise ConfigError(path, "grid must be strictly increasing")
    return out


def _parse_symbol(cfg: dict, path: str = "symbol") -> symbols.SymbolSeq:
    if not isinstance(cfg, dict):
        raise ConfigError(path, "expected an object")
    try:
        return symbols.from_dict(cfg)
    except ConfigError:
        raise
    except (KeyError, ValueError, TypeError) as exc:
        raise ConfigError(path, str(exc)) from exc


def _parse_measure(cfg: dict, path: str = "measure") -> measures.MeasureSpec:
    if not isinstance(cfg, dict):
        raise ConfigError(path, "expected an object")
    try:
        return measures.MeasureSpec.from_dict(cfg)
    except (KeyError, ValueError, TypeError) as exc:
        raise ConfigError(path, str(exc)) from exc


def _parse_kind(cfg: dict) -> str:
    kind = _get(cfg, "kind", "hankel")
    if kind not in ("hankel", "cesaro"):
        raise ConfigError("kind", f"expected 'hankel' or 'cesaro', got {kind!r}")
    return kind


def _parse_classify_cfg(cfg: dict) -> criteria.ClassifyConfig:
    sub = _get(cfg, "classify", {})
    if not isinstance(sub, dict):
        raise ConfigError("classify", "expected an object")
    kwargs = {}
    if "m_grid" in sub:
        kwargs["m_grid"] = tuple(_as_grid(sub["m_grid"], "classify.m_grid"))
    for key in ("plateau_band", "compact_factor", "divergence_cap", "bracket_rel_width"):
        if key in sub:
            kwargs[key] = _as_number(sub[key], f"classify.{key}")
    if "nmax" in sub:
        kwargs["nmax"] = _as_int(sub["nmax"], "classify.nmax")
    return criteria.ClassifyConfig(**kwargs)


def _parse_power(cfg: dict) -> dict:
    sub = _get(cfg, "power", {})
    if not isinstance(sub, dict):
        raise ConfigError("power", "expected an object")
    out = {}
    if "tol" in sub:
        out["tol"] = _as_number(sub["tol"], "power.tol")
    if "max_iter" in sub:
        out["max_iter"] = _as_int(sub["max_iter"], "power.max_iter")
    return out


def _parse_dist(cfg: dict) -> stochastic.DistTag:
    name = _get(cfg, "dist", "rademacher")
    normalized = _get(cfg, "normalized", True)
    if not isinstance(normalized, bool):
        raise ConfigError("normalized", "expected a boolean")
    try:
        return stochastic.DistTag(name, normalized)
    except ValueError as exc:
        raise ConfigError("dist", str(exc)) from exc


def _parse_seed(cfg: dict) -> stochastic.RngSpec:
    seed = _as_int(_require(cfg, "seed"), "seed")
    stream = _as_int(_get(cfg, "stream", 0), "stream")
    return stochastic.RngSpec(seed, stream)


def _symbol_to_poly(sym: symbols.SymbolSeq, degree: int) -> TaylorPoly:
    """Truncation of the series with coefficients conj(lambda_n)."""
    return TaylorPoly(np.conj(sym.values(np.arange(degree + 1))))


def _curve(label: str, rows, meta=None) -> dict:
    return {
        "label": label,
        "meta": meta or {},
        "rows": [[float(x) for x in row] for row in rows],
    }


def _profile_rows(profile):
    return [
        [p.m, p.lower, p.midpoint if np.isfinite(p.upper) else p.lower, p.upper]
        for p in profile
    ]


# ---------------------------------------------------------------------------
# command handlers
# ---------------------------------------------------------------------------


def _run_classify(cfg: dict) -> tuple[dict, list]:
    has_symbol = "symbol" in cfg
    has_measure = "measure" in cfg
    if has_symbol == has_measure:
        raise ConfigError("symbol", "provide exactly one of 'symbol' or 'measure'")
    kind = _parse_kind(cfg)
    ccfg = _parse_classify_cfg(cfg)
    route = _get(cfg, "route", "widom")
    if route not in ("widom", "carleson"):
        raise ConfigError("route", f"expected 'widom' or 'carleson', got {route!r}")
    if route == "carleson":
        if not has_symbol:
            raise ConfigError("route", "the carleson route needs a 'symbol'")
        sym = _parse_symbol(cfg["symbol"])
        n_grid = _as_grid(_get(cfg, "n_grid", [64, 128, 256, 512]), "n_grid")
        report = carleson.classify_hankel_general(_symbol_to_poly(sym, max(n_grid)), n_grid)
        curves = [_curve("xnorm_vs_degree", _profile_rows(report.profile))]
    elif has_measure:
        spec = _parse_measure(cfg["measure"])
        report = measures.classify_measure(spec, kind, ccfg)
        curves = [_curve("widom_profile", _profile_rows(report.profile), {"nmax": ccfg.nmax})]
    else:
        sym = _parse_symbol(cfg["symbol"])
        report = criteria.classify(sym, kind, ccfg)
        curves = [_curve("widom_profile", _profile_rows(report.profile), {"nmax": ccfg.nmax})]
    results = {
        "verdict": report.verdict,
        "applicability": report.applicability,
        "notes": report.notes,
    }
    return results, curves


def _run_sections(cfg: dict) -> tuple[dict, list]:
    sym = _parse_symbol(_require(cfg, "symbol"))
    kind = _parse_kind(cfg)
    power = _parse_power(cfg)
    n_grid = _as_grid(_get(cfg, "n_grid", [64, 128, 256, 512, 1024]), "n_grid")
    norm_rows = []
    for n in n_grid:
        sec = operators.section_matrix(sym, kind, "dirichlet-section", n)
        sigma, _ = operators.top_singular_value(sec, **power)
        norm_rows.append([n, sigma, sigma, sigma])
    curves = [_curve("section_norm_vs_n", norm_rows, {"weight": "dirichlet-section"})]
    n_top = max(n_grid)
    m_grid = _get(cfg, "m_grid")
    if m_grid is not None:
        m_grid = _as_grid(m_grid, "m_grid")
        if m_grid[-1] >= n_top:
            raise ConfigError("m_grid", f"cutoffs must stay below max(n_grid) = {n_top}")
        tail_rows = []
        for m in m_grid:
            t = operators.tail_section_norm(sym, kind, m, n_top, **power)
            tail_rows.append([m, t, t, t])
        curves.append(_curve("tail_norm_vs_m", tail_rows, {"n": n_top}))
    results = {
        "top_section_norm": norm_rows[-1][2],
        "n": n_top,
        "exact_weight_interval": list(operators.exact_norm_interval(norm_rows[-1][2])),
    }
    return results, curves


def _run_rkt(cfg: dict) -> tuple[dict, list]:
    sym = _parse_symbol(_require(cfg, "symbol"))
    kind = _parse_kind(cfg)
    t_grid = _as_grid(_require(cfg, "t_grid"), "t_grid", integer=False)
    if t_grid[0] < 0.0 or t_grid[-1] >= 1.0:
        raise ConfigError("t_grid", "kernel points must lie in [0, 1)")
    n = _as_int(_get(cfg, "n", 256), "n")
    probe = criteria.rkt_probe(sym, kind, t_grid, n)
    est_rows = [[r.t, r.estimate, r.estimate, r.estimate] for r in probe.rows]
    tail_rows = [[r.t, r.kernel_tail, r.kernel_tail, r.kernel_tail] for r in probe.rows]
    curves = [
        _curve("rkt_estimate_vs_t", est_rows, {"n": n}),
        _curve("kernel_tail_bound_vs_t", tail_rows, {"n": n}),
    ]
    if kind == "cesaro":
        curves.append(
            _curve(
                "rkt_closed_form_vs_t",
                [[r.t, r.closed_form, r.closed_form, r.closed_form] for r in probe.rows],
            )
        )
    return {"statistic": probe.statistic, "notes": probe.notes}, curves


def _run_moments(cfg: dict) -> tuple[dict, list]:
    spec = _parse_measure(_require(cfg, "measure"))
    n = _as_int(_get(cfg, "n", 64), "n")
    ccfg = _parse_classify_cfg(cfg)
    sym = measures.moment_sequence(spec, n)
    mom = sym.values(np.arange(n + 1))
    mom_rows = [[i, m, m, m] for i, m in enumerate(mom.real)]
    profile = criteria.widom_profile(sym, ccfg.m_grid, ccfg.nmax)
    curves = [
        _curve("moments_vs_n", mom_rows),
        _curve("widom_profile", _profile_rows(profile), {"nmax": ccfg.nmax}),
    ]
    return {"total_mass": spec.total_mass, "support_sup": spec.support_sup}, curves


def _run_carleson(cfg: dict) -> tuple[dict, list]:
    sym = _parse_symbol(_require(cfg, "symbol"))
    n_grid = _as_grid(_get(cfg, "n_grid", [64, 128, 256]), "n_grid")
    delta_grid = _as_grid(
        _get(cfg, "delta_grid", sorted(carleson.CarlesonConfig().delta_schedule)),
        "delta_grid",
        integer=False,
    )
    if delta_grid[0] <= 0.0 or delta_grid[-1] >= 1.0:
        raise ConfigError("delta_grid", "annulus widths must lie in (0, 1)")
    xnorm_rows = []
    for n in n_grid:
        b = _symbol_to_poly(sym, n)
        v = carleson.x_norm(b, n)
        xnorm_rows.append([n, v, v, v])
    n_top = max(n_grid)
    b_top = _symbol_to_poly(sym, n_top)
    restr_rows = []
    for delta in delta_grid:
        r = carleson.restricted_carleson_norm(b_top, n_top, delta)
        restr_rows.append([delta, r, r, r])
    report = carleson.classify_hankel_general(b_top, n_grid)
    curves = [
        _curve("xnorm_vs_degree", xnorm_rows),
        _curve("restricted_vs_delta", restr_rows, {"n": n_top}),
    ]
    results = {
        "verdict": report.verdict,
        "applicability": report.applicability,
        "notes": report.notes,
    }
    return results, curves


def _run_random_sim(cfg: dict) -> tuple[dict, list]:
    sym = _parse_symbol(_require(cfg, "symbol"))
    dist = _parse_dist(cfg)
    rng = _parse_seed(cfg)
    replicas = _as_int(_get(cfg, "replicas", 16), "replicas")
    n = _as_int(_get(cfg, "n", 512), "n")
    m_grid = _as_grid(_get(cfg, "m_grid", [n // 8, n // 4, n // 2]), "m_grid")
    power = _parse_power(cfg)
    report = stochastic.random_tail_experiment(
        sym, dist, replicas, m_grid, n, rng, tol=power.get("tol", 1e-10)
    )
    rand_rows = [[row.m, row.q25, row.median, row.q75] for row in report.rows]
    det_rows = [[row.m, row.deterministic, row.deterministic, row.deterministic] for row in report.rows]
    curves = [
        _curve("randomized_tail_quartiles", rand_rows, {"n": n, "replicas": replicas, "seed": rng.seed}),
        _curve("deterministic_tail", det_rows, {"n": n}),
    ]
    results = {
        "membership": {
            "lower": report.membership.lower,
            "upper": report.membership.upper,
            "divergent": report.membership.divergent,
        },
        "median_over_deterministic": [
            (row.median / row.deterministic) if row.deterministic > 0 else None for row in report.rows
        ],
        "seed": rng.seed,
        "stream": rng.stream,
    }
    return results, curves


def _run_doublesum(cfg: dict) -> tuple[dict, list]:
    rng = _parse_seed(cfg)
    count = _as_int(_get(cfg, "count", 1000), "count")
    max_len = _as_int(_get(cfg, "max_len", 512), "max_len")
    if count < 1 or max_len < 2:
        raise ConfigError("count", "need count >= 1 and max_len >= 2")
    from . import _rng as rngmod

    rows = []
    max_ratio, argmax = 0.0, 0
    for i in range(count):
        length = 2 + int(rngmod.uniforms(rng.seed, rng.stream + i, np.array([0]))[0] * (max_len - 1))
        vec = rngmod.uniforms(rng.seed ^ 0xA5A5, rng.stream + i, np.arange(length))
        _, _, ratio = criteria.double_sum_ratio(vec)
        rows.append([i, ratio, ratio, ratio])
        if ratio > max_ratio:
            max_ratio, argmax = ratio, i
    curves = [_curve("double_sum_ratio_per_vector", rows, {"seed": rng.seed})]
    return {"max_ratio": max_ratio, "argmax_vector": argmax, "seed": rng.seed}, curves


# ---------------------------------------------------------------------------
# demo presets (fast spot checks of the battery the test suite runs in full)
# ---------------------------------------------------------------------------


def _preset_hilbert():
    spec = measures.MeasureSpec.lebesgue()
    mom = spec.moments(np.arange(65))
    exact = 1.0 / np.arange(1.0, 66.0)
    ok = bool(np.max(np.abs(mom - exact)) <= 1e-12)
    verdict = measures.classify_measure(spec, "hankel").verdict
    ok = ok and verdict == "unbounded"
    sigmas = []
    sym = measures.moment_sequence(spec)
    for n in (64, 256, 1024):
        sig, _ = operators.top_singular_value(operators.section_matrix(sym, "hankel", "dirichlet-section", n))
        sigmas.append(sig)
    ok = ok and all(b > a for a, b in zip(sigmas, sigmas[1:]))
    return ok, f"verdict={verdict}, section norms {[round(s, 4) for s in sigmas]}"


def _preset_widom_ladder():
    want = {0.5: "unbounded", 1.0: "bounded", 1.5: "compact"}
    got = {b: criteria.classify(symbols.SymbolSeq.powerlog(1.0, b), "hankel").verdict for b in want}
    return got == want, f"verdicts {got}"


def _preset_point_mass():
    sym = measures.moment_sequence(measures.MeasureSpec.point_mass(0.5))
    tail = criteria.widom_tail(sym, 0, 64)
    ok = tail.lower <= 4.0 / 9.0 <= tail.upper and (tail.upper - tail.lower) <= 1e-12
    verdict = criteria.classify(sym, "hankel").verdict
    ok = ok and verdict == "compact"
    tails = [operators.tail_section_norm(sym, "hankel", m, 64) for m in (0, 4, 8)]
    ok = ok and all(a / b >= 4.0 for a, b in zip(tails, tails[1:]))
    return bool(ok), f"bracket width {tail.upper - tail.lower:.2e}, verdict={verdict}"


def _preset_duality():
    from . import _rng as rngmod

    worst = 0.0
    for i in range(10):
        re = 2.0 * rngmod.uniforms(99, i, np.arange(255)) - 1.0
        im = 2.0 * rngmod.uniforms(98, i, np.arange(255)) - 1.0
        sym = symbols.SymbolSeq.explicit(re + 1j * im)
        for n in (32, 128):
            a = operators.section_matrix(sym, "hankel", "dirichlet-section", n)
            b = operators.section_matrix(sym, "hankel", "bergman", n)
            if np.max(np.abs(a.entries.T - b.entries)) > 1e-15:
                return False, "transpose identity violated"
            sa, _ = operators.top_singular_value(a, tol=1e-13, max_iter=20000)
            sb, _ = operators.top_singular_value(b, tol=1e-13, max_iter=20000)
            worst = max(worst, abs(sa - sb) / max(sa, 1e-300))
    return worst <= 1e-10, f"worst sigma agreement {worst:.2e}"


def _preset_doublesum():
    from . import _rng as rngmod

    mx = 0.0
    for i in range(200):
        length = 2 + int(rngmod.uniforms(4242, i, np.array([0]))[0] * 255)
        vec = rngmod.uniforms(4243, i, np.arange(length))
        mx = max(mx, criteria.double_sum_ratio(vec)[2])
    return mx <= 10.0, f"max ratio {mx:.4f}"


def _preset_fourth_moment():
    from . import _rng as rngmod

    for i in range(20):
        a = 2.0 * rngmod.uniforms(321, i, np.arange(10)) - 1.0
        exact = stochastic.fourth_moment_exact_rademacher(a)
        closed = 3.0 * np.sum(a * a) ** 2 - 2.0 * np.sum(a**4)
        if abs(exact - closed) > 1e-12 * max(closed, 1.0):
            return False, f"enumeration vs closed form mismatch at vector {i}"
        if exact > 3.0 * np.sum(a * a) ** 2 + 1e-12:
            return False, f"fourth-moment bound violated at vector {i}"
    a = 2.0 * rngmod.uniforms(322, 0, np.arange(25)) - 1.0
    est, se = stochastic.fourth_moment_mc(a, stochastic.DistTag("gaussian"), 20000, stochastic.RngSpec(7, 0))
    bound = 3.0 * np.sum(np.abs(a) ** 2) ** 2
    ok = est <= bound + 4.0 * se
    return bool(ok), f"mc estimate {est:.4f} vs bound {bound:.4f} (stderr {se:.4f})"


_PRESETS = {
    "hilbert": _preset_hilbert,
    "widom-ladder": _preset_widom_ladder,
    "point-mass": _preset_point_mass,
    "duality": _preset_duality,
    "doublesum": _preset_doublesum,
    "fourth-moment": _preset_fourth_moment,
}


def _run_demo(cfg: dict) -> tuple[dict, list]:
    preset = _get(cfg, "preset", "all")
    if preset == "all":
        names = list(_PRESETS)
    elif preset in _PRESETS:
        names = [preset]
    else:
        raise ConfigError("preset", f"unknown preset {preset!r}; choose from {sorted(_PRESETS)} or 'all'")
    checks = []
    for name in names:
        ok, detail = _PRESETS[name]()
        checks.append({"preset": name, "pass": bool(ok), "detail": detail})
    return {"checks": checks, "all_pass": all(c["pass"] for c in checks)}, []


_HANDLERS = {
    "classify": _run_classify,
    "sections": _run_sections,
    "rkt": _run_rkt,
    "moments": _run_moments,
    "carleson": _run_carleson,
    "random-sim": _run_random_sim,
    "doublesum": _run_doublesum,
    "demo": _run_demo,
}


def run(config: dict) -> dict:
    """Dispatch a validated config to its command handler; returns the report."""
    if not isinstance(config, dict):
        raise ConfigError("", "top-level config must be a JSON object")
    command = _require(config, "command")
    if command not in COMMANDS:
        raise ConfigError("command", f"unknown command {command!r}; choose from {COMMANDS}")
    start = time.perf_counter()
    results, curves = _HANDLERS[command](config)
    report = {
        "tool": {"name": "dirspace", "version": __version__},
        "command": command,
        "config": config,
        "results": results,
        "curves": curves,
        "provenance": {
            "backend": _accel.backend(),
            "seed": config.get("seed"),
            "wall_time_s": round(time.perf_counter() - start, 6),
        },
    }
    return report


def serialize(report: dict, fmt: str) -> dict[str, bytes]:
    """Encode a report as {filename: bytes}.

    json: a single document. csv: one file per curve with header
    (x, lower, mid, upper), plus report.json for the scalar payload.
    """
    if fmt == "json":
        return {"report.json": json.dumps(report, indent=2, sort_keys=True).encode() + b"\n"}
    if fmt == "csv":
        out = {}
        for curve in report.get("curves", []):
            buf = io.StringIO()
            writer = csv.writer(buf, lineterminator="\n")
            writer.writerow(["x", "lower", "mid", "upper"])
            for row in curve["rows"]:
                writer.writerow([repr(v) for v in row])
            out[f"{curve['label']}.csv"] = buf.getvalue().encode()
        out["report.json"] = json.dumps(report, indent=2, sort_keys=True).encode() + b"\n"
        return out
    raise ConfigError("format", f"unknown format {fmt!r}; expected 'json' or 'csv'")


def parse_report(data: bytes) -> dict:
    return json.loads(data.decode())


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dirspace", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        cmd = sub.add_parser(name)
        cmd.add_argument("--config", type=Path, default=None, help="JSON config file")
        cmd.add_argument("--out", type=Path, default=None, help="output directory")
        cmd.add_argument("--format", choices=("json", "csv"), default="json")
        cmd.add_argument("--seed-override", type=int, default=None)
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.config is not None:
            with open(args.config, "r", encoding="utf-8") as handle:
                config = json.load(handle)
            if not isinstance(config, dict):
                raise ConfigError("", "top-level config must be a JSON object")
        elif args.command == "demo":
            config = {}
        else:
            raise ConfigError("", "--config FILE is required for this command")
        config = dict(config)
        config["command"] = args.command
        if args.seed_override is not None:
            config["seed"] = args.seed_override
        report = run(config)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: precondition failed: {exc}", file=sys.stderr)
        return 2
    except json.JSONDecodeError as exc:
        print(f"error: config is not valid JSON: {exc}", file=sys.stderr)
        return 2

    payload = serialize(report, args.format)
    if args.out is None and args.format == "json":
        sys.stdout.write(payload["report.json"].decode())
    else:
        out_dir = args.out or Path(".")
        out_dir.mkdir(parents=True, exist_ok=True)
        for name, data in payload.items():
            (out_dir / name).write_bytes(data)
        print(f"wrote {len(payload)} file(s) to {out_dir}", file=sys.stderr)

    if args.command == "demo":
        for check in report["results"]["checks"]:
            status = "PASS" if check["pass"] else "FAIL"
            print(f"[{status}] {check['preset']}: {check['detail']}", file=sys.stderr)
        if not report["results"]["all_pass"]:
            return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
