"""JSON run configurations, parameter sweeps, oracle checks and figure presets.

Everything here is deterministic: identical configurations produce
byte-identical CSV text.
"""
from __future__ import annotations

import copy
import io
import itertools
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Any, Optional

import numpy as np

from . import closed
from .closed import ChargingScenario, analytic_work_oracle, matched_fermion_filling
from .ergotropy import ergotropy
from .hamiltonians import HubbardParams
from .open_system import (BathSpec, DEFAULT_OMEGA_C, build_generator, integrate_eigen,
                          steady_state)

SCHEMA_VERSION = 1
OUTPUTS = ("work", "power", "ergotropy")
REDUCTIONS = ("pmax", "steady_ergotropy", "final_work", "delta_pmax", "delta_fb")

EXIT_OK, EXIT_CONFIG, EXIT_NUMERIC, EXIT_ORACLE = 0, 2, 3, 4


class ConfigError(ValueError):
    """Schema violation; ``field`` names the offending entry."""

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field


class NumericalFailure(RuntimeError):
    pass


def _fmt(x: float) -> str:
    return f"{float(x):.17g}"


def _check_keys(d: dict, allowed: set, where: str) -> None:
    if not isinstance(d, dict):
        raise ConfigError(where or "<root>", "expected a JSON object")
    extra = sorted(set(d) - allowed)
    if extra:
        raise ConfigError(f"{where}.{extra[0]}" if where else extra[0], "unknown key")


def _number(d: dict, key: str, where: str, default=None, positive=False, integer=False):
    v = d.get(key, default)
    path = f"{where}.{key}" if where else key
    if v is None:
        raise ConfigError(path, "required")
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise ConfigError(path, f"expected a number, got {v!r}")
    if integer and int(v) != v:
        raise ConfigError(path, f"expected an integer, got {v!r}")
    if not np.isfinite(v):
        raise ConfigError(path, "must be finite")
    if positive and v <= 0:
        raise ConfigError(path, "must be positive")
    return int(v) if integer else float(v)


def _params(d: Any, where: str) -> HubbardParams:
    d = {} if d is None else d
    _check_keys(d, {"J", "U", "r"}, where)
    return HubbardParams(*(_number(d, k, where, 0.0) for k in ("J", "U", "r")))


@dataclass(frozen=True)
class BathConfig:
    site: int
    T: float
    eta: float = 1e-2


@dataclass(frozen=True)
class RunConfig:
    model: str
    N: int
    battery: HubbardParams
    charger: HubbardParams
    n: Optional[int] = None
    n_up: Optional[int] = None
    n_down: Optional[int] = None
    cap: int = 2
    initial: str = "ground"
    beta: Optional[float] = None
    normalize: bool = True
    dynamics: str = "closed"
    baths: tuple = ()
    omega_c: float = DEFAULT_OMEGA_C
    include_battery_in_coherent: bool = False
    t_max: float = 20.0
    points: int = 1001
    outputs: tuple = ("work", "power")

    @classmethod
    def from_dict(cls, d: dict) -> "RunConfig":
        _check_keys(d, {"schema_version", "model", "N", "n", "n_up", "n_down", "cap",
                        "battery", "charger", "initial", "normalize", "dynamics", "baths",
                        "omega_c", "include_battery_in_coherent", "time", "outputs"}, "")
        version = d.get("schema_version", SCHEMA_VERSION)
        if version != SCHEMA_VERSION:
            raise ConfigError("schema_version", f"unsupported version {version!r}")
        model = d.get("model")
        if model not in ("bose", "fermi"):
            raise ConfigError("model", "must be 'bose' or 'fermi'")
        N = _number(d, "N", "", integer=True, positive=True)
        kw: dict = {}
        if model == "bose":
            if "n_up" in d or "n_down" in d:
                raise ConfigError("n_up", "not allowed for bose model")
            kw["n"] = _number(d, "n", "", integer=True)
            kw["cap"] = _number(d, "cap", "", 2, integer=True, positive=True)
        else:
            if "n" in d or "cap" in d:
                raise ConfigError("n" if "n" in d else "cap", "not allowed for fermi model")
            kw["n_up"] = _number(d, "n_up", "", integer=True)
            kw["n_down"] = _number(d, "n_down", "", integer=True)
        init = d.get("initial", {"kind": "ground"})
        _check_keys(init, {"kind", "beta"}, "initial")
        kind = init.get("kind", "ground")
        if kind not in ("ground", "gibbs", "top"):
            raise ConfigError("initial.kind", "must be ground, gibbs or top")
        beta = None
        if kind == "gibbs":
            beta = _number(init, "beta", "initial")
            if beta < 0:
                raise ConfigError("initial.beta", "must be non-negative")
        dynamics = d.get("dynamics", "closed")
        if dynamics not in ("closed", "open"):
            raise ConfigError("dynamics", "must be closed or open")
        baths = []
        for k, b in enumerate(d.get("baths", [])):
            where = f"baths.{k}"
            _check_keys(b, {"site", "T", "eta"}, where)
            site = _number(b, "site", where, integer=True)
            if site not in (1, N):
                raise ConfigError(f"{where}.site", f"must be an edge site (1 or {N})")
            baths.append(BathConfig(site, _number(b, "T", where, positive=True),
                                    _number(b, "eta", where, 1e-2, positive=True)))
        if dynamics == "open" and not baths:
            raise ConfigError("baths", "open dynamics requires at least one bath")
        time = d.get("time", {})
        _check_keys(time, {"t_max", "points"}, "time")
        outputs = d.get("outputs", ["work", "power"])
        if not isinstance(outputs, list) or not outputs or any(o not in OUTPUTS for o in outputs):
            raise ConfigError("outputs", f"must be a non-empty list drawn from {OUTPUTS}")
        for flag in ("normalize", "include_battery_in_coherent"):
            if flag in d and not isinstance(d[flag], bool):
                raise ConfigError(flag, "expected true or false")
        return cls(model=model, N=N, battery=_params(d.get("battery"), "battery"),
                   charger=_params(d.get("charger"), "charger"), initial=kind, beta=beta,
                   normalize=d.get("normalize", True), dynamics=dynamics, baths=tuple(baths),
                   omega_c=_number(d, "omega_c", "", DEFAULT_OMEGA_C, positive=True),
                   include_battery_in_coherent=d.get("include_battery_in_coherent", False),
                   t_max=_number(time, "t_max", "time", 20.0, positive=True),
                   points=_number(time, "points", "time", 1001, integer=True, positive=True),
                   outputs=tuple(outputs), **kw)

    def to_dict(self) -> dict:
        d: dict = {"schema_version": SCHEMA_VERSION, "model": self.model, "N": self.N}
        if self.model == "bose":
            d.update(n=self.n, cap=self.cap)
        else:
            d.update(n_up=self.n_up, n_down=self.n_down)
        d["battery"] = {"J": self.battery.J, "U": self.battery.U, "r": self.battery.r}
        d["charger"] = {"J": self.charger.J, "U": self.charger.U, "r": self.charger.r}
        d["initial"] = {"kind": self.initial}
        if self.initial == "gibbs":
            d["initial"]["beta"] = self.beta
        d["normalize"] = self.normalize
        d["dynamics"] = self.dynamics
        d["baths"] = [{"site": b.site, "T": b.T, "eta": b.eta} for b in self.baths]
        d["omega_c"] = self.omega_c
        d["include_battery_in_coherent"] = self.include_battery_in_coherent
        d["time"] = {"t_max": self.t_max, "points": self.points}
        d["outputs"] = list(self.outputs)
        return d

    def scenario(self) -> ChargingScenario:
        return ChargingScenario("boson" if self.model == "bose" else "fermion", self.N,
                                self.battery, self.charger, n=self.n, n_up=self.n_up,
                                n_down=self.n_down, cap=self.cap, initial=self.initial,
                                beta=self.beta, normalize=self.normalize)

    def bath_specs(self) -> list[BathSpec]:
        return [BathSpec(b.site, 1.0 / b.T, b.eta, self.omega_c) for b in self.baths]

    def generator(self, sc: Optional[ChargingScenario] = None):
        sc = sc or self.scenario()
        charger = sc.charger_hamiltonian if any(
            (self.charger.J, self.charger.U, self.charger.r)) else None
        return build_generator(sc.battery_hamiltonian, self.bath_specs(), H_charger=charger,
                               include_battery_in_coherent=self.include_battery_in_coherent)


def load_config(path: str) -> dict:
    with open(path, encoding="utf-8") as fh:
        try:
            return json.load(fh)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"line {exc.lineno}", exc.msg) from None


def _write_csv(header: list[str], rows, provenance: Optional[list[str]] = None) -> str:
    buf = io.StringIO()
    for line in provenance or []:
        buf.write(f"# {line}\n")
    buf.write(",".join(header) + "\n")
    for row in rows:
        buf.write(",".join(v if isinstance(v, str) else _fmt(v) for v in row) + "\n")
    return buf.getvalue()


def run_series(cfg: RunConfig) -> dict[str, np.ndarray]:
    """Time series for a single configuration; keys ``t`` plus the requested outputs."""
    sc = cfg.scenario()
    t = np.linspace(0.0, cfg.t_max, cfg.points)
    H_ref = sc.reference_hamiltonian
    rho0 = sc.initial_state
    out: dict[str, np.ndarray] = {"t": t}
    if cfg.dynamics == "closed":
        W = sc.work_function(t)
        if "ergotropy" in cfg.outputs:
            out["ergotropy"] = np.array(
                [ergotropy(closed.evolve(rho0, sc.charger_hamiltonian, s), H_ref).ergotropy
                 for s in t])
    else:
        gen = cfg.generator(sc)
        traj = integrate_eigen(gen, gen.to_eigen(rho0.matrix), t)
        ref_eig = gen.to_eigen(H_ref.matrix)
        E0 = H_ref.expectation(rho0.matrix)
        W = np.real(np.einsum("ij,tji->t", ref_eig, traj)) - E0
        if "ergotropy" in cfg.outputs:
            out["ergotropy"] = np.array([ergotropy(gen.from_eigen(m), H_ref).ergotropy
                                         for m in traj])
    if "work" in cfg.outputs:
        out["work"] = W
    if "power" in cfg.outputs:
        with np.errstate(divide="ignore", invalid="ignore"):
            out["power"] = np.where(t > 0, W / np.where(t > 0, t, 1.0), 0.0)
    return out


def run(cfg: RunConfig, provenance: Optional[list[str]] = None) -> str:
    """CSV time series with columns ``t`` and the requested outputs."""
    series = run_series(cfg)
    cols = ["t"] + [o for o in OUTPUTS if o in cfg.outputs]
    prov = (provenance or []) + ["config " + json.dumps(cfg.to_dict(), sort_keys=True)]
    return _write_csv(cols, zip(*(series[c] for c in cols)), prov)


# --- sweeps -----------------------------------------------------------------

@dataclass(frozen=True)
class Axis:
    field: str
    values: tuple
    scale_by: Optional[str] = None


@dataclass(frozen=True)
class SweepConfig:
    base: dict
    axes: tuple
    reduction: str
    c2: Optional[dict] = None

    @classmethod
    def from_dict(cls, d: dict) -> "SweepConfig":
        _check_keys(d, {"schema_version", "base", "axes", "reduction", "c2"}, "")
        if d.get("schema_version", SCHEMA_VERSION) != SCHEMA_VERSION:
            raise ConfigError("schema_version", "unsupported version")
        if "base" not in d:
            raise ConfigError("base", "required")
        base = RunConfig.from_dict(d["base"]).to_dict()
        reduction = d.get("reduction")
        if reduction not in REDUCTIONS:
            raise ConfigError("reduction", f"must be one of {REDUCTIONS}")
        raw_axes = d.get("axes")
        if not isinstance(raw_axes, list) or not 1 <= len(raw_axes) <= 2:
            raise ConfigError("axes", "expected a list of one or two axes")
        axes = []
        for k, a in enumerate(raw_axes):
            where = f"axes.{k}"
            _check_keys(a, {"field", "values", "min", "max", "steps", "scale_by"}, where)
            if "values" in a:
                vals = a["values"]
                if not isinstance(vals, list) or not vals:
                    raise ConfigError(f"{where}.values", "expected a non-empty list")
                vals = tuple(_number({"v": v}, "v", f"{where}.values") for v in vals)
            else:
                lo = _number(a, "min", where)
                hi = _number(a, "max", where)
                steps = _number(a, "steps", where, integer=True, positive=True)
                vals = tuple(float(v) for v in np.linspace(lo, hi, steps))
            fld = a.get("field")
            if not isinstance(fld, str):
                raise ConfigError(f"{where}.field", "required")
            axes.append(Axis(fld, vals, a.get("scale_by")))
        c2 = d.get("c2")
        if reduction == "delta_pmax":
            if c2 is None:
                raise ConfigError("c2", "delta_pmax needs a c2 overlay")
            _check_keys(c2, {"battery", "charger"}, "c2")
        cfg = cls(base, tuple(axes), reduction, c2)
        # validate field paths against a dry-run point
        for point in itertools.islice(cfg.grid(), 1):
            try:
                cfg.point_configs(point)
            except ConfigError as exc:
                raise ConfigError("axes", str(exc)) from None
        return cfg

    def to_dict(self) -> dict:
        d = {"schema_version": SCHEMA_VERSION, "base": self.base,
             "axes": [dict({"field": a.field, "values": list(a.values)},
                           **({"scale_by": a.scale_by} if a.scale_by else {}))
                      for a in self.axes],
             "reduction": self.reduction}
        if self.c2 is not None:
            d["c2"] = self.c2
        return d

    def grid(self):
        return itertools.product(*(a.values for a in self.axes))

    def point_configs(self, point) -> tuple[RunConfig, Optional[dict]]:
        d = copy.deepcopy(self.base)
        if self.c2 is not None:
            d["c2"] = copy.deepcopy(self.c2)
        for axis, value in zip(self.axes, point):
            if axis.scale_by:
                value = value * _get_path(d, axis.scale_by)
            _set_path(d, axis.field, value)
        c2 = d.pop("c2", None)
        return RunConfig.from_dict(d), c2


def _get_path(d: dict, path: str):
    node = d
    for key in path.split("."):
        if isinstance(node, list):
            node = node[int(key)]
        elif isinstance(node, dict) and key in node:
            node = node[key]
        else:
            raise ConfigError(path, "unknown field path")
    return node


def _set_path(d: dict, path: str, value) -> None:
    if path == "n" and d.get("model") == "fermi":
        d["n_up"], d["n_down"] = matched_fermion_filling(int(value))
        return
    if path in ("N", "n", "n_up", "n_down", "cap", "time.points"):
        value = int(round(value))
    keys = path.split(".")
    if keys[0] == "baths" and len(keys) == 3 and keys[1] == "*":
        for b in d["baths"]:
            b[keys[2]] = value
        return
    node = d
    for key in keys[:-1]:
        if isinstance(node, list):
            node = node[int(key)]
        elif isinstance(node, dict):
            node = node.setdefault(key, {})
        else:
            raise ConfigError(path, "unknown field path")
    if not isinstance(node, (dict, list)):
        raise ConfigError(path, "unknown field path")
    if isinstance(node, list):
        node[int(keys[-1])] = value
    else:
        node[keys[-1]] = value


def _reduction_columns(reduction: str) -> list[str]:
    return {"pmax": ["pmax", "t_star"], "steady_ergotropy": ["ergotropy", "converged"],
            "final_work": ["work"], "delta_pmax": ["delta_pmax"],
            "delta_fb": ["delta_fb"]}[reduction]


def evaluate_point(sweep: SweepConfig, point) -> list:
    cfg, c2 = sweep.point_configs(point)
    red = sweep.reduction
    sc = cfg.scenario()
    if red == "pmax":
        if cfg.dynamics != "closed":
            raise ConfigError("reduction", "pmax needs closed dynamics")
        return list(closed.max_average_power(sc))
    if red == "final_work":
        return [run_series(replace(cfg, outputs=("work",)))["work"][-1]]
    if red == "steady_ergotropy":
        if cfg.dynamics != "open":
            raise ConfigError("reduction", "steady_ergotropy needs open dynamics")
        res = steady_state(cfg.generator(sc), sc.initial_state)
        if not res.converged:
            raise NumericalFailure("steady state not reached")
        return [ergotropy(res.state, sc.reference_hamiltonian).ergotropy, 1.0]
    if red == "delta_pmax":
        d2 = cfg.to_dict()
        for key in ("battery", "charger"):
            d2[key] = {"J": 0.0, "U": 0.0, "r": 0.0, **c2.get(key, {})}
        return [closed.delta_pmax(sc, RunConfig.from_dict(d2).scenario())]
    if red == "delta_fb":
        if cfg.model != "bose":
            raise ConfigError("base.model", "delta_fb sweeps start from the bosonic config")
        up, down = matched_fermion_filling(cfg.n)
        fermi = sc.with_(statistics="fermion", n=None, n_up=up, n_down=down)
        return [closed.delta_fb(sc, fermi)]
    raise ConfigError("reduction", red)


def _safe_point(args):
    sweep, point = args
    try:
        return evaluate_point(sweep, point), ""
    except (ConfigError, NumericalFailure, ValueError, np.linalg.LinAlgError,
            RuntimeError) as exc:
        return None, f"{type(exc).__name__}: {exc}".replace(",", ";").replace("\n", " ")


def worker_count() -> int:
    env = os.environ.get("STARKBAT_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise ConfigError("STARKBAT_THREADS", f"not an integer: {env!r}") from None
    return os.cpu_count() or 1


def sweep_rows(sweep: SweepConfig, workers: Optional[int] = None) -> list[tuple]:
    points = list(sweep.grid())
    workers = worker_count() if workers is None else workers
    jobs = [(sweep, p) for p in points]
    if workers > 1 and len(points) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_safe_point, jobs))
    else:
        results = [_safe_point(j) for j in jobs]
    return [(p, vals, err) for p, (vals, err) in zip(points, results)]


def sweep(sweep_cfg: SweepConfig, provenance: Optional[list[str]] = None,
          workers: Optional[int] = None) -> str:
    """CSV with one row per grid point, in grid order, plus an ``error`` column."""
    cols = [a.field for a in sweep_cfg.axes] + _reduction_columns(sweep_cfg.reduction)
    ncol = len(_reduction_columns(sweep_cfg.reduction))
    rows = []
    for point, vals, err in sweep_rows(sweep_cfg, workers):
        vals = vals if vals is not None else ["nan"] * ncol
        rows.append(list(point) + list(vals) + [err])
    prov = (provenance or []) + ["sweep " + json.dumps(sweep_cfg.to_dict(), sort_keys=True)]
    return _write_csv(cols + ["error"], rows, prov)


# --- oracle checks ----------------------------------------------------------

ORACLE_TOL = 1e-9


@dataclass
class OracleReport:
    case: str
    max_deviation: float
    passed: bool
    details: list = field(default_factory=list)

    def lines(self) -> list[str]:
        out = [f"{label}: max deviation {dev:.3e}" for label, dev in self.details]
        out.append(f"{self.case}: {'PASS' if self.passed else 'FAIL'} "
                   f"(max deviation {self.max_deviation:.3e}, tol {ORACLE_TOL:g})")
        return out


def _two_site_sectors():
    return [("boson", dict(n=2)), ("fermion", dict(n_up=1, n_down=1))]


def oracle(case: str, *, rc: float = 1.0, Uc: float = 1.0, Jc: float = 1.0,
           N: int = 2, n: int = 2, J: float = 1.0, t_max: float = 20.0,
           samples: int = 1000) -> OracleReport:
    """Compare numerically evolved work with a closed-form curve at ``samples`` times."""
    t = np.linspace(0.0, t_max, samples)
    P = HubbardParams
    runs = []
    if case == "prop1":
        for stat, sec in _two_site_sectors():
            sc = ChargingScenario(stat, 2, P(J=J), P(U=Uc, r=rc), **sec)
            runs.append((stat, sc, analytic_work_oracle("prop1", t, r_c=rc, U_c=Uc)))
    elif case in ("prop2_boson", "prop2_fermion"):
        stat, sec = _two_site_sectors()[0 if case == "prop2_boson" else 1]
        sc = ChargingScenario(stat, 2, P(U=1.0), P(J=Jc), **sec)
        runs.append((stat, sc, analytic_work_oracle(case, t, J_c=Jc)))
    elif case == "prop2_stark_battery":
        for stat, sec in _two_site_sectors():
            sc = ChargingScenario(stat, 2, P(r=1.0), P(J=Jc), **sec)
            runs.append((stat, sc, analytic_work_oracle(case, t, J_c=Jc)))
    elif case == "prop3":
        up, down = matched_fermion_filling(n)
        for stat, sec in [("boson", dict(n=n)), ("fermion", dict(n_up=up, n_down=down))]:
            sc = ChargingScenario(stat, N, P(J=J), P(r=rc), **sec)
            runs.append((stat, sc, analytic_work_oracle("prop3", t, r_c=rc)))
    elif case in ("eq8", "eq8_single_particle"):
        sc = ChargingScenario("boson", N, P(J=J), P(r=rc), n=1, normalize=False)
        runs.append(("single particle", sc,
                     analytic_work_oracle("eq8_single_particle", t, r_c=rc, N=N, J=J)))
    else:
        raise ValueError(f"unknown oracle case {case!r}")
    details = []
    for label, sc, ref in runs:
        # evolve the density matrix directly rather than through WorkFunction
        rho0, Hc, Href = sc.initial_state, sc.charger_hamiltonian, sc.reference_hamiltonian
        num = np.array([closed.work(closed.evolve(rho0, Hc, s), rho0, Href) for s in t])
        details.append((label, float(np.max(np.abs(num - ref)))))
    worst = max(d for _, d in details)
    return OracleReport(case, worst, worst < ORACLE_TOL, details)


# --- figure presets ---------------------------------------------------------

@dataclass
class Preset:
    """Named configurations reproducing one figure; one CSV per entry."""

    name: str
    entries: list  # (label, RunConfig | SweepConfig)
    caption_values: dict
    defaults: dict

    def provenance(self) -> list[str]:
        lines = [f"preset {self.name}"]
        lines += [f"caption: {k} = {v}" for k, v in self.caption_values.items()]
        lines += [f"default (not in caption): {k} = {v}" for k, v in self.defaults.items()]
        return lines

    def render(self, label: str, entry, workers: Optional[int] = None) -> str:
        prov = self.provenance() + [f"curve {label}"]
        if isinstance(entry, SweepConfig):
            return sweep(entry, prov, workers)
        return run(entry, prov)


def _base(model: str, N: int, particles, battery: dict, charger: dict, **extra) -> dict:
    d = {"schema_version": SCHEMA_VERSION, "model": model, "N": N,
         "battery": battery, "charger": charger}
    if model == "bose":
        d["n"] = particles
    else:
        d["n_up"], d["n_down"] = particles
    d.update(extra)
    return d


def _linspace(lo, hi, steps):
    return [float(v) for v in np.linspace(lo, hi, steps)]


def _sectors(n_boson: int, fermi_sector):
    return [("bose", n_boson), ("fermi", fermi_sector)]


def figure_preset(name: str) -> Preset:
    """Configurations for one of ``fig2`` .. ``fig9``."""
    baths = lambda N, T=1.0: [{"site": 1, "T": T, "eta": 1e-2}, {"site": N, "T": T, "eta": 1e-2}]
    if name == "fig2":
        entries = []
        for model, parts in _sectors(4, (2, 2)):
            base = _base(model, 4, parts, {"J": 1.0}, {"U": 1.0, "r": 1.0})
            sw = SweepConfig.from_dict({
                "base": base, "reduction": "delta_pmax",
                "c2": {"battery": {"r": 1.0}, "charger": {"J": 1.0, "r": 1.0}},
                "axes": [{"field": "charger.U", "values": _linspace(0.0, 4.0, 9)},
                         {"field": "c2.charger.J", "scale_by": "charger.U",
                          "values": _linspace(0.0, 4.0, 9)}]})
            entries.append((f"{model}_delta_pmax", sw))
        return Preset(name, entries,
                      {"N": 4, "fermions": "n_up = n_down = 2", "bosons": "n = 4",
                       "C1": "battery J only, charger (U^c, r^c)",
                       "C2": "battery r only, charger (J^c, r^c)",
                       "axes": "U^c/r^c (C1) and J^c/U^c (C2)"},
                      {"J (C1 battery)": 1.0, "r (C2 battery)": 1.0, "r^c": 1.0,
                       "axis ranges": "0..4, 9 steps"})
    if name == "fig3":
        entries = []
        for model, parts in _sectors(4, (2, 2)):
            for J in (1.0 / 3, 1.0, 3.0):
                base = _base(model, 4, parts, {"J": J, "U": 1.0}, {"U": 1.0})
                sw = SweepConfig.from_dict({"base": base, "reduction": "pmax", "axes": [
                    {"field": "charger.r", "values": _linspace(0.0, 3.0, 31)}]})
                entries.append((f"{model}_J{J:.3g}_U1", sw))
        return Preset(name, entries, {"N": 4, "particles": 4, "axis": "r^c/U^c"},
                      {"U^c": 1.0, "battery U": 1.0, "battery J/U": "1/3, 1, 3",
                       "axis range": "0..3, 31 steps"})
    if name == "fig4":
        entries = []
        for beta, ratio in [(100.0, 0.0), (100.0, 0.5), (100.0, 1.0), (10.0, 1.0), (1.0, 1.0)]:
            base = _base("bose", 4, 4, {"J": 1.0}, {"U": 1.0, "r": ratio},
                         initial={"kind": "gibbs", "beta": beta})
            sw = SweepConfig.from_dict({"base": base, "reduction": "delta_fb", "axes": [
                {"field": "battery.U", "values": _linspace(0.0, 10.0, 41)}]})
            entries.append((f"beta{beta:g}_ratio{ratio:g}", sw))
        return Preset(name, entries,
                      {"N": 4, "bosons": "n = N", "fermions": "n_up = n_down = N/2",
                       "beta (a)": 100, "beta (b)": "varied", "r^c/U^c (b)": 1},
                      {"U^c": 1.0, "J": 1.0, "r^c/U^c (a)": "0, 0.5, 1",
                       "beta (b)": "100, 10, 1", "axis range": "U/J 0..10, 41 steps"})
    if name == "fig5":
        entries = []
        for model, parts in _sectors(3, (2, 1)):
            for ratio in (0.0, 0.5, 1.0):
                base = _base(model, 3, parts, {"J": 1.0, "U": 3.0}, {"U": 1.0, "r": ratio})
                sw = SweepConfig.from_dict({"base": base, "reduction": "pmax", "axes": [
                    {"field": "N", "values": [3, 4, 5, 6, 7, 8]}]})
                entries.append((f"{model}_ratio{ratio:g}", sw))
        return Preset(name, entries,
                      {"J": 1, "r": 0, "U": 3, "J^c": 0, "bosons": "n = 3",
                       "fermions": "n_up = 2, n_down = 1"},
                      {"U^c": 1.0, "r^c/U^c": "0, 0.5, 1", "N range": "3..8"})
    if name == "fig6":
        entries = []
        for model, parts in _sectors(1, (1, 0)):
            for ratio in (0.0, 1.0):
                base = _base(model, 6, parts, {"J": 1.0, "U": 3.0}, {"U": 1.0, "r": ratio})
                sw = SweepConfig.from_dict({"base": base, "reduction": "pmax", "axes": [
                    {"field": "n", "values": [1, 2, 3, 4, 5, 6]}]})
                entries.append((f"{model}_ratio{ratio:g}", sw))
        return Preset(name, entries, {"N": 6, "axis": "particle number n"},
                      {"battery": "J = 1, U = 3", "U^c": 1.0, "r^c/U^c": "0, 1",
                       "fermion split": "n_up = ceil(n/2), n_down = floor(n/2)"})
    if name in ("fig7", "fig9"):
        initial = {"kind": "ground"} if name == "fig7" else {"kind": "top"}
        entries = []
        for model, parts in _sectors(4, (2, 2)):
            for label, bat in [("J", {"J": 1.0}), ("Jr", {"J": 1.0, "r": 1.0}),
                               ("JU", {"J": 1.0, "U": 1.0}),
                               ("JUr", {"J": 1.0, "U": 1.0, "r": 1.0})]:
                cfg = RunConfig.from_dict(_base(
                    model, 4, parts, bat, {}, initial=initial, dynamics="open",
                    baths=baths(4), time={"t_max": 3000.0, "points": 301},
                    outputs=["work", "ergotropy"]))
                entries.append((f"{model}_{label}", cfg))
        caption = {"N": 4, "bosons": "n = 4", "fermions": "n_up = n_down = 2",
                   "T_E1 = T_EL": 1, "charger": "none"}
        if name == "fig7":
            caption["eta"] = 1e-2
            caption["initial"] = "battery ground state"
        else:
            caption["J"] = 1
            caption["initial"] = "maximally charged (top eigenstate)"
        return Preset(name, entries, caption,
                      {"nonzero U, r": 1.0, "omega_c": DEFAULT_OMEGA_C,
                       **({"eta": 1e-2} if name == "fig9" else {}),
                       "time grid": "0..3000, 301 points"})
    if name == "fig8":
        entries = []
        for model, parts in _sectors(2, (1, 1)):
            for axis in ("r", "U"):
                base = _base(model, 2, parts, {"J": 1.0, "U": 1.0, "r": 1.0}, {"J": 1.0},
                             dynamics="open", baths=baths(2))
                sw = SweepConfig.from_dict({"base": base, "reduction": "steady_ergotropy",
                                            "axes": [{"field": f"charger.{axis}",
                                                      "values": _linspace(0.0, 8.0, 33)}]})
                entries.append((f"{model}_{axis}c_over_Jc", sw))
        return Preset(name, entries,
                      {"battery": "J = r = U = 1", "N": 2, "bosons": "n = 2",
                       "fermions": "n_up = n_down = 1", "T": 1, "eta": 1e-2},
                      {"J^c": 1.0, "omega_c": DEFAULT_OMEGA_C, "axis range": "0..8, 33 steps"})
    raise ValueError(f"unknown preset {name!r}; valid: {', '.join(PRESETS)}")


PRESETS = ("fig2", "fig3", "fig4", "fig5", "fig6", "fig7", "fig8", "fig9")
