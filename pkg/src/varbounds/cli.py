"""Command-line front end: parameter scans, fuzz verification, bound
tournaments and measurement simulation.

Subcommands
-----------
scan        evaluate the analytic bounds on a Bloch-angle grid -> CSV + gnuplot script
simulate    scan plus simulated measurement statistics and error bars
fuzz        verify bound validity and tightness chains on random instances
tournament  rank the bounds per state, report win fractions

Exit codes: 0 success, 1 configuration error, 2 invariant violation
detected by fuzz, 3 I/O error.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

import numpy as np

from . import __version__
from .bounds import (
    ALL_BOUND_IDS,
    PRODUCT_BOUND_IDS,
    SUM_BOUND_IDS,
    bound_report,
    lambda_set,
)
from .expsim import SimConfig, empirical_bound_report
from .qmath import HermitianMatrix, Seed, random_hermitian, random_pure_state
from .quantum import Observable, PureState, u_vector
from .spinhalf import is_pauli_triple, pauli_triple

__all__ = [
    "CSV_SCHEMA",
    "CliError",
    "FuzzResult",
    "GridSpec",
    "ScanConfig",
    "TournamentResult",
    "load_observable_set",
    "main",
    "run_fuzz",
    "run_scan",
    "run_tournament",
    "write_scan",
]

CSV_SCHEMA = (
    "theta",
    "phi",
    "lhs_product",
    "robertson",
    "mondal_product",
    "carlson_product",
    "spin_pro_hr",
    "spin_pro_fd",
    "spin_pro_closed",
    "lhs_sum",
    "mondal_sum",
    "additive",
    "variance_decomposition",
    "spin_sum_song",
    "spin_sum_fd",
)

_PRODUCT_COLS = ("lhs_product",) + PRODUCT_BOUND_IDS
_SUM_COLS = ("lhs_sum",) + SUM_BOUND_IDS

VALIDITY_SLACK = 1e-9
CHAIN_SLACK = 1e-12
TIE_SLACK = 1e-12

_TWO_PI = 2.0 * np.pi


class CliError(Exception):
    """Configuration problem; maps to exit code 1."""


def _fmt(x: float) -> str:
    """Fixed 12-significant-digit scientific format used everywhere."""
    return f"{x:.11e}"


@dataclass(frozen=True)
class GridSpec:
    start: float
    end: float
    count: int

    def __post_init__(self):
        if self.count < 1:
            raise CliError(f"grid count must be >= 1, got {self.count}")
        if self.end < self.start:
            raise CliError(f"grid end {self.end} below start {self.start}")

    def points(self) -> np.ndarray:
        return np.linspace(self.start, self.end, self.count)


@dataclass(frozen=True)
class ScanConfig:
    observables: tuple[Observable, ...]
    set_name: str
    theta: GridSpec
    phi: GridSpec
    mode: str = "both"
    sim: SimConfig | None = None
    seed: Seed = Seed(0)

    def __post_init__(self):
        if self.mode not in ("product", "sum", "both"):
            raise CliError(f"mode must be product, sum or both, got {self.mode!r}")
        if any(A.dim != 2 for A in self.observables):
            raise CliError("scan states are Bloch-parameterized; the observable set must be dim 2")
        if not (0.0 <= self.theta.start and self.theta.end <= np.pi):
            raise CliError("theta grid must lie within [0, pi]")
        # The azimuth grid may include the 2*pi endpoint (it wraps to 0).
        if not (0.0 <= self.phi.start and self.phi.end <= _TWO_PI):
            raise CliError("phi grid must lie within [0, 2*pi]")


def load_observable_set(spec: str) -> tuple[str, tuple[Observable, ...]]:
    """Resolve ``pauli3`` or ``file:<path>`` into named observables.

    A file is a JSON array of matrices, each a dim x dim array of
    [re, im] pairs, row-major; Hermiticity is validated on load.
    """
    if spec == "pauli3":
        return "pauli3", pauli_triple()
    if spec.startswith("file:"):
        path = Path(spec[5:])
        with open(path) as fh:
            data = json.load(fh)
        if not isinstance(data, list) or not data:
            raise CliError(f"{path}: expected a nonempty JSON array of matrices")
        observables = []
        for k, raw in enumerate(data):
            arr = np.asarray(raw, dtype=float)
            if arr.ndim != 3 or arr.shape[0] != arr.shape[1] or arr.shape[2] != 2:
                raise CliError(f"{path}: matrix {k} is not a square array of [re, im] pairs")
            observables.append(Observable(HermitianMatrix(arr[..., 0] + 1j * arr[..., 1])))
        if len({A.dim for A in observables}) != 1:
            raise CliError(f"{path}: matrices must share one dimension")
        if len(observables) < 2:
            raise CliError(f"{path}: need at least 2 observables")
        return path.name, tuple(observables)
    raise CliError(f"unknown observable set {spec!r} (use pauli3 or file:<path>)")


# ---------------------------------------------------------------------------
# scan / simulate


def _populated_columns(applicable: dict[str, bool]) -> list[str]:
    return [
        c
        for c in CSV_SCHEMA[2:]
        if c in ("lhs_product", "lhs_sum") or applicable[c]
    ]


def run_scan(cfg: ScanConfig) -> tuple[list[str], list[dict[str, object]]]:
    """Evaluate the grid.  Returns (populated value columns, rows).

    Rows are ordered theta-major then phi.  Each row maps every schema
    column to a float or None, plus ``(col, 'emp')`` / ``(col, 'err')``
    entries when simulation is enabled.
    """
    obs = cfg.observables
    rows: list[dict[str, object]] = []
    populated: list[str] | None = None
    index = 0
    for theta in cfg.theta.points():
        for phi in cfg.phi.points():
            psi = PureState.bloch(float(theta), float(phi) % _TWO_PI)
            rep = bound_report(obs, psi)
            if populated is None:
                populated = _populated_columns(rep.applicable)
            row: dict[str, object] = {c: None for c in CSV_SCHEMA}
            row["theta"] = float(theta)
            row["phi"] = float(phi)
            row["lhs_product"] = rep.lhs_product
            row["lhs_sum"] = rep.lhs_sum
            row.update(rep.values)
            if cfg.sim is not None:
                sim = dataclasses.replace(cfg.sim, seed=cfg.seed.mix(index))
                emp = empirical_bound_report(obs, psi, sim)
                named = dict(emp.values)
                named["lhs_product"] = emp.lhs_product
                named["lhs_sum"] = emp.lhs_sum
                for col in populated:
                    row[(col, "emp")] = named[col].value
                    row[(col, "err")] = named[col].std_error
            rows.append(row)
            index += 1
    assert populated is not None
    return populated, rows


def _csv_text(cfg: ScanConfig, populated: list[str], rows: list[dict[str, object]]) -> str:
    header = list(CSV_SCHEMA)
    if cfg.sim is not None:
        for col in populated:
            header += [f"{col}_emp", f"{col}_err"]
    from .bounds import _has_degenerate_spectrum

    degenerate = "; degenerate spectra present" if _has_degenerate_spectrum(cfg.observables) else ""
    lines = [
        f"# varbounds {__version__}; set={cfg.set_name}; "
        f"pauli eigenvalue convention: +1/-1; angles in radians{degenerate}",
        ",".join(header),
    ]
    for row in rows:
        cells = [_fmt(row[c]) if row[c] is not None else "" for c in CSV_SCHEMA]
        if cfg.sim is not None:
            for col in populated:
                cells += [_fmt(row[(col, "emp")]), _fmt(row[(col, "err")])]
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def _gnuplot_text(cfg: ScanConfig, csv_name: str, populated: list[str]) -> str:
    surface = cfg.theta.count > 1 and cfg.phi.count > 1
    x_col, x_label = (1, "theta (rad)") if cfg.theta.count > 1 else (2, "phi (rad)")
    col_index = {c: i + 1 for i, c in enumerate(CSV_SCHEMA)}
    emp_index = {}
    if cfg.sim is not None:
        base = len(CSV_SCHEMA)
        for k, col in enumerate(populated):
            emp_index[col] = (base + 2 * k + 1, base + 2 * k + 2)

    def family(cols: tuple[str, ...]) -> list[str]:
        return [c for c in cols if c in populated]

    blocks = []
    modes = ("product", "sum") if cfg.mode == "both" else (cfg.mode,)
    for m in modes:
        cols = family(_PRODUCT_COLS if m == "product" else _SUM_COLS)
        if surface:
            parts = [
                f"'{csv_name}' using 1:2:{col_index[c]} with lines title '{c}'" for c in cols
            ]
            blocks.append(
                f"set dgrid3d {cfg.theta.count},{cfg.phi.count}\n"
                f"set xlabel 'theta (rad)'\nset ylabel 'phi (rad)'\n"
                "splot " + ", \\\n      ".join(parts)
            )
        else:
            parts = [
                f"'{csv_name}' using {x_col}:{col_index[c]} with lines title '{c}'" for c in cols
            ]
            for c in cols:
                if c in emp_index:
                    v, e = emp_index[c]
                    parts.append(
                        f"'{csv_name}' using {x_col}:{v}:{e} with yerrorbars title '{c} (sim)'"
                    )
            blocks.append(f"set xlabel '{x_label}'\nplot " + ", \\\n     ".join(parts))
    body = "\npause -1\n".join(blocks)
    return (
        f"# companion plot script for {csv_name}\n"
        "set datafile separator ','\n"
        "set datafile missing ''\n"
        f"{body}\npause -1\n"
    )


def write_scan(cfg: ScanConfig, out_path: Path) -> None:
    """Run the scan and write the CSV plus its companion gnuplot script."""
    populated, rows = run_scan(cfg)
    out_path = Path(out_path)
    with open(out_path, "w", newline="") as fh:
        fh.write(_csv_text(cfg, populated, rows))
    script = out_path.with_suffix(".gp")
    with open(script, "w", newline="") as fh:
        fh.write(_gnuplot_text(cfg, out_path.name, populated))


# ---------------------------------------------------------------------------
# fuzz


@dataclass
class _CheckStat:
    checked: int = 0
    violations: int = 0
    worst: float | None = None  # smallest margin (most negative is worst)

    def record(self, margin: float, violated: bool) -> None:
        self.checked += 1
        if violated:
            self.violations += 1
        if self.worst is None or margin < self.worst:
            self.worst = margin


@dataclass
class FuzzResult:
    seed: Seed
    trials: int
    dims: tuple[int, ...]
    n_obs: tuple[int, ...]
    validity: dict[str, _CheckStat] = field(default_factory=dict)
    chains: dict[str, _CheckStat] = field(default_factory=dict)
    invariance: dict[str, _CheckStat] = field(default_factory=dict)

    @property
    def total_violations(self) -> int:
        groups = (self.validity, self.chains, self.invariance)
        return sum(stat.violations for group in groups for stat in group.values())

    def render(self) -> str:
        lines = [
            f"varbounds {__version__} fuzz report",
            f"seed={self.seed.value} trials={self.trials} "
            f"dims={','.join(map(str, self.dims))} n_obs={','.join(map(str, self.n_obs))}",
            f"validity (margin = lhs - bound; violation when margin < -{VALIDITY_SLACK:g}*max(1,|lhs|)):",
        ]
        for name in ALL_BOUND_IDS:
            if name in self.validity:
                lines.append(self._line(name, self.validity[name]))
        lines.append(f"chains (violation when margin < -{CHAIN_SLACK:g}):")
        for name in ("carlson_vs_mondal_product", "additive_vs_mondal_sum",
                     "additive_vs_simple_sum", "rank_pairing"):
            if name in self.chains:
                lines.append(self._line(name, self.chains[name]))
        lines.append(
            f"invariance (margin = -scaled deviation; violation when deviation > {CHAIN_SLACK:g}*max(1,|value|)):"
        )
        for name in ("permutation", "shift"):
            if name in self.invariance:
                lines.append(self._line(name, self.invariance[name]))
        verdict = "OK" if self.total_violations == 0 else "VIOLATIONS DETECTED"
        lines.append(f"result: {verdict} violations={self.total_violations}")
        return "\n".join(lines) + "\n"

    @staticmethod
    def _line(name: str, stat: _CheckStat) -> str:
        worst = _fmt(stat.worst) if stat.worst is not None else "n/a"
        return (
            f"  {name:<26} checked={stat.checked:<8} "
            f"violations={stat.violations:<6} worst_margin={worst}"
        )


def _scaled_deviation(a: float, b: float) -> float:
    return abs(a - b) / max(1.0, abs(a), abs(b))


def run_fuzz(
    dims: Sequence[int], n_obs: Sequence[int], trials: int, seed: Seed
) -> FuzzResult:
    """Check bound validity, tightness chains and invariances on random
    Gaussian observables and Haar states.  Fully deterministic per seed."""
    dims = tuple(sorted(set(int(d) for d in dims)))
    n_obs = tuple(sorted(set(int(n) for n in n_obs)))
    if not dims or any(not 2 <= d <= 6 for d in dims):
        raise CliError(f"dims must be a nonempty subset of [2, 6], got {dims}")
    if not n_obs or any(not 2 <= n <= 4 for n in n_obs):
        raise CliError(f"n_obs must be a nonempty subset of [2, 4], got {n_obs}")
    if trials < 1:
        raise CliError(f"trials must be >= 1, got {trials}")

    result = FuzzResult(seed=seed, trials=trials, dims=dims, n_obs=n_obs)

    def stat(group: dict[str, _CheckStat], name: str) -> _CheckStat:
        if name not in group:
            group[name] = _CheckStat()
        return group[name]

    for trial in range(trials):
        ts = seed.mix(trial)
        rng = ts.generator()
        dim = dims[int(rng.integers(len(dims)))]
        n = n_obs[int(rng.integers(len(n_obs)))]
        perm = rng.permutation(n)
        shifts = rng.normal(size=n)
        pair_perms = [rng.permutation(dim) for _ in range(20)] if n == 2 else []

        psi = PureState(random_pure_state(ts.mix(0), dim))
        obs = [Observable(random_hermitian(ts.mix(i + 1), dim)) for i in range(n)]
        rep = bound_report(obs, psi)

        for name, val in rep.values.items():
            lhs = rep.lhs_product if name in PRODUCT_BOUND_IDS else rep.lhs_sum
            margin = lhs - val
            stat(result.validity, name).record(margin, margin < -VALIDITY_SLACK * max(1.0, abs(lhs)))

        if n == 2:
            m = rep.values["carlson_product"] - rep.values["mondal_product"]
            stat(result.chains, "carlson_vs_mondal_product").record(m, m < -CHAIN_SLACK)
            m = rep.values["additive"] - rep.values["mondal_sum"]
            stat(result.chains, "additive_vs_mondal_sum").record(m, m < -CHAIN_SLACK)
            u0, u1 = u_vector(obs[0], psi), u_vector(obs[1], psi)
            base = float(np.dot(u0, u1))
            worst = min(base - float(np.dot(u0, u1[p])) for p in pair_perms)
            stat(result.chains, "rank_pairing").record(worst, worst < -CHAIN_SLACK)
        else:
            ls = lambda_set(obs, psi)
            m = rep.values["additive"] - ls.sum_of_squares() / (2.0 * (n - 1))
            stat(result.chains, "additive_vs_simple_sum").record(m, m < -CHAIN_SLACK)

        shuffled = bound_report([obs[i] for i in perm], psi)
        dev = max(
            _scaled_deviation(rep.values[name], shuffled.values[name])
            for name in ("carlson_product", "additive")
        )
        stat(result.invariance, "permutation").record(-dev, dev > CHAIN_SLACK)

        eye = np.eye(dim)
        shifted_obs = [
            Observable(HermitianMatrix(A.matrix + c * eye)) for A, c in zip(obs, shifts)
        ]
        shifted_rep = bound_report(shifted_obs, psi)
        dev = max(
            _scaled_deviation(rep.values[name], shifted_rep.values[name])
            for name in rep.values
        )
        dev = max(
            dev,
            _scaled_deviation(rep.lhs_product, shifted_rep.lhs_product),
            _scaled_deviation(rep.lhs_sum, shifted_rep.lhs_sum),
        )
        stat(result.invariance, "shift").record(-dev, dev > CHAIN_SLACK)

    return result


# ---------------------------------------------------------------------------
# tournament


@dataclass
class TournamentResult:
    set_name: str
    mode: str
    spec: str
    labels: list[str]
    product_contenders: list[str]
    sum_contenders: list[str]
    product_wins: dict[str, int]
    sum_wins: dict[str, int]
    product_losses: list[str]
    sum_losses: list[str]

    def render(self) -> str:
        lines = [
            f"varbounds {__version__} tournament report",
            f"set={self.set_name} mode={self.mode} states={len(self.labels)} spec={self.spec}",
        ]
        total = len(self.labels)
        for family, contenders, wins, losses in (
            ("product", self.product_contenders, self.product_wins, self.product_losses),
            ("sum", self.sum_contenders, self.sum_wins, self.sum_losses),
        ):
            if self.mode not in (family, "both"):
                continue
            lines.append(f"{family} contenders (wins include ties):")
            for c in contenders:
                frac = wins[c] / total
                lines.append(f"  {c:<24} wins={wins[c]:<8} fraction={frac:.9f}")
            lines.append(f"{family} losses for {contenders[0]}: {len(losses)}")
            lines.extend(f"    {label}" for label in losses)
        return "\n".join(lines) + "\n"


def _contenders(observables: Sequence[Observable]) -> tuple[list[str], list[str]]:
    if is_pauli_triple(observables):
        return (
            ["spin_pro_closed", "spin_pro_fd", "spin_pro_hr"],
            ["additive", "spin_sum_song", "spin_sum_fd"],
        )
    product = ["carlson_product"]
    sums = ["additive", "variance_decomposition"]
    if len(observables) == 2:
        product += ["robertson", "mondal_product"]
        sums += ["mondal_sum"]
    return product, sums


def run_tournament(
    observables: Sequence[Observable],
    set_name: str,
    mode: str,
    states: Sequence[PureState],
    labels: Sequence[str],
    spec: str,
) -> TournamentResult:
    """Identify the winning bound per state; ties within 1e-12 (scaled)
    count as wins for every bound achieving the maximum."""
    if mode not in ("product", "sum", "both"):
        raise CliError(f"mode must be product, sum or both, got {mode!r}")
    product_c, sum_c = _contenders(observables)
    product_wins = {c: 0 for c in product_c}
    sum_wins = {c: 0 for c in sum_c}
    product_losses: list[str] = []
    sum_losses: list[str] = []
    for psi, label in zip(states, labels):
        rep = bound_report(observables, psi)
        for contenders, wins, losses in (
            (product_c, product_wins, product_losses),
            (sum_c, sum_wins, sum_losses),
        ):
            vals = {c: rep.values[c] for c in contenders}
            top = max(vals.values())
            slack = TIE_SLACK * max(1.0, abs(top))
            winners = [c for c in contenders if vals[c] >= top - slack]
            for c in winners:
                wins[c] += 1
            if contenders[0] not in winners:
                losses.append(label)
    return TournamentResult(
        set_name=set_name,
        mode=mode,
        spec=spec,
        labels=list(labels),
        product_contenders=product_c,
        sum_contenders=sum_c,
        product_wins=product_wins,
        sum_wins=sum_wins,
        product_losses=product_losses,
        sum_losses=sum_losses,
    )


# ---------------------------------------------------------------------------
# argument parsing and dispatch


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # keep exit code 2 reserved for fuzz violations
        raise CliError(message)


def _grid_arg(parser: argparse.ArgumentParser, name: str, default: tuple[float, float, int]):
    parser.add_argument(
        name,
        nargs=3,
        type=float,
        default=list(default),
        metavar=("START", "END", "COUNT"),
        help=f"grid as start end count (default {default[0]:g} {default[1]:g} {default[2]})",
    )


def _to_grid(raw: Sequence[float]) -> GridSpec:
    start, end, count = raw
    if count != int(count):
        raise CliError(f"grid count must be an integer, got {count}")
    return GridSpec(float(start), float(end), int(count))


def _parse_int_list(raw: str, what: str) -> list[int]:
    try:
        return [int(tok) for tok in raw.split(",") if tok.strip() != ""]
    except ValueError:
        raise CliError(f"{what} must be a comma-separated integer list, got {raw!r}") from None


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="varbounds", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"varbounds {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--set", default="pauli3", help="observable set: pauli3 or file:<path>")
        p.add_argument("--seed", type=int, default=0, help="master seed (default 0)")

    p_scan = sub.add_parser("scan", help="analytic bound scan over a Bloch grid")
    add_common(p_scan)
    _grid_arg(p_scan, "--theta-grid", (0.0, np.pi, 61))
    _grid_arg(p_scan, "--phi-grid", (0.0, _TWO_PI, 61))
    p_scan.add_argument("--mode", choices=("product", "sum", "both"), default="both")
    p_scan.add_argument("--out", required=True, help="output CSV path")

    p_sim = sub.add_parser("simulate", help="scan with simulated counting statistics")
    add_common(p_sim)
    _grid_arg(p_sim, "--theta-grid", (0.0, np.pi, 61))
    _grid_arg(p_sim, "--phi-grid", (0.0, _TWO_PI, 61))
    p_sim.add_argument("--mode", choices=("product", "sum", "both"), default="both")
    p_sim.add_argument("--out", required=True, help="output CSV path")
    p_sim.add_argument("--shots", type=int, default=2800, help="counts per setting (default 2800)")
    p_sim.add_argument("--resamples", type=int, default=1000, help="bootstrap resamples")

    p_fuzz = sub.add_parser("fuzz", help="randomized verification of every bound")
    add_common(p_fuzz)
    p_fuzz.add_argument("--dims", default="2,3,4,5,6", help="dimensions, e.g. 2,3,4")
    p_fuzz.add_argument("--nobs", default="2,3,4", help="observable counts, e.g. 2,3")
    p_fuzz.add_argument("--trials", type=int, default=10000)

    p_t = sub.add_parser("tournament", help="per-state ranking of the bounds")
    add_common(p_t)
    _grid_arg(p_t, "--theta-grid", (0.0, np.pi, 61))
    _grid_arg(p_t, "--phi-grid", (0.0, _TWO_PI, 61))
    p_t.add_argument("--mode", choices=("product", "sum", "both"), default="both")
    p_t.add_argument(
        "--random-states",
        type=int,
        default=None,
        help="use this many Haar-random states instead of the Bloch grid",
    )
    return parser


def _seed_from(args) -> Seed:
    try:
        return Seed(args.seed)
    except ValueError as exc:
        raise CliError(str(exc)) from None


def _dispatch(args) -> int:
    if args.command in ("scan", "simulate"):
        set_name, obs = load_observable_set(args.set)
        sim = None
        if args.command == "simulate":
            try:
                sim = SimConfig(shots=args.shots, bootstrap_resamples=args.resamples)
            except ValueError as exc:
                raise CliError(str(exc)) from None
        cfg = ScanConfig(
            observables=obs,
            set_name=set_name,
            theta=_to_grid(args.theta_grid),
            phi=_to_grid(args.phi_grid),
            mode=args.mode,
            sim=sim,
            seed=_seed_from(args),
        )
        write_scan(cfg, Path(args.out))
        return 0

    if args.command == "fuzz":
        result = run_fuzz(
            _parse_int_list(args.dims, "--dims"),
            _parse_int_list(args.nobs, "--nobs"),
            args.trials,
            _seed_from(args),
        )
        sys.stdout.write(result.render())
        return 0 if result.total_violations == 0 else 2

    if args.command == "tournament":
        set_name, obs = load_observable_set(args.set)
        seed = _seed_from(args)
        if args.random_states is not None:
            if args.random_states < 1:
                raise CliError("--random-states must be >= 1")
            dim = obs[0].dim
            states = [
                PureState(random_pure_state(seed.mix(k), dim))
                for k in range(args.random_states)
            ]
            labels = [f"state={k}" for k in range(args.random_states)]
            spec = f"random:{args.random_states}"
        else:
            if any(A.dim != 2 for A in obs):
                raise CliError("grid tournaments need a dim-2 set; use --random-states")
            theta = _to_grid(args.theta_grid)
            phi = _to_grid(args.phi_grid)
            states, labels = [], []
            for t in theta.points():
                for p in phi.points():
                    states.append(PureState.bloch(float(t), float(p) % _TWO_PI))
                    labels.append(f"theta={_fmt(float(t))} phi={_fmt(float(p))}")
            spec = f"grid:{theta.count}x{phi.count}"
        result = run_tournament(obs, set_name, args.mode, states, labels, spec)
        sys.stdout.write(result.render())
        return 0

    raise CliError(f"unknown command {args.command!r}")


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _dispatch(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
