"""Command-line front end.

Commands:

* ``spectrum`` -- eigenvalues and unit-eigenvalue counts of one instance.
* ``report``   -- full bound report for one instance.
* ``verify``   -- randomized harness: seeded instances, per-theorem tally.
* ``random``   -- emit one seeded random instance as OHG text.
* ``examples`` -- list or run the built-in instances against their goldens.

Exit codes: 0 success, 1 verification/golden failure, 2 usage or input
error.  ``OHG_EXAMPLES_DIR`` overrides where ``examples`` writes files.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import os
import random
import sys
from dataclasses import dataclass

from . import builtin
from ._fmt import dumps
from .hypercore import (
    OHGError,
    OrientedHypergraph,
    parse_ohg,
    random_graph,
    random_hypergraph,
    serialize_ohg,
)
from .partition import HARD_CAP
from .spectral import EPS_EQ, spectrum
from .vectorchrom import EPS_SDP
from .verdict import EPS_K_REPORT, BoundReport, verify_report

_SECTION_ROWS = (
    "inertia",
    "ratio",
    "sandwich",
    "chi_v_lower",
    "chi_lower",
    "partition",
    "unity",
    "unity_graph_equality",
    "trace",
)


@dataclass(frozen=True)
class RunConfig:
    """Validated shared settings for one CLI invocation."""

    command: str
    input_path: str | None = None
    output_format: str = "text"
    lambda_grid: tuple[float, ...] = (1.0,)
    eps_eq: float = EPS_EQ
    eps_sdp: float = EPS_SDP
    eps_k: float = EPS_K_REPORT
    seed: int = 0
    trials: int = 1
    max_n: int = 8
    max_m: int = 8
    graph_only: bool = False
    jobs: int = 1

    def __post_init__(self):
        if min(self.eps_eq, self.eps_sdp, self.eps_k) <= 0:
            raise OHGError("tolerances must be positive")
        if self.trials < 1:
            raise OHGError("trials must be >= 1")
        if not 1 <= self.max_n <= 64:
            raise OHGError("max-n must be within 1..64")
        if self.max_m < 1:
            raise OHGError("max-m must be >= 1")
        if any(lam < 0 for lam in self.lambda_grid):
            raise OHGError("lambda grid values must be >= 0")
        if self.jobs < 1:
            raise OHGError("jobs must be >= 1")
        if self.output_format not in ("text", "json"):
            raise OHGError(f"unknown format {self.output_format!r}")


def _config(args: argparse.Namespace, command: str) -> RunConfig:
    return RunConfig(
        command=command,
        input_path=getattr(args, "input", None),
        output_format=args.format,
        lambda_grid=tuple(getattr(args, "lambda_grid", (1.0,))),
        eps_eq=getattr(args, "eps_eq", EPS_EQ),
        eps_sdp=getattr(args, "eps_sdp", EPS_SDP),
        eps_k=getattr(args, "eps_k", EPS_K_REPORT),
        seed=getattr(args, "seed", 0),
        trials=getattr(args, "trials", 1),
        max_n=getattr(args, "max_n", 8),
        max_m=getattr(args, "max_m", 8),
        graph_only=getattr(args, "graph_only", False),
        jobs=getattr(args, "jobs", 1),
    )


def _read_instance(path: str) -> OrientedHypergraph:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise OHGError(f"cannot read {path}: {exc.strerror}") from exc
    return parse_ohg(text)


def draw_trial_instance(
    seed: int, trial: int, max_n: int, max_m: int, graph_only: bool = False
) -> OrientedHypergraph:
    """Deterministic per-trial instance: seeds derive from (seed, trial)."""
    rng = random.Random(seed * 1_000_003 + trial)
    if graph_only:
        n = rng.randint(2, max(2, max_n))
        m = rng.randint(1, max_m)
        return random_graph(n, m, rng.getrandbits(32))
    n = rng.randint(1, max_n)
    m = rng.randint(1, max_m)
    return random_hypergraph(n, m, (1, n), rng.getrandbits(32))


def section_outcomes(report: BoundReport) -> dict[str, str]:
    """Collapse a report into per-section holds / n/a / fail tags."""

    def of(h: bool | None) -> str:
        if h is None:
            return "na"
        return "holds" if h else "fail"

    out = {
        "inertia": of(report.inertia.holds),
        "ratio": of(report.ratio.holds),
        "sandwich": of(report.sandwich.holds),
        "chi_v_lower": of(report.chi_v_lower.holds),
        "chi_lower": of(report.chi_lower.holds),
        "trace": of(report.trace.holds),
    }
    if report.partition_skipped or report.unity is None:
        out["partition"] = "na"
        out["unity"] = "na"
        out["unity_graph_equality"] = "na"
    else:
        flags = [e.holds for e in report.partition_at if e.holds is not None]
        out["partition"] = "na" if not flags else ("holds" if all(flags) else "fail")
        out["unity"] = of(report.unity.holds)
        out["unity_graph_equality"] = of(report.unity.graph_equality)
    return out


def _trial_worker(args) -> tuple[int, str, BoundReport]:
    trial, cfg = args
    g = draw_trial_instance(cfg.seed, trial, cfg.max_n, cfg.max_m, cfg.graph_only)
    report = verify_report(
        g,
        cfg.lambda_grid,
        eps_eq=cfg.eps_eq,
        eps_sdp=cfg.eps_sdp,
        eps_k=cfg.eps_k,
    )
    return trial, serialize_ohg(g), report


def run_trials(cfg: RunConfig) -> list[tuple[int, str, BoundReport]]:
    """Run the randomized harness; results come back in trial order."""
    work = [(trial, cfg) for trial in range(cfg.trials)]
    if cfg.jobs > 1:
        try:
            with concurrent.futures.ProcessPoolExecutor(cfg.jobs) as pool:
                return list(pool.map(_trial_worker, work, chunksize=8))
        except (OSError, concurrent.futures.process.BrokenProcessPool):
            pass  # fall back to in-process execution
    return [_trial_worker(item) for item in work]


def cmd_spectrum(args: argparse.Namespace) -> int:
    cfg = _config(args, "spectrum")
    g = _read_instance(cfg.input_path)
    summ = spectrum(g, cfg.eps_eq)
    if cfg.output_format == "json":
        print(summ.to_json())
    else:
        print("eigenvalues: " + " ".join(f"{x:.12g}" for x in summ.eigenvalues))
        print(
            f"counts: below_one={summ.below_one}"
            f" at_one={summ.at_one} above_one={summ.above_one}"
        )
    return 0


def cmd_report(args: argparse.Namespace) -> int:
    cfg = _config(args, "report")
    g = _read_instance(cfg.input_path)
    report = verify_report(
        g,
        cfg.lambda_grid,
        eps_eq=cfg.eps_eq,
        eps_sdp=cfg.eps_sdp,
        eps_k=cfg.eps_k,
    )
    if cfg.output_format == "json":
        print(report.to_json())
    else:
        print(report.to_text())
    return 0 if report.all_hold else 1


def cmd_random(args: argparse.Namespace) -> int:
    if args.graph_only:
        g = random_graph(args.n, args.m, args.seed)
    else:
        g = random_hypergraph(args.n, args.m, (args.size_min, args.size_max), args.seed)
    sys.stdout.write(serialize_ohg(g))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    cfg = _config(args, "verify")
    results = run_trials(cfg)
    tally = {row: {"holds": 0, "na": 0, "fail": 0} for row in _SECTION_ROWS}
    failures: list[int] = []
    for trial, text, report in results:
        outcomes = section_outcomes(report)
        for row in _SECTION_ROWS:
            tag = outcomes[row]
            tally[row]["fail" if tag == "fail" else tag] += 1
        if not report.all_hold:
            failures.append(trial)
            os.makedirs(args.failures_dir, exist_ok=True)
            path = os.path.join(args.failures_dir, f"trial-{trial}.ohg")
            with open(path, "w", encoding="utf-8") as fh:
                fh.write(f"# trial {trial} of seed {cfg.seed}\n")
                fh.write(text)
    if cfg.output_format == "json":
        print(
            dumps(
                {
                    "config": {
                        "trials": cfg.trials,
                        "seed": cfg.seed,
                        "max_n": cfg.max_n,
                        "max_m": cfg.max_m,
                        "graph_only": cfg.graph_only,
                        "lambda_grid": list(cfg.lambda_grid),
                    },
                    "summary": tally,
                    "failures": failures,
                }
            )
        )
    else:
        print(
            f"trials={cfg.trials} seed={cfg.seed} max_n={cfg.max_n}"
            f" max_m={cfg.max_m} graph_only={'yes' if cfg.graph_only else 'no'}"
        )
        print(f"{'section':<22}{'holds':>7}{'n/a':>7}{'fail':>7}")
        for row in _SECTION_ROWS:
            t = tally[row]
            print(f"{row:<22}{t['holds']:>7}{t['na']:>7}{t['fail']:>7}")
        print(f"failures: {len(failures)}")
        if failures:
            print(f"failing instances written to {args.failures_dir}/")
    return 0 if not failures else 1


def _examples_dir(args: argparse.Namespace) -> str:
    if args.output_dir:
        return args.output_dir
    return os.environ.get("OHG_EXAMPLES_DIR", "ohg-examples")


def check_example(ex: builtin.BuiltinExample, report: BoundReport, eps_k: float) -> list[str]:
    """Compare one report against the example's golden values."""
    problems: list[str] = []
    spec_tol = 1e-9
    chiv_tol = max(10.0 * eps_k, 1e-3)
    if len(report.eigenvalues) != len(ex.eigenvalues) or any(
        abs(a - b) > spec_tol for a, b in zip(report.eigenvalues, ex.eigenvalues)
    ):
        problems.append(f"eigenvalues {report.eigenvalues} != {ex.eigenvalues}")
    inv = report.invariants
    for label, got, want in (
        ("alpha", inv.alpha, ex.alpha),
        ("alpha_w", inv.alpha_w, ex.alpha_w),
        ("omega", inv.omega, ex.omega),
        ("chi", inv.chi, ex.chi),
        ("inertia bound", report.inertia.bound, ex.inertia_bound),
    ):
        if got != want:
            problems.append(f"{label} {got} != {want}")
    if abs(report.chi_v - ex.chi_v) > chiv_tol:
        problems.append(f"chi_v {report.chi_v} != {ex.chi_v}")
    if ex.ratio_bound is None:
        if report.ratio.applicable:
            problems.append("ratio bound unexpectedly applicable")
    elif (
        report.ratio.bound is None
        or abs(report.ratio.bound - ex.ratio_bound) > spec_tol
        or report.ratio.equality != ex.ratio_equality
    ):
        problems.append(f"ratio bound {report.ratio.bound} != {ex.ratio_bound}")
    if ex.chi_v_lower is None:
        if report.chi_v_lower.applicable:
            problems.append("spectral chi_v lower bound unexpectedly applicable")
    elif report.chi_v_lower.bound is None or abs(report.chi_v_lower.bound - ex.chi_v_lower) > spec_tol:
        problems.append(f"chi_v lower {report.chi_v_lower.bound} != {ex.chi_v_lower}")
    if report.unity is None or (report.unity.n_geq, report.unity.n_leq) != (
        ex.unity_number,
        ex.unity_number,
    ):
        problems.append(f"unity partition number != {ex.unity_number}")
    if not report.all_hold:
        problems.append("not all applicable checks hold")
    return problems


def cmd_examples(args: argparse.Namespace) -> int:
    cfg = _config(args, "examples")
    outdir = _examples_dir(args)
    if not args.run:
        for ex in builtin.EXAMPLES:
            print(f"{ex.name:<12} {os.path.join(outdir, ex.name + '.ohg'):<34} {ex.summary}")
        return 0
    os.makedirs(outdir, exist_ok=True)
    all_ok = True
    rows = []
    for ex in builtin.EXAMPLES:
        path = os.path.join(outdir, ex.name + ".ohg")
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(ex.ohg)
        g = _read_instance(path)
        report = verify_report(
            g,
            cfg.lambda_grid,
            eps_eq=cfg.eps_eq,
            eps_sdp=cfg.eps_sdp,
            eps_k=cfg.eps_k,
        )
        problems = check_example(ex, report, cfg.eps_k)
        all_ok = all_ok and not problems
        rows.append((ex, path, report, problems))
    if cfg.output_format == "json":
        print(
            dumps(
                {
                    "examples": [
                        {
                            "name": ex.name,
                            "path": path,
                            "matched": not problems,
                            "problems": problems,
                            "report": report.to_dict(),
                        }
                        for ex, path, report, problems in rows
                    ],
                    "all_matched": all_ok,
                }
            )
        )
    else:
        for ex, path, report, problems in rows:
            status = "ok" if not problems else "MISMATCH"
            print(f"== {ex.name} ({path}): {status}")
            for p in problems:
                print(f"   ! {p}")
            print(report.to_text())
            print()
        print("all goldens matched" if all_ok else "golden mismatches found")
    return 0 if all_ok else 1


def _lambda_grid(text: str) -> list[float]:
    try:
        return [float(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad lambda grid {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ohg",
        description="Oriented-hypergraph spectra, invariants, and bound verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, with_tolerances: bool = True) -> None:
        p.add_argument("--format", choices=("text", "json"), default="text")
        if with_tolerances:
            p.add_argument("--eps-eq", type=float, default=EPS_EQ)
            p.add_argument("--eps-sdp", type=float, default=EPS_SDP)
            p.add_argument("--eps-k", type=float, default=EPS_K_REPORT)

    p = sub.add_parser("spectrum", help="print the spectrum of an OHG file")
    p.add_argument("--input", required=True)
    common(p)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("report", help="print the full bound report of an OHG file")
    p.add_argument("--input", required=True)
    p.add_argument("--lambda-grid", type=_lambda_grid, default=[1.0])
    common(p)
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("verify", help="randomized verification harness")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--max-m", type=int, default=8)
    p.add_argument("--graph-only", action="store_true")
    p.add_argument("--lambda-grid", type=_lambda_grid, default=[1.0])
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--failures-dir", default="ohg-failures")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("random", help="emit one seeded random instance")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--size-min", type=int, default=1)
    p.add_argument("--size-max", type=int, default=0, help="defaults to n")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--graph-only", action="store_true")
    p.set_defaults(func=cmd_random, format="text")

    p = sub.add_parser("examples", help="list or run the built-in instances")
    p.add_argument("--list", action="store_true", dest="list_only")
    p.add_argument("--run", action="store_true")
    p.add_argument("--output-dir", default="")
    p.add_argument("--lambda-grid", type=_lambda_grid, default=[1.0])
    common(p)
    p.set_defaults(func=cmd_examples)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "random" and args.size_max == 0:
        args.size_max = args.n
    try:
        return args.func(args)
    except OHGError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
