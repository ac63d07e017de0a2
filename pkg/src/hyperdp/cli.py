"""Command line front end.

    hyperdp dpexact --gen loose_cycle --r 3 --p 4 --k 2
    hyperdp gap --input h.json --kmin 2 --kmax 4 --format csv
    hyperdp verify

Exit codes: 0 ok, 2 verification failure, 3 budget refusal, 4 input error.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from . import genlib
from .chromcount import boundary_profile, chromatic_polynomial, count_proper
from .dpfunc import (
    GAP_HEADER,
    dp_chromatic_number,
    dp_closed,
    dp_exact,
    dp_upper_bound,
    gap_profile,
    monte_carlo_mean,
)
from .errors import HyperDPError, InvalidConfig, ResourceLimit, VerificationFailure
from .hypercore import Hypergraph, classify, load_hypergraph
from .verify import run_all

CACHE_SCHEMA = 1
CACHE_ENV = "HYPERDP_CACHE_DIR"

EXIT_OK, EXIT_VERIFY, EXIT_BUDGET, EXIT_INPUT = 0, 2, 3, 4

COMMANDS = (
    "classify", "chrompoly", "count", "dpbound", "dpexact", "dpclosed",
    "profile", "mc", "gap", "chidp", "gen", "verify",
)
NEEDS_K = {"count", "dpbound", "dpexact", "dpclosed", "profile", "mc"}


@dataclass
class RunConfig:
    command: str
    input: Optional[str] = None
    gen: Optional[genlib.GenSpec] = None
    k: Optional[int] = None
    kmin: Optional[int] = None
    kmax: Optional[int] = None
    edge: Optional[int] = None
    trials: int = 1000
    seed: int = 0
    budget: Optional[int] = None
    format: str = "json"
    cache_dir: Optional[str] = None
    workers: int = 1
    prune: bool = False

    def check(self) -> None:
        if self.command not in COMMANDS:
            raise InvalidConfig(f"unknown command {self.command!r}")
        if self.command != "verify" and (self.input is None) == (self.gen is None):
            raise InvalidConfig("give exactly one instance source: --input or --gen")
        if self.budget is not None and self.budget <= 0:
            raise InvalidConfig("--budget must be positive")
        if self.command in NEEDS_K and self.k is None:
            raise InvalidConfig(f"{self.command} needs --k")
        if self.command == "profile" and self.edge is None:
            raise InvalidConfig("profile needs --edge")
        if self.command == "gap" and (self.kmin is None or self.kmax is None):
            raise InvalidConfig("gap needs --kmin and --kmax")
        if self.command == "chidp" and self.kmax is None:
            raise InvalidConfig("chidp needs --kmax")
        if self.format not in ("json", "csv"):
            raise InvalidConfig("--format must be json or csv")
        if self.trials < 1:
            raise InvalidConfig("--trials must be positive")

    def cache_params(self) -> dict:
        # budget, workers, format and cache location never change a result
        return {"k": self.k, "kmin": self.kmin, "kmax": self.kmax, "edge": self.edge,
                "trials": self.trials if self.command == "mc" else None,
                "seed": self.seed if self.command == "mc" else None, "prune": self.prune}


def _instance(cfg: RunConfig) -> Hypergraph:
    if cfg.input is not None:
        try:
            return load_hypergraph(cfg.input)
        except OSError as exc:
            raise InvalidConfig(f"cannot read {cfg.input}: {exc.strerror}") from None
        except json.JSONDecodeError as exc:
            raise InvalidConfig(f"{cfg.input}: bad JSON ({exc.msg})") from None
    return genlib.generate(cfg.gen)


def _compute(cfg: RunConfig, H: Hypergraph) -> dict:
    c, k, b = cfg.command, cfg.k, cfg.budget
    if c == "classify":
        return classify(H).to_json()
    if c == "chrompoly":
        return {"coeffs": [str(x) for x in chromatic_polynomial(H, b, cfg.workers).coeffs]}
    if c == "count":
        return {"k": k, "P": str(count_proper(H, k, b, cfg.workers))}
    if c == "dpbound":
        bound = dp_upper_bound(H, k)
        return {"k": k, "bound": f"{bound.numerator}/{bound.denominator}"}
    if c == "dpexact":
        return {"k": k, **dp_exact(H, k, b, cfg.prune, cfg.workers).to_json()}
    if c == "dpclosed":
        got = dp_closed(H, k)
        return {"k": k, "value": None if got is None else str(got[0]),
                "provenance": None if got is None else got[1]}
    if c == "profile":
        return boundary_profile(H, cfg.edge, k, budget=b).to_json()
    if c == "mc":
        out = {"k": k, "seed": cfg.seed, **monte_carlo_mean(H, k, cfg.trials, cfg.seed, b).to_json()}
        if H.uniform_r is not None or H.m == 0:
            bound = dp_upper_bound(H, k)
            out["bound"] = f"{bound.numerator}/{bound.denominator}"
        return out
    if c == "gap":
        return {"rows": [row.to_json() for row in gap_profile(H, range(cfg.kmin, cfg.kmax + 1), b)]}
    if c == "chidp":
        got = dp_chromatic_number(H, cfg.kmax, b)
        return {"kmax": cfg.kmax, "chi_dp": got}
    if c == "gen":
        return H.to_json()
    raise InvalidConfig(f"unknown command {c!r}")


def _cache_path(cfg: RunConfig, H: Hypergraph) -> Optional[Path]:
    root = cfg.cache_dir or os.environ.get(CACHE_ENV)
    if not root or cfg.command in ("gen", "verify"):
        return None
    key = json.dumps([CACHE_SCHEMA, H.digest(), cfg.command, cfg.cache_params()], sort_keys=True)
    return Path(root) / (hashlib.sha256(key.encode()).hexdigest() + ".json")


def _cached(cfg: RunConfig, H: Hypergraph) -> dict:
    path = _cache_path(cfg, H)
    if path is not None and path.exists():
        try:
            entry = json.loads(path.read_text())
            if entry.get("schema") == CACHE_SCHEMA:
                return entry["result"]
        except (json.JSONDecodeError, KeyError, AttributeError):
            pass
    result = _compute(cfg, H)
    if path is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(".tmp")
        tmp.write_text(json.dumps({"schema": CACHE_SCHEMA, "result": result}))
        tmp.replace(path)
    return result


def _to_csv(command: str, result) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if command == "gap":
        w.writerow(GAP_HEADER)
        for row in result["rows"]:
            w.writerow([row[h] for h in GAP_HEADER])
    elif command == "profile":
        w.writerow(["colors", "count"])
        for key, val in result["counts"].items():
            w.writerow([key, val])
    elif command == "chrompoly":
        w.writerow(["power", "coeff"])
        for i, c in enumerate(result["coeffs"]):
            w.writerow([i, c])
    elif command == "verify":
        w.writerow(["claim", "passed", "detail"])
        for row in result["claims"]:
            w.writerow([row["claim"], row["passed"], row["detail"]])
    else:
        w.writerow(["field", "value"])
        for key, val in result.items():
            w.writerow([key, val if isinstance(val, str) else json.dumps(val)])
    return buf.getvalue()


def run(cfg: RunConfig) -> tuple[int, str]:
    """Execute one command; returns ``(exit status, serialized report)``."""
    try:
        cfg.check()
        if cfg.command == "verify":
            claims = [r.to_json() for r in run_all()]
            result = {"claims": claims, "all_passed": all(c["passed"] for c in claims)}
            status = EXIT_OK if result["all_passed"] else EXIT_VERIFY
            report = {"command": "verify", "result": result}
        else:
            H = _instance(cfg)
            result = _cached(cfg, H)
            status = EXIT_OK
            report = {"command": cfg.command, "instance": H.to_json(), "result": result}
    except ResourceLimit as exc:
        return EXIT_BUDGET, _error(exc, required=str(exc.required), budget=str(exc.budget))
    except VerificationFailure as exc:
        return EXIT_VERIFY, _error(exc)
    except HyperDPError as exc:
        return EXIT_INPUT, _error(exc)
    if cfg.format == "csv":
        return status, _to_csv(cfg.command, report["result"])
    return status, json.dumps(report, indent=2) + "\n"


def _error(exc: HyperDPError, **extra) -> str:
    return json.dumps({"error": exc.code, "message": str(exc), **extra}) + "\n"


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage, which is reserved for verification failures
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="hyperdp", description="Exact chromatic and DP color functions of hypergraphs.")
    ap.add_argument("command", choices=COMMANDS)
    src = ap.add_argument_group("instance")
    src.add_argument("--input", help="hypergraph file (JSON or n=/e= text)")
    src.add_argument("--gen", metavar="FAMILY", choices=genlib.FAMILIES, help="generate an instance")
    src.add_argument("--gen-json", help="GenSpec as JSON")
    for name in ("r", "m", "p", "n"):
        src.add_argument(f"--{name}", type=int)
    src.add_argument("--gen-seed", type=int, help="seed for random families")
    ap.add_argument("--k", type=int)
    ap.add_argument("--kmin", type=int)
    ap.add_argument("--kmax", type=int)
    ap.add_argument("--edge", type=int, help="edge index (profile)")
    ap.add_argument("--trials", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=0, help="Monte Carlo seed")
    ap.add_argument("--budget", type=int, help="max elementary edge checks (default 1e9)")
    ap.add_argument("--format", default="json", choices=("json", "csv"))
    ap.add_argument("--cache-dir", help=f"result cache (or ${CACHE_ENV})")
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--prune", action="store_true", help="conjugacy-class pruning in dpexact")
    return ap


def config_from_args(args: argparse.Namespace) -> RunConfig:
    gen = None
    if args.gen_json is not None and args.gen is not None:
        raise InvalidConfig("use either --gen or --gen-json")
    if args.gen_json is not None:
        try:
            gen = genlib.GenSpec.from_json(args.gen_json)
        except (json.JSONDecodeError, TypeError) as exc:
            raise InvalidConfig(f"bad --gen-json: {exc}") from None
    elif args.gen is not None:
        gen = genlib.GenSpec(args.gen, args.r, args.m, args.p, args.n, args.gen_seed)
    return RunConfig(
        command=args.command, input=args.input, gen=gen, k=args.k, kmin=args.kmin,
        kmax=args.kmax, edge=args.edge, trials=args.trials, seed=args.seed, budget=args.budget,
        format=args.format, cache_dir=args.cache_dir, workers=args.workers, prune=args.prune,
    )


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = config_from_args(args)
    except HyperDPError as exc:
        sys.stderr.write(_error(exc))
        return EXIT_INPUT
    status, text = run(cfg)
    stream = sys.stderr if text.startswith('{"error"') else sys.stdout
    stream.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
