"""Command line front end: compute a Fano degree and cross-check it.

Exit codes: 0 success, 2 invalid parameters, 3 hypothesis violated without
``--force-hypothesis``, 4 disagreement between trials or methods.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

from .bott import ProblemInstance, fano_degree_bott
from .errors import (
    Disagreement,
    FanoError,
    HypothesisViolation,
    InvalidArgument,
)
from .oracle import dm_degree, vdw_lines
from .weights import random_weights, sequential_weights, validate

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_HYPOTHESIS = 3
EXIT_DISAGREEMENT = 4

METHODS = ("bott", "dm", "vdw", "all")
THREADS_ENV = "FANODEG_THREADS"
UNGUARANTEED = "formula value, Fano-scheme interpretation not guaranteed"


@dataclass
class ComputeRequest:
    k: int
    d: int
    n: int
    method: str = "all"
    weight_strategy: str = "sequential"
    seed: int = 0
    trials: int = 4
    threads: int = 1
    force_hypothesis: bool = False
    output_format: str = "text"
    weights: Optional[List[int]] = None
    range_bound: int = 100


@dataclass
class ComputeReport:
    request: ComputeRequest
    delta: int
    degree: str
    per_method_results: Dict[str, str]
    trials_agreed: bool
    elapsed_ms: Dict[str, int]
    note: Optional[str] = None
    trial_weights: List[List[int]] = field(default_factory=list)


def vdw_applies(k: int, d: int, n: int) -> bool:
    return k == 1 and n >= 3 and d == 2 * n - 3


def trial_weight_vectors(req: ComputeRequest) -> List[tuple]:
    """Weight vectors for the Bott trials.

    The first vector is ``--weights`` if given, else the sequential point
    (strategy ``sequential``) or a random one. Later trials use random
    vectors seeded with ``seed + i``.
    """
    size = req.n + 1
    bound = max(req.range_bound, 2 * size)
    out = []
    if req.weights is not None:
        w = validate(req.weights)
        if len(w) != size:
            raise InvalidArgument(f"--weights needs {size} entries, got {len(w)}")
        out.append(w)
    elif req.weight_strategy == "sequential":
        out.append(sequential_weights(size))
    start = len(out)
    for i in range(req.trials - start):
        out.append(random_weights(size, req.seed + start + i, bound))
    return out


def _check_request(req: ComputeRequest) -> ProblemInstance:
    if req.method not in METHODS:
        raise InvalidArgument(f"unknown method {req.method!r}")
    if req.weight_strategy not in ("sequential", "random"):
        raise InvalidArgument(f"unknown weight strategy {req.weight_strategy!r}")
    if req.trials < 1 or req.threads < 1:
        raise InvalidArgument("--trials and --threads must be >= 1")
    p = ProblemInstance(req.k, req.d, req.n, force_hypothesis=req.force_hypothesis)
    p.check()
    if req.method == "vdw" and not vdw_applies(req.k, req.d, req.n):
        raise InvalidArgument("--method vdw needs k = 1 and d = 2n - 3")
    return p


def run(req: ComputeRequest) -> ComputeReport:
    """Run the requested method(s); raise :class:`FanoError` subclasses on failure."""
    p = _check_request(req)
    if req.method == "all":
        methods = ["bott", "dm"] + (["vdw"] if vdw_applies(p.k, p.d, p.n) else [])
    else:
        methods = [req.method]

    results: Dict[str, str] = {}
    elapsed: Dict[str, int] = {}
    trials_agreed = True
    used_weights: List[List[int]] = []
    for m in methods:
        t0 = time.perf_counter()
        if m == "bott":
            vectors = trial_weight_vectors(req)
            values = [fano_degree_bott(p, w, workers=req.threads) for w in vectors]
            used_weights = [list(w) for w in vectors]
            trials_agreed = len(set(values)) == 1
            if not trials_agreed:
                raise Disagreement(
                    "Bott sum differs across weight vectors: "
                    + ", ".join(f"{w} -> {v}" for w, v in zip(vectors, values))
                )
            value = values[0]
        elif m == "dm":
            value = dm_degree(p)
        else:
            value = vdw_lines(p.n)
        elapsed[m] = int(round((time.perf_counter() - t0) * 1000))
        results[m] = str(value)

    if len(set(results.values())) != 1:
        raise Disagreement(f"methods disagree: {results}")
    note = None if p.hypothesis_holds else UNGUARANTEED
    return ComputeReport(
        request=req,
        delta=p.delta,
        degree=next(iter(results.values())),
        per_method_results=results,
        trials_agreed=trials_agreed,
        elapsed_ms=elapsed,
        note=note,
        trial_weights=used_weights,
    )


def report_dict(rep: ComputeReport) -> dict:
    req = rep.request
    out = {
        "k": req.k,
        "d": req.d,
        "n": req.n,
        "delta": rep.delta,
        "degree": rep.degree,
        "method": req.method,
        "per_method_results": dict(rep.per_method_results),
        "trials": req.trials,
        "trials_agreed": rep.trials_agreed,
        "elapsed_ms": dict(rep.elapsed_ms),
    }
    if rep.note:
        out["note"] = rep.note
    return out


def render_json(rep: ComputeReport) -> bytes:
    """One compact JSON object plus a newline. Integers that can grow are strings."""
    return (json.dumps(report_dict(rep), separators=(",", ":")) + "\n").encode()


def render_text(rep: ComputeReport) -> str:
    req = rep.request
    lines = [
        f"F_{req.k}(X), X a general degree-{req.d} hypersurface in P^{req.n}",
        f"expected dimension: {rep.delta}",
        f"degree: {rep.degree}",
    ]
    for m, v in rep.per_method_results.items():
        lines.append(f"  {m:<5} {v}  ({rep.elapsed_ms[m]} ms)")
    if "bott" in rep.per_method_results:
        lines.append(f"bott trials: {req.trials}, agreed: {rep.trials_agreed}")
    if rep.note:
        lines.append(f"note: {rep.note}")
    return "\n".join(lines) + "\n"


def _int_list(text: str) -> List[int]:
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="fanodeg",
        description="Degree of the Fano scheme F_k(X) of k-planes on a general "
        "degree-d hypersurface X in P^n.",
    )
    ap.add_argument("--k", type=int, required=True, help="dimension of the linear subspaces")
    ap.add_argument("--d", type=int, required=True, help="degree of the hypersurface")
    ap.add_argument("--n", type=int, required=True, help="dimension of the ambient P^n")
    ap.add_argument("--method", choices=METHODS, default="all")
    ap.add_argument("--weights", type=_int_list, help="comma-separated n+1 distinct integers")
    ap.add_argument("--weight-strategy", choices=("sequential", "random"), default="sequential")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--range-bound", type=int, default=100,
                    help="random weights are drawn from [-R, R]")
    ap.add_argument("--trials", type=int, default=4, help="weight vectors tried by the Bott method")
    ap.add_argument("--threads", type=int, default=None,
                    help=f"worker processes for the Bott sum (env {THREADS_ENV})")
    ap.add_argument("--force-hypothesis", action="store_true",
                    help="evaluate even when d = 2 and n < 2k+1")
    ap.add_argument("--json", action="store_true", help="emit one JSON object")
    return ap


def _threads_from(args_threads: Optional[int], environ) -> int:
    if args_threads is not None:
        return args_threads
    env = environ.get(THREADS_ENV)
    if env:
        try:
            return int(env)
        except ValueError:
            raise InvalidArgument(f"{THREADS_ENV}={env!r} is not an integer")
    return 1


def main(argv: Optional[Sequence[str]] = None, environ=None) -> int:
    environ = os.environ if environ is None else environ
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INVALID
    try:
        req = ComputeRequest(
            k=args.k,
            d=args.d,
            n=args.n,
            method=args.method,
            weight_strategy=args.weight_strategy,
            seed=args.seed,
            trials=args.trials,
            threads=_threads_from(args.threads, environ),
            force_hypothesis=args.force_hypothesis,
            output_format="json" if args.json else "text",
            weights=args.weights,
            range_bound=args.range_bound,
        )
        rep = run(req)
    except HypothesisViolation as exc:
        print(f"fanodeg: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except Disagreement as exc:
        print(f"fanodeg: {exc}", file=sys.stderr)
        return EXIT_DISAGREEMENT
    except InvalidArgument as exc:
        print(f"fanodeg: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except FanoError as exc:
        # integrality tripwire and friends: a bug, reported like a disagreement
        print(f"fanodeg: internal error: {exc}", file=sys.stderr)
        return EXIT_DISAGREEMENT
    if req.output_format == "json":
        sys.stdout.buffer.write(render_json(rep))
        sys.stdout.flush()
    else:
        sys.stdout.write(render_text(rep))
    return EXIT_OK


def main_entry() -> None:
    sys.exit(main())
