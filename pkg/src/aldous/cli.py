"""Command-line surface: batch verification and data export.

Subcommands wrap the library one-to-one: `gap` (spectral-gap equality
report), `check-conjecture` (per-shape PSD sweep), `certify` (weighted
elimination certificates, with `--replay`), `generate` (named graph
families as JSON), `decompose` (interchange spectrum by shape), and
`rep` (representation matrices as CSV). Output is deterministic byte
for byte given identical input, seed, and configuration; errors print
to stderr only. Exit codes: 0 pass/success, 1 fail, 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass

from .conjecture import check_conjecture
from .graphs import WeightedGraph, generate, graph_from_json_dict, graph_to_json_dict
from .interchange import aldous_check, interchange_laplacian, irrep_spectra
from .permutations import parse_permutation
from .reduction import EliminationCertificate, certify_elimination, replay_elimination
from .spectral import DENSE_LIMIT, multiset_equal
from .tableaux import Partition, enumerate_syt, parse_partition
from .yor import rho_sigma

_GENERATOR_ARITY = {
    "path": 1,
    "cycle": 1,
    "star": 1,
    "complete": 1,
    "wheel": 1,
    "nested_triangulation": 2,
}


@dataclass(frozen=True)
class RunConfig:
    tolerance: float
    n_cap: int
    seed: int
    format: str
    budget: int

    def __post_init__(self) -> None:
        if not self.tolerance > 0:
            raise ValueError("tolerance must be positive")
        if self.n_cap < 2:
            raise ValueError("n-cap must be at least 2")
        if self.format not in ("json", "csv"):
            raise ValueError(f"unknown format {self.format!r}")
        if self.budget < 0:
            raise ValueError("budget must be nonnegative")


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _partition_text(lam: Partition) -> str:
    return ",".join(str(p) for p in lam.parts)


def _load_graph(path: str) -> WeightedGraph:
    with open(path, "r", encoding="utf-8") as handle:
        data = json.load(handle)
    return graph_from_json_dict(data)


def _cmd_gap(args, config: RunConfig) -> tuple[str, int]:
    G = _load_graph(args.graph)
    report = aldous_check(G, tol=config.tolerance)
    payload = {
        "gap_interchange": report.gap_interchange,
        "gap_rw": report.gap_rw,
        "argmin_partition": _partition_text(report.argmin_partition),
        "pass": report.passed,
        "n": G.n,
        "minima": {_partition_text(lam): v for lam, v in report.minima.items()},
        "tied_partitions": [_partition_text(lam) for lam in report.tied_partitions],
    }
    return _dump_json(payload), 0 if report.passed else 1


def _cmd_check_conjecture(args, config: RunConfig) -> tuple[str, int]:
    gamma = tuple(float(tok) for tok in args.gamma.split(","))
    report = check_conjecture(args.k, gamma, tol=config.tolerance)
    payload = {
        "k": report.k,
        "gamma": list(report.gamma),
        "pass": report.passed,
        "per_lambda": [
            {
                "lambda": _partition_text(v.partition),
                "dim": v.dim,
                "min_eig": v.min_eig,
                "status": v.status,
            }
            for v in report.per_shape
        ],
    }
    return _dump_json(payload), 0 if report.passed else 1


def _certificate_payload(cert: EliminationCertificate) -> dict:
    return {
        "max_degree_bound": cert.max_degree_bound,
        "steps": [[v, d] for v, d in cert.steps],
        "graphs": [graph_to_json_dict(G) for G in cert.graphs],
    }


def _cmd_certify(args, config: RunConfig) -> tuple[str, int]:
    if args.replay:
        with open(args.graph, "r", encoding="utf-8") as handle:
            data = json.load(handle)
        try:
            cert = EliminationCertificate(
                max_degree_bound=int(data["max_degree_bound"]),
                steps=tuple((int(v), int(d)) for v, d in data["steps"]),
                graphs=tuple(graph_from_json_dict(g) for g in data["graphs"]),
            )
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed certificate: {exc}")
        ok = replay_elimination(cert)
        return _dump_json({"replay_ok": ok}), 0 if ok else 1
    G = _load_graph(args.graph)
    result = certify_elimination(G, K=args.k, budget=config.budget)
    payload: dict = {"status": result.status, "k": args.k, "n": G.n}
    if result.certificate is not None:
        payload["certificate"] = _certificate_payload(result.certificate)
    return _dump_json(payload), 0 if result.certified else 1


def _cmd_generate(args, config: RunConfig) -> tuple[str, int]:
    arity = _GENERATOR_ARITY.get(args.kind)
    if arity is None:
        raise ValueError(f"unknown graph kind {args.kind!r}")
    if len(args.params) != arity:
        raise ValueError(f"{args.kind} takes {arity} parameter(s), got {len(args.params)}")
    G = generate(args.kind, *args.params, seed=args.seed)
    return _dump_json(graph_to_json_dict(G)), 0


def _cmd_decompose(args, config: RunConfig) -> tuple[str, int]:
    G = _load_graph(args.graph)
    spectra = irrep_spectra(G)
    if config.format == "csv":
        merged = sorted(
            float(v) for lam, mult, vals in spectra for v in vals.tolist() * mult
        )
        return "".join(f"{v:.17g}\n" for v in merged), 0
    payload = {
        "n": G.n,
        "state_count": math.factorial(G.n),
        "per_lambda": [
            {
                "lambda": _partition_text(lam),
                "dim": mult,
                "eigenvalues": [float(v) for v in vals],
            }
            for lam, mult, vals in spectra
        ],
    }
    # cross-check against the explicit factorial-size matrix when it is
    # small enough to solve densely and within the configured cap
    if G.n <= config.n_cap and math.factorial(G.n) <= DENSE_LIMIT:
        import numpy as np

        direct = np.linalg.eigvalsh(interchange_laplacian(G, n_cap=config.n_cap).toarray())
        merged = np.sort(
            np.concatenate([np.tile(vals, mult) for _, mult, vals in spectra])
        )
        payload["direct_check"] = {
            "performed": True,
            "matches": multiset_equal(direct, merged, tol=1e-8),
        }
    else:
        payload["direct_check"] = {"performed": False, "matches": None}
    return _dump_json(payload), 0


def _cmd_rep(args, config: RunConfig) -> tuple[str, int]:
    lam = parse_partition(args.partition)
    sigma = parse_permutation(args.sigma, lam.n)
    M = rho_sigma(lam, sigma)
    if config.format == "json":
        payload = {
            "lambda": _partition_text(lam),
            "sigma": list(sigma.images),
            "dim": M.shape[0],
            "tableaux": [str(t) for t in enumerate_syt(lam)],
            "matrix": [[float(x) for x in row] for row in M],
        }
        return _dump_json(payload), 0
    lines = [
        f"# rho for shape ({_partition_text(lam)}) at sigma with one-line word "
        + ",".join(str(v) for v in sigma.images)
    ]
    lines.append("# rows/columns indexed by standard tableaux in dictionary order:")
    for idx, t in enumerate(enumerate_syt(lam)):
        lines.append(f"#   {idx}: {t}")
    for row in M:
        lines.append(",".join(f"{x:.17g}" for x in row))
    return "\n".join(lines) + "\n", 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="aldous",
        description="Spectral-gap toolkit for interchange processes on weighted graphs.",
    )
    parser.add_argument("--tol", type=float, default=1e-9, help="relative tolerance")
    parser.add_argument("--seed", type=int, default=None,
                        help="draw Uniform(0.5, 1.5) generator weights instead of unit weights")
    parser.add_argument("--format", choices=("json", "csv"), default="json")
    parser.add_argument("--n-cap", type=int, default=8, dest="n_cap",
                        help="largest n for n!-state constructions")
    parser.add_argument("--budget", type=int, default=100_000, help="search budget")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gap", help="compare interchange and random-walk spectral gaps")
    p.add_argument("graph", help="graph JSON file")

    p = sub.add_parser("check-conjecture", help="per-shape PSD sweep for given rates")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--gamma", required=True, help="comma-separated k-1 nonnegative rates")

    p = sub.add_parser("certify", help="search for a bounded-degree elimination order")
    p.add_argument("graph", help="graph JSON file (or certificate JSON with --replay)")
    p.add_argument("--k", type=int, default=4)
    p.add_argument("--replay", action="store_true", help="verify a stored certificate")

    p = sub.add_parser("generate", help="emit a named graph family as JSON")
    p.add_argument("kind", choices=sorted(_GENERATOR_ARITY))
    p.add_argument("params", type=int, nargs="*")
    # SUPPRESS keeps a subcommand-level --seed from clobbering the global one
    p.add_argument("--seed", type=int, default=argparse.SUPPRESS, dest="seed",
                   help="draw Uniform(0.5, 1.5) weights instead of unit weights")

    p = sub.add_parser("decompose", help="interchange spectrum shape by shape")
    p.add_argument("graph", help="graph JSON file")

    p = sub.add_parser("rep", help="dump a representation matrix")
    p.add_argument("partition", help="partition text, e.g. 3,1 or 2,1^2")
    p.add_argument("sigma", help='permutation: cycles "(1 4)(2 3)" or one-line "2,1,4,3"')

    return parser


_HANDLERS = {
    "gap": _cmd_gap,
    "check-conjecture": _cmd_check_conjecture,
    "certify": _cmd_certify,
    "generate": _cmd_generate,
    "decompose": _cmd_decompose,
    "rep": _cmd_rep,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = RunConfig(
            tolerance=args.tol,
            n_cap=args.n_cap,
            seed=args.seed if isinstance(args.seed, int) else 0,
            format=args.format,
            budget=args.budget,
        )
        output, code = _HANDLERS[args.command](args, config)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(output)
    return code


if __name__ == "__main__":
    sys.exit(main())
