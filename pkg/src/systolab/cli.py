"""Command-line interface: evaluate bounds, optimize constants, analyze meshes.

Subcommands
-----------
bounds eval   evaluate one closed-form bound (formula keys below)
optimize      rediscover the published constants of a chain
surface       genus / area / systole / ratio / growth of a triangulated surface
verify        replay all published numeric claims; exit 1 on any failure

Formula keys map to the published chains: thm12 (general-metric genus
bound over alpha/beta/delta), prop25 (half-injectivity bound over eta),
katok (entropy lower bound), croke / gromov / bishop (disk-area models),
centers (disk-center cap), betti (loop-graph genus bound).

Exit codes: 0 ok, 1 claim failure, 2 usage error, 3 domain or constraint
error, 4 resource-limit error.  Table mode prints 6 significant digits;
JSON keeps full float precision.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from . import bounds, claims, optimize, report
from .errors import ResourceLimitError, SearchError, SystolabError
from .growth import count_loops, estimate_entropy, loop_growth_sample
from .homology import homological_systole
from .mesh import build_flat_torus, load_mesh, mesh_area, mesh_genus

EXIT_OK = 0
EXIT_CLAIM_FAILURE = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_RESOURCE = 4

FORMULAS = ("thm12", "prop25", "katok", "croke", "gromov", "bishop", "centers", "betti")


def _sig6(x: float) -> str:
    return f"{x:.6g}"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="systolab",
        description="systolic inequality laboratory",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_bounds = sub.add_parser("bounds", help="evaluate closed-form bounds")
    bounds_sub = p_bounds.add_subparsers(dest="action", required=True)
    p_eval = bounds_sub.add_parser("eval", help="evaluate one formula")
    p_eval.add_argument("--formula", required=True, choices=FORMULAS)
    p_eval.add_argument("--alpha", type=float)
    p_eval.add_argument("--beta", type=float)
    p_eval.add_argument("--delta", type=float)
    p_eval.add_argument("--eta", type=float)
    p_eval.add_argument("--genus", type=int)
    p_eval.add_argument("--area", type=float)
    p_eval.add_argument("--sys", type=float, dest="sys_")
    p_eval.add_argument("--radius", type=float)
    p_eval.add_argument("--rho", type=float)
    p_eval.add_argument("--centers", type=int)
    p_eval.add_argument("--format", choices=("table", "json"), default="table")

    p_opt = sub.add_parser("optimize", help="search the feasible constant regions")
    p_opt.add_argument("chain", choices=("thm12", "prop25"))
    p_opt.add_argument("--budget", type=int, default=None)
    p_opt.add_argument("--seed", type=int, default=0)
    p_opt.add_argument("--delta", type=float, default=1e-6, help="fixed delta (thm12 only)")
    p_opt.add_argument("--format", choices=("table", "json"), default="json")

    p_surf = sub.add_parser("surface", help="analyze a triangulated surface")
    p_surf.add_argument(
        "measure", choices=("genus", "area", "systole", "ratio", "growth")
    )
    source = p_surf.add_mutually_exclusive_group(required=True)
    source.add_argument("--mesh", help="mesh JSON file")
    source.add_argument(
        "--torus",
        help="u1,u2,v1,v2,n: flat torus on the lattice spanned by u and v",
    )
    p_surf.add_argument("--Tmax", type=float, default=10.0, dest="tmax")
    p_surf.add_argument("--basepoint", type=int, default=0)
    p_surf.add_argument("--format", choices=("table", "json", "csv"), default="table")

    p_verify = sub.add_parser("verify", help="replay all published numeric claims")
    p_verify.add_argument("--format", choices=("table", "json"), default="table")
    return parser


def _run_bounds_eval(args) -> int:
    def need(**kw):
        missing = [name for name, value in kw.items() if value is None]
        if missing:
            flags = ", ".join("--" + m.rstrip("_") for m in missing)
            raise UsageError(f"formula {args.formula} needs {flags}")
        return [kw[k] for k in kw]

    f = args.formula
    if f == "thm12":
        alpha, beta, delta = need(alpha=args.alpha, beta=args.beta, delta=args.delta)
        value = bounds.genus_bound_general(
            bounds.BoundParams(alpha=alpha, beta=beta, delta=delta)
        )
        extra = {"genus_cap": bounds.genus_cap(value)}
    elif f == "prop25":
        (eta,) = need(eta=args.eta)
        value = bounds.genus_bound_half_inj(eta)
        extra = {"genus_cap": bounds.genus_cap(value)}
    elif f == "katok":
        genus, area = need(genus=args.genus, area=args.area)
        value = bounds.katok_lower_bound(
            bounds.SurfaceSummary(genus=genus, systole=1.0, area=area)
        )
        extra = {}
    elif f == "croke":
        (radius,) = need(radius=args.radius)
        value = bounds.disk_area_lower(bounds.CrokeDisk(), radius)
        extra = {}
    elif f == "gromov":
        radius, rho = need(radius=args.radius, rho=args.rho)
        value = bounds.disk_area_lower(bounds.HeightDisk(rho), radius)
        extra = {}
    elif f == "bishop":
        (radius,) = need(radius=args.radius)
        value = bounds.disk_area_lower(bounds.EuclideanDisk(), radius)
        extra = {}
    elif f == "centers":
        area, sys_ = need(area=args.area, sys_=args.sys_)
        value = bounds.nonpositive_center_count(area, sys_)
        extra = {"center_cap": math.floor(value)}
    else:  # betti
        (centers,) = need(centers=args.centers)
        value = bounds.betti_genus_bound(centers)
        extra = {"genus_cap": math.floor(value)}

    if args.format == "json":
        print(json.dumps({"formula": f, "value": value, **extra}))
    else:
        print(_sig6(value))
        for key, val in extra.items():
            print(f"{key} {val}")
    return EXIT_OK


def _run_optimize(args) -> int:
    if args.chain == "thm12":
        budget = 200_000 if args.budget is None else args.budget
        result = optimize.optimize_general_bound(args.delta, budget=budget, seed=args.seed)
    else:
        budget = 10_000 if args.budget is None else args.budget
        result = optimize.optimize_half_inj_bound(budget=budget, seed=args.seed)
    if args.format == "json":
        print(result.to_json())
    else:
        p = result.best_params
        print(f"value {_sig6(result.best_value)}")
        if args.chain == "thm12":
            print(f"alpha {_sig6(p.alpha)}")
            print(f"beta {_sig6(p.beta)}")
            print(f"delta {_sig6(p.delta)}")
        else:
            print(f"eta {_sig6(p.eta)}")
        print(f"evaluations {result.evaluations}")
        for name, slack in result.slacks.items():
            print(f"slack {name} {_sig6(slack)}")
    return EXIT_OK


def _load_surface(args):
    if args.mesh:
        return load_mesh(args.mesh)
    parts = args.torus.split(",")
    if len(parts) != 5:
        raise UsageError("--torus wants u1,u2,v1,v2,n")
    try:
        u1, u2, v1, v2 = (float(x) for x in parts[:4])
        n = int(parts[4])
    except ValueError as exc:
        raise UsageError(f"bad --torus value: {exc}") from exc
    return build_flat_torus((u1, u2), (v1, v2), n)


def _run_surface(args) -> int:
    mesh = _load_surface(args)
    measure = args.measure
    if measure == "growth":
        return _run_growth(args, mesh)
    if args.format == "csv":
        raise UsageError("csv output only applies to surface growth")
    if measure == "genus":
        payload = {"genus": mesh_genus(mesh)}
        table = [str(mesh_genus(mesh))]
    elif measure == "area":
        payload = {"area": mesh_area(mesh)}
        table = [_sig6(mesh_area(mesh))]
    elif measure == "systole":
        witness = homological_systole(mesh)
        payload = {"systole": witness.length, "witness": witness.to_dict()}
        table = [
            _sig6(witness.length),
            "witness " + " ".join(f"{u}-{v}" for u, v in witness.edges),
        ]
    else:  # ratio
        witness = homological_systole(mesh)
        area = mesh_area(mesh)
        ratio = bounds.loewner_ratio(witness.length, area)
        gap = ratio - bounds.LOEWNER_BOUND
        if abs(gap) <= 1e-9:
            verdict = "Loewner boundary case"
        elif gap < 0:
            verdict = "Loewner (conservative pass)"
        else:
            verdict = "inconclusive (homological systole exceeds the threshold)"
        payload = {
            "systole": witness.length,
            "area": area,
            "ratio": ratio,
            "loewner_threshold": bounds.LOEWNER_BOUND,
            "verdict": verdict,
        }
        table = [_sig6(ratio), verdict]
    if args.format == "json":
        print(json.dumps(payload))
    else:
        for line in table:
            print(line)
    return EXIT_OK


def _run_growth(args, mesh) -> int:
    if args.tmax <= 0:
        raise UsageError(f"--Tmax must be > 0, got {args.tmax}")
    thresholds = [float(t) for t in range(1, int(math.floor(args.tmax)) + 1)]
    if not thresholds or thresholds[-1] < args.tmax:
        thresholds.append(float(args.tmax))
    sample = loop_growth_sample(mesh, thresholds, basepoint=args.basepoint)
    if args.format == "csv":
        sys.stdout.write(sample.to_csv())
        return EXIT_OK
    usable = sum(1 for c in sample.counts if c >= 1)
    entropy = estimate_entropy(sample) if usable >= 4 else None
    if args.format == "json":
        payload = {"sample": sample.to_dict()}
        if entropy is not None:
            payload["entropy"] = {
                "h_est": entropy.h_est,
                "fit_window": list(entropy.fit_window),
                "residual": entropy.residual,
                "degenerate": entropy.degenerate,
            }
        print(json.dumps(payload))
    else:
        for t, c in zip(sample.thresholds, sample.counts):
            print(f"{_sig6(t)} {c}")
        if entropy is not None:
            flag = " (degenerate)" if entropy.degenerate else ""
            print(f"h_est {_sig6(entropy.h_est)}{flag}")
    return EXIT_OK


def _run_verify(args) -> int:
    reports = claims.run_all_claims()
    if args.format == "json":
        print(report.reports_to_json(reports))
    else:
        sys.stdout.write(report.format_report_table(reports))
    return EXIT_CLAIM_FAILURE if report.any_failed(reports) else EXIT_OK


class UsageError(Exception):
    pass


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        if args.command == "bounds":
            return _run_bounds_eval(args)
        if args.command == "optimize":
            return _run_optimize(args)
        if args.command == "surface":
            return _run_surface(args)
        return _run_verify(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (SearchError, SystolabError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
