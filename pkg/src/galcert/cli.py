"""Command line front end.

One subcommand per library question: class tables, Nielsen tuple
enumeration, rigidity certificates, braid orbits, ramification data,
the unramified-Brauer kernel, and the cyclic Noether criteria.

Every run prints exactly one JSON document (or one TSV table with
``--format tsv``) to stdout.  Exit codes follow the three-way split:
0 for a definite answer (positive or negative), 1 for input errors,
2 when the question stayed unresolved within the configured bounds
(budget overflow, or an "unknown" verdict).  Output is byte-identical
across runs and thread counts; ``--seedless`` is accepted everywhere
as a no-op marker of that fact and must not be given a value.
"""

from __future__ import annotations

import argparse
import sys
import time

from .catalogue import parse_group_spec
from .cayley import (
    DEFAULT_COHOMOLOGY_BOUND,
    bicyclic_subgroups,
    cayley_from_permgroup,
)
from .cohomology import bogomolov_multiplier, h2_qz
from .cyclotomic import DEFAULT_NORM_BOUND, DEFAULT_NORM_BUDGET
from .errors import BudgetExceeded
from .monodromy import TARGETS, RamificationDatum, realize_datum
from .nielsen import (
    DEFAULT_TUPLE_BUDGET,
    braid_orbits,
    enumerate_ni_star,
    enumerate_nielsen,
    rigidity_certificate,
)
from .noether import UNKNOWN, lenstra_condition, plans_condition
from .parallel import ordered_map
from .permgroup import class_by_label, conjugacy_classes, is_rational_class
from .report import document, render_json, render_tsv


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="galcert",
        description="finite certificates for Galois realization questions",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=("json", "tsv"),
        default="json",
        help="output format (default json)",
    )
    common.add_argument(
        "--threads",
        type=int,
        default=1,
        help="worker threads; the output never depends on this",
    )
    common.add_argument(
        "--seedless",
        action="store_true",
        help="assert the run uses no randomness (always true; reserved)",
    )

    grouped = argparse.ArgumentParser(add_help=False)
    grouped.add_argument(
        "--group",
        required=True,
        help='group spec, e.g. S4, Q8, Z/6xZ/2 or "gens:(1 2),(1 2 3)"',
    )
    grouped.add_argument(
        "--degree",
        type=int,
        default=None,
        help="degree of the action; required with gens:, checked otherwise",
    )

    p = sub.add_parser(
        "classes", parents=[common, grouped], help="conjugacy class table"
    )

    p = sub.add_parser(
        "rational-classes",
        parents=[common, grouped],
        help="the subtable of rational classes",
    )

    p = sub.add_parser(
        "nielsen",
        parents=[common, grouped],
        help="orbit representatives of product-one generating tuples",
    )
    p.add_argument(
        "--classes",
        required=True,
        help="comma separated class labels, e.g. 2A,3A,4A",
    )
    p.add_argument("--budget", type=int, default=DEFAULT_TUPLE_BUDGET)

    p = sub.add_parser(
        "rigid",
        parents=[common, grouped],
        help="orbit count and the rigidity bit for one class vector",
    )
    p.add_argument("--classes", required=True)
    p.add_argument("--budget", type=int, default=DEFAULT_TUPLE_BUDGET)

    p = sub.add_parser(
        "certify",
        parents=[common, grouped],
        help="full realization certificate for one class vector",
    )
    p.add_argument("--classes", required=True)
    p.add_argument("--budget", type=int, default=DEFAULT_TUPLE_BUDGET)

    p = sub.add_parser(
        "braid-orbits",
        parents=[common, grouped],
        help="braid orbit partition of all generating r-tuples",
    )
    p.add_argument("--r", type=int, required=True, help="tuple length")
    p.add_argument("--budget", type=int, default=DEFAULT_TUPLE_BUDGET)
    p.add_argument(
        "--figure",
        default=None,
        metavar="PATH",
        help="also render an orbit-size bar chart to PATH",
    )

    p = sub.add_parser(
        "monodromy",
        parents=[common],
        help="search for a covering with a prescribed ramification datum",
    )
    p.add_argument(
        "--datum",
        required=True,
        help='semicolon separated partitions, e.g. "4;3,1;2,1,1"',
    )
    p.add_argument("--degree", type=int, default=None)
    p.add_argument("--target", choices=TARGETS, default="any")
    p.add_argument("--budget", type=int, default=DEFAULT_TUPLE_BUDGET)

    p = sub.add_parser(
        "bogomolov",
        parents=[common, grouped],
        help="H^2(G,Q/Z) and its unramified (bicyclic-trivial) kernel",
    )
    p.add_argument("--bound", type=int, default=DEFAULT_COHOMOLOGY_BOUND)
    p.add_argument(
        "--timings",
        action="store_true",
        help="fill elapsed_ms with wall-clock time instead of null",
    )

    p = sub.add_parser(
        "noether-cyclic",
        parents=[common],
        help="Noether's problem for Z/n: divisibility test plus norm witnesses",
    )
    p.add_argument("n", type=int, nargs="?", default=None)
    p.add_argument(
        "--sweep",
        default=None,
        metavar="A:B",
        help="run every n in the inclusive range instead of a single n",
    )
    p.add_argument("--bound", type=int, default=DEFAULT_NORM_BOUND)
    p.add_argument("--budget", type=int, default=DEFAULT_NORM_BUDGET)
    p.add_argument(
        "--figure",
        default=None,
        metavar="PATH",
        help="(sweep only) render the verdict chart to PATH",
    )

    return parser


def _classes_from_arg(group, text):
    labels = [t.strip() for t in text.split(",") if t.strip()]
    if not labels:
        raise ValueError("--classes needs at least one label")
    return [class_by_label(group, lab) for lab in labels]


def _kv_table(result: dict) -> str:
    return render_tsv([("key", "value"), *result.items()])


def _run_classes(args):
    spec = parse_group_spec(args.group, degree=args.degree)
    only_rational = args.command == "rational-classes"
    rows = []
    for c in conjugacy_classes(spec.group):
        rational = is_rational_class(spec.group, c)
        if only_rational and not rational:
            continue
        rows.append(
            {
                "label": c.label,
                "representative": c.representative.cycle_string(),
                "size": c.size,
                "element_order": c.element_order,
                "rational": rational,
            }
        )
    if args.format == "tsv":
        header = ("label", "representative", "size", "element_order", "rational")
        table = [header] + [tuple(r[k] for k in header) for r in rows]
        return render_tsv(table), 0
    config = {"group": spec.name, "degree": spec.group.degree}
    result = {"order": spec.group.order, "count": len(rows), "classes": rows}
    return render_json(document(args.command, config, result)), 0


def _run_nielsen(args):
    spec = parse_group_spec(args.group, degree=args.degree)
    classes = _classes_from_arg(spec.group, args.classes)
    tuples = enumerate_nielsen(
        spec.group, classes, budget=args.budget, threads=args.threads
    )
    labels = [c.label for c in classes]
    if args.format == "tsv":
        header = ("index",) + tuple(f"entry_{i + 1}" for i in range(len(classes)))
        table = [header] + [
            (i,) + t.cycle_strings() for i, t in enumerate(tuples)
        ]
        return render_tsv(table), 0
    config = {
        "group": spec.name,
        "classes": labels,
        "budget": args.budget,
    }
    result = {
        "count": len(tuples),
        "tuples": [list(t.cycle_strings()) for t in tuples],
    }
    return render_json(document("nielsen", config, result)), 0


def _run_rigid(args):
    spec = parse_group_spec(args.group, degree=args.degree)
    classes = _classes_from_arg(spec.group, args.classes)
    tuples = enumerate_nielsen(
        spec.group, classes, budget=args.budget, threads=args.threads
    )
    result = {
        "group": spec.name,
        "classes": ",".join(c.label for c in classes),
        "count": len(tuples),
        "rigid": len(tuples) == 1,
    }
    if args.format == "tsv":
        return _kv_table(result), 0
    config = {"group": spec.name, "budget": args.budget}
    result["classes"] = [c.label for c in classes]
    return render_json(document("rigid", config, result)), 0


def _run_certify(args):
    spec = parse_group_spec(args.group, degree=args.degree)
    classes = _classes_from_arg(spec.group, args.classes)
    cert = rigidity_certificate(
        spec.group, classes, budget=args.budget, threads=args.threads
    )
    if args.format == "tsv":
        flat = {
            "group": spec.name,
            "classes": ",".join(cert.labels),
            "count": cert.count,
            "rigid": cert.rigid,
            "rational": all(cert.rational_flags),
            "nontrivial": all(cert.nontrivial_flags),
            "centre_trivial": cert.centre_trivial,
            "verdict": cert.verdict,
        }
        rows = [("key", "value"), *flat.items()]
        for i, orbit in enumerate(cert.orbits):
            rows.append((f"orbit_{i}", " ".join(orbit.cycle_strings())))
        return render_tsv(rows), 0
    config = {
        "group": spec.name,
        "classes": list(cert.labels),
        "budget": args.budget,
    }
    result = {
        "count": cert.count,
        "rigid": cert.rigid,
        "rational_flags": list(cert.rational_flags),
        "nontrivial_flags": list(cert.nontrivial_flags),
        "centre_trivial": cert.centre_trivial,
        "verdict": cert.verdict,
        "witness": list(cert.witness.cycle_strings()) if cert.witness else None,
        "orbits": [list(t.cycle_strings()) for t in cert.orbits],
    }
    return render_json(document("certify", config, result)), 0


def _run_braid_orbits(args):
    spec = parse_group_spec(args.group, degree=args.degree)
    tuples = enumerate_ni_star(
        spec.group, args.r, budget=args.budget, threads=args.threads
    )
    report = braid_orbits(spec.group, tuples)
    if args.figure:
        from .figures import braid_orbit_figure

        braid_orbit_figure(report, args.figure)
    if args.format == "tsv":
        table = [("orbit", "size", "class_multiset", "representative")]
        for i, orbit in enumerate(report.orbits):
            table.append(
                (
                    i,
                    orbit.size,
                    ",".join(orbit.class_multiset),
                    " ".join(orbit.representative.cycle_strings()),
                )
            )
        return render_tsv(table), 0
    config = {
        "group": spec.name,
        "r": args.r,
        "budget": args.budget,
    }
    result = {
        "tuple_count": report.tuple_count,
        "orbit_count": len(report.orbits),
        "orbits": [
            {
                "size": o.size,
                "class_multiset": list(o.class_multiset),
                "representative": list(o.representative.cycle_strings()),
            }
            for o in report.orbits
        ],
    }
    return render_json(document("braid-orbits", config, result)), 0


def _run_monodromy(args):
    datum = RamificationDatum.parse(args.datum, degree=args.degree)
    res = realize_datum(datum, target=args.target, budget=args.budget)
    result = {
        "datum": datum.as_text(),
        "degree": datum.degree,
        "branch_count": datum.branch_count,
        "genus": datum.genus(),
        "parity_ok": res.parity_ok,
        "status": res.status,
        "witness": [p.cycle_string() for p in res.witness] if res.witness else None,
        "group_order": res.witness_group_order,
    }
    code = 2 if res.status == "unknown" else 0
    if args.format == "tsv":
        flat = dict(result)
        flat["witness"] = " ".join(result["witness"]) if result["witness"] else None
        return _kv_table(flat), code
    config = {"datum": args.datum, "target": args.target, "budget": args.budget}
    return render_json(document("monodromy", config, result)), code


def _run_bogomolov(args):
    spec = parse_group_spec(args.group, degree=args.degree)
    start = time.perf_counter()
    cayley = cayley_from_permgroup(spec.group, bound=args.bound)
    h2 = h2_qz(cayley)
    b0 = bogomolov_multiplier(cayley)
    bicyclic = bicyclic_subgroups(cayley)
    elapsed = int((time.perf_counter() - start) * 1000) if args.timings else None
    result = {
        "group": spec.name,
        "order": cayley.n,
        "h2_invariants": list(h2.invariant_factors),
        "b0_invariants": list(b0.invariant_factors),
        "bicyclic_count": len(bicyclic),
        "elapsed_ms": elapsed,
    }
    if args.format == "tsv":
        flat = dict(result)
        flat["h2_invariants"] = ",".join(str(d) for d in h2.invariant_factors)
        flat["b0_invariants"] = ",".join(str(d) for d in b0.invariant_factors)
        return _kv_table(flat), 0
    config = {"group": spec.name, "bound": args.bound}
    return render_json(document("bogomolov", config, result)), 0


def _parse_sweep(text: str) -> tuple[int, int]:
    parts = text.split(":")
    if len(parts) != 2:
        raise ValueError(f"--sweep wants A:B, got {text!r}")
    try:
        lo, hi = int(parts[0]), int(parts[1])
    except ValueError:
        raise ValueError(f"--sweep wants integers, got {text!r}") from None
    if lo < 1 or hi < lo:
        raise ValueError(f"--sweep range {text!r} is empty or starts below 1")
    return lo, hi


def _run_noether(args):
    if (args.n is None) == (args.sweep is None):
        raise ValueError("give exactly one of a single n or --sweep A:B")

    if args.sweep is not None:
        lo, hi = _parse_sweep(args.sweep)

        def verdict_row(n):
            v = lenstra_condition(n, bound=args.bound, budget=args.budget)
            return n, plans_condition(n), v.status

        rows = ordered_map(verdict_row, range(lo, hi + 1), threads=args.threads)
        if args.figure:
            from .figures import noether_sweep_figure

            noether_sweep_figure(rows, args.figure)
        if args.format == "tsv":
            return render_tsv([("n", "plans", "lenstra")] + rows), 0
        config = {
            "sweep": [lo, hi],
            "bound": args.bound,
            "budget": args.budget,
            }
        result = {
            "rows": [
                {"n": n, "plans": plans, "lenstra": status}
                for n, plans, status in rows
            ]
        }
        return render_json(document("noether-cyclic", config, result)), 0

    verdict = lenstra_condition(args.n, bound=args.bound, budget=args.budget)
    plans = plans_condition(args.n)
    code = 2 if verdict.status == UNKNOWN else 0
    if args.format == "tsv":
        flat = {
            "n": args.n,
            "plans": plans,
            "lenstra_verdict": verdict.status,
            "witnesses": ";".join(
                f"p={w.prime} m={w.conductor} coeffs={list(w.coeffs)} norm={w.norm}"
                for w in verdict.witnesses
            ),
            "reasons": ";".join(verdict.reasons),
        }
        return _kv_table(flat), code
    config = {"n": args.n, "bound": args.bound, "budget": args.budget}
    result = {
        "n": args.n,
        "plans": plans,
        "lenstra_verdict": verdict.status,
        "witnesses": [
            {
                "prime": w.prime,
                "conductor": w.conductor,
                "coeffs": list(w.coeffs),
                "norm": w.norm,
            }
            for w in verdict.witnesses
        ],
        "reasons": list(verdict.reasons),
    }
    return render_json(document("noether-cyclic", config, result)), code


_HANDLERS = {
    "classes": _run_classes,
    "rational-classes": _run_classes,
    "nielsen": _run_nielsen,
    "rigid": _run_rigid,
    "certify": _run_certify,
    "braid-orbits": _run_braid_orbits,
    "monodromy": _run_monodromy,
    "bogomolov": _run_bogomolov,
    "noether-cyclic": _run_noether,
}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    if args.seedless and getattr(args, "timings", False):
        print("error: --timings breaks determinism and conflicts with --seedless",
              file=sys.stderr)
        return 1
    try:
        text, code = _HANDLERS[args.command](args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
