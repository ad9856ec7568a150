"""Command-line entry point.

Exit status: 0 success, 1 certificate or verification failure, 2 usage or
input error, 3 size-guard refusal.
"""

from __future__ import annotations

import argparse
import os
import re
import sys
import tempfile
import time
from fractions import Fraction

from . import formats
from .bounds import boundedness_from_bandwidth, boundedness_from_bandwidth_sound, treewidth_bound_formula
from .corpus import named_corpus, random_corpus, sparse_corpus
from .errors import CertificateError, ExpanderFound, FormatError, SeparatorNotFound, SizeGuardError
from .expansion import EXHAUSTIVE_ABSENCE, make_finder, nonexpanding_set
from .graph import FAMILIES, bandwidth_of_labelling, generate
from .oracles import exact_bandwidth, exact_boundedness, exact_separation_number, exact_treewidth
from .ordering import recursive_band_ordering
from .separators import PROVIDERS, provider, separator_from_nonexpanding, separator_from_tree_decomposition, validate_separator
from .tdecomp import validate_tree_decomposition
from .treewidth import td_from_separators
from .report import ReportConfig, build_report

EXIT_OK, EXIT_CERT, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3


def _fraction(text: str) -> Fraction:
    if not re.fullmatch(r"\d+(/\d+)?", text.strip()):
        raise argparse.ArgumentTypeError(f"expected an exact fraction p/q, got {text!r}")
    value = Fraction(text)
    if value <= 0:
        raise argparse.ArgumentTypeError("value must be positive")
    return value


def _write_atomic(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=os.path.basename(path))
    try:
        with os.fdopen(fd, "w", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _emit(text: str, path: str | None) -> None:
    if path:
        _write_atomic(path, text)
    else:
        sys.stdout.write(text)


def _load(path: str):
    with open(path) as fh:
        return formats.parse_gr(fh.read())


def _ids(vs) -> list[int]:
    return [v + 1 for v in sorted(vs)]


# ---------------------------------------------------------------- commands


def cmd_gen(args) -> int:
    params = {k: getattr(args, k) for k in ("n", "k", "cols", "depth", "degree", "p") if getattr(args, k) is not None}
    g = generate(args.family, seed=args.seed, **params)
    text = formats.write_gr(g)
    if formats.parse_gr(text) != g:
        raise CertificateError("written graph does not re-parse to itself")
    _emit(text, args.output)
    return EXIT_OK


def cmd_exact(args) -> int:
    g = _load(args.graph)
    kw = {} if args.limit is None else {"limit_n": args.limit}
    if args.param == "bw":
        value, sigma = exact_bandwidth(g, **kw)
        if bandwidth_of_labelling(g, sigma) != value:
            raise CertificateError("bandwidth witness does not attain the value")
    elif args.param == "tw":
        value, td = exact_treewidth(g, **kw)
        if not validate_tree_decomposition(g, td) or td.width != value:
            raise CertificateError("treewidth witness invalid")
    elif args.param == "sep":
        value = exact_separation_number(g, **kw)
    else:
        if args.eps is None:
            print("exact bdd needs --eps p/q", file=sys.stderr)
            return EXIT_USAGE
        value = exact_boundedness(g, args.eps, **kw).value
    print(value)
    return EXIT_OK


def cmd_separate(args) -> int:
    g = _load(args.graph)
    if args.method == "expansion":
        if args.eps is None:
            print("--method expansion needs --eps p/q", file=sys.stderr)
            return EXIT_USAGE
        sep = separator_from_nonexpanding(g, args.eps, make_finder("auto", seed=args.seed))
    else:
        sep = provider(args.method)(g, args.alpha)
    if not validate_separator(g, sep):
        raise CertificateError("separator failed validation")
    doc = {"S": _ids(sep.S), "A": _ids(sep.A), "B": _ids(sep.B), "alpha": sep.alpha, "source": sep.source}
    _emit(formats.write_document(doc), args.output)
    return EXIT_OK


def cmd_expansion(args) -> int:
    g = _load(args.graph)
    wit = nonexpanding_set(g, args.eps, mode=args.mode, seed=args.seed)
    if wit is None:
        doc = {"result": "none found", "proof": False}
    elif wit.kind == EXHAUSTIVE_ABSENCE:
        doc = {"result": "expander", "proof": True}
    else:
        doc = {"result": "non-expanding set", "W": _ids(wit.vertices), "boundary": _ids(wit.boundary), "ratio": wit.ratio}
    doc["eps"] = args.eps
    _emit(formats.write_document(doc), args.output)
    return EXIT_OK


def cmd_order(args) -> int:
    g = _load(args.graph)
    cert = recursive_band_ordering(g, provider(args.provider), args.scap)
    text = formats.write_ordering(cert.labelling)
    back = formats.parse_ordering(text, g.n)
    if back != cert.labelling or bandwidth_of_labelling(g, back) != cert.bandwidth:
        raise CertificateError("written ordering does not re-parse to the certified labelling")
    _emit(text, args.output)
    doc = {
        "n": g.n,
        "max_degree": g.max_degree,
        "provider": args.provider,
        "fallback": cert.fallback,
        "reason": cert.reason,
        "measured_bandwidth": cert.bandwidth,
        "s_cap": cert.s_cap,
    }
    if not cert.fallback:
        part = cert.partition
        doc.update(
            {
                "b": cert.b,
                "beta": round(cert.beta, 9),
                "formula_bound": round(cert.formula_bound, 6),
                "guaranteed_bound": cert.guaranteed_bound,
                "separator_vertices": len(part.S),
                "buffer_vertices": part.p_size,
                "r": part.r,
                "bucket_sizes": list(cert.buckets.sizes),
                "separators": len(cert.separators),
                "tree_leaves": len(cert.tree.leaves),
            }
        )
    if args.cert:
        _write_atomic(args.cert, formats.write_document(doc))
    else:
        sys.stderr.write(formats.write_document(doc))
    return EXIT_OK


def cmd_treedecomp(args) -> int:
    g = _load(args.graph)
    res = td_from_separators(g, args.eps, make_finder(args.finder, seed=args.seed), base_size=args.base)
    text = formats.write_td(res.td)
    back = formats.parse_td(text, g)
    if back != res.td or not validate_tree_decomposition(g, back):
        raise CertificateError("written decomposition does not re-parse and validate")
    _emit(text, args.output)
    print(f"width {res.td.width} b_used {res.b_used} bound {treewidth_bound_formula(res.b_used, args.eps, g.n)}", file=sys.stderr)
    return EXIT_OK


def cmd_report(args) -> int:
    g = _load(args.graph)
    doc = build_report(g, ReportConfig(full_exact=args.full_exact, provider=args.provider, seed=args.seed))
    _emit(formats.write_report(doc), args.output)
    return EXIT_OK


def run_selftest(n_max: int = 8, samples: int = 200, seed: int = 0, n_min: int = 5) -> dict:
    """The exact inequality chain over a seeded corpus, plus constructive checks.

    The peeling-separator check runs on named families and sparse graphs up
    to 12 vertices: connected random graphs this small almost always contain
    an expander on half their vertices, so the check would be vacuous there.

    Returns counts per check; ``violations`` holds graph names per failed check.
    """
    start = time.perf_counter()
    corpus = random_corpus(samples, seed, n_min=n_min, n_max=n_max)
    checks = [
        "separation <= treewidth + 1",
        "treewidth <= bandwidth",
        "boundedness <= ceil(2 bandwidth / eps), eps in {1/2, 1}",
        "boundedness <= 2 floor(bandwidth / eps) + 1, eps in {1/2, 1}",
        "treewidth <= 2 boundedness + 2 eps n, eps in {1/4, 1/2}",
        "separator from exact decomposition is (trw+1, 2/3)",
        "peeling separator within (2/3) eps n when (n/2, eps)-bounded",
    ]
    violations: dict[str, list[str]] = {c: [] for c in checks}
    evaluated = {c: 0 for c in checks}
    for cg in corpus:
        g = cg.graph
        bw, _ = exact_bandwidth(g)
        tw, td = exact_treewidth(g)
        s = exact_separation_number(g)
        bdd = {e: exact_boundedness(g, e).value for e in (Fraction(1, 4), Fraction(1, 2), Fraction(1))}

        def record(check, ok):
            evaluated[check] += 1
            if not ok:
                violations[check].append(cg.name)

        record(checks[0], s <= tw + 1)
        record(checks[1], tw <= bw)
        for e in (Fraction(1, 2), Fraction(1)):
            record(checks[2], bdd[e] <= boundedness_from_bandwidth(bw, e))
            record(checks[3], bdd[e] <= boundedness_from_bandwidth_sound(bw, e))
        for e in (Fraction(1, 4), Fraction(1, 2)):
            record(checks[4], tw <= treewidth_bound_formula(bdd[e], e, g.n))
        sep = separator_from_tree_decomposition(g, td)
        record(checks[5], bool(validate_separator(g, sep, tw + 1)))
    for cg in named_corpus(12) + sparse_corpus(seed=seed):
        g = cg.graph
        for e in (Fraction(1, 4), Fraction(1, 2)):
            if 2 * exact_boundedness(g, e).value < g.n:  # no expander on n/2 or more vertices
                try:
                    sep = separator_from_nonexpanding(g, e, make_finder("exact"))
                    ok = 3 * sep.size <= 2 * e * g.n and bool(validate_separator(g, sep))
                except (ExpanderFound, CertificateError):
                    ok = False
                evaluated[checks[6]] += 1
                if not ok:
                    violations[checks[6]].append(cg.name)
    return {
        "graphs": len(corpus),
        "n_range": [n_min, n_max],
        "seed": seed,
        "evaluated": evaluated,
        "violations": {c: len(v) for c, v in violations.items()},
        "examples": {c: v[:5] for c, v in violations.items() if v},
        "seconds": round(time.perf_counter() - start, 3),
    }


# checks whose failure means this package produced a wrong certificate
CERTIFIED_CHECKS = (
    "separation <= treewidth + 1",
    "treewidth <= bandwidth",
    "boundedness <= 2 floor(bandwidth / eps) + 1, eps in {1/2, 1}",
    "treewidth <= 2 boundedness + 2 eps n, eps in {1/4, 1/2}",
    "separator from exact decomposition is (trw+1, 2/3)",
    "peeling separator within (2/3) eps n when (n/2, eps)-bounded",
)


def cmd_selftest(args) -> int:
    summary = run_selftest(args.n_max, args.samples, args.seed, n_min=min(5, args.n_max))
    summary.pop("seconds")
    sys.stdout.write(formats.write_document(summary))
    bad = [c for c in CERTIFIED_CHECKS if summary["violations"][c]]
    if bad:
        print(f"certified checks violated: {', '.join(bad)}", file=sys.stderr)
        return EXIT_CERT
    return EXIT_OK


# ------------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="bandsep", description="Certified bandwidth, treewidth, separator and expansion tools.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a graph in .gr format")
    p.add_argument("family", choices=FAMILIES)
    for name, typ in (("n", int), ("k", int), ("cols", int), ("depth", int), ("degree", int), ("p", float)):
        p.add_argument(f"--{name}", type=typ)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("exact", help="exact parameter value on a small graph")
    p.add_argument("param", choices=("bw", "tw", "sep", "bdd"))
    p.add_argument("-g", "--graph", required=True)
    p.add_argument("--eps", type=_fraction)
    p.add_argument("--limit", type=int)
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("separate", help="find and validate a balanced separator")
    p.add_argument("-g", "--graph", required=True)
    p.add_argument("--alpha", type=_fraction, default=Fraction(2, 3))
    p.add_argument("--method", choices=sorted(PROVIDERS) + ["expansion"], default="auto")
    p.add_argument("--eps", type=_fraction)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_separate)

    p = sub.add_parser("expansion", help="search for a non-expanding set")
    p.add_argument("-g", "--graph", required=True)
    p.add_argument("--eps", type=_fraction, required=True)
    p.add_argument("--mode", choices=("exact", "sweep"), default="exact")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_expansion)

    p = sub.add_parser("order", help="separator-driven bandwidth ordering with certificate")
    p.add_argument("-g", "--graph", required=True)
    p.add_argument("--scap", type=int)
    p.add_argument("--provider", choices=sorted(PROVIDERS), default="auto")
    p.add_argument("-o", "--output")
    p.add_argument("--cert")
    p.set_defaults(func=cmd_order)

    p = sub.add_parser("treedecomp", help="tree decomposition by recursive separation")
    p.add_argument("-g", "--graph", required=True)
    p.add_argument("--eps", type=_fraction, required=True)
    p.add_argument("--base", type=int, default=8)
    p.add_argument("--finder", choices=("auto", "exact", "sweep"), default="auto")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_treedecomp)

    p = sub.add_parser("report", help="certified per-graph report")
    p.add_argument("-g", "--graph", required=True)
    p.add_argument("--full-exact", action="store_true")
    p.add_argument("--provider", choices=sorted(PROVIDERS), default="auto")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("selftest", help="exact inequality suite on a seeded corpus")
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_selftest)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SizeGuardError as exc:
        print(f"size guard: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (CertificateError, SeparatorNotFound, ExpanderFound) as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_CERT
    except (FormatError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
