"""Command line front end and certificate emission."""
import argparse
import concurrent.futures
import json
import sys
from importlib import resources

from .certify import (
    KIND_CONCLUSION,
    SCHEMA_VERSION,
    certify,
    cross_validate,
)
from .curves import intersection_number
from .dsl import curve_from_text
from .errors import WorkbenchError
from .floer import (
    RankInterval,
    Verdict,
    lspace_profile,
    staircase_from_alexander,
)
from .mcg import alexander_polynomial, monodromy_phi, standard_curve_system
from .poly import parse_poly


def emit_certificate(cert, fmt="text"):
    """Render a certificate as text or JSON.

    Emission is byte deterministic for a given certificate: fixed key
    order, no timestamps.  In JSON, step outputs are {lo, hi} intervals
    (hi null when unbounded; arithmetic bound values appear as degenerate
    intervals and may be negative) except for the conclusion, which is
    {verdict}.
    """
    if fmt == "json":
        return json.dumps(_cert_dict(cert), indent=2) + "\n"
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    lines = [f"certificate genus={cert.genus} n={cert.n}"]
    for s in cert.steps:
        out = s.output
        if isinstance(out, Verdict):
            shown = out.value
        elif isinstance(out, RankInterval):
            shown = str(out)
        else:
            shown = str(out)
        lines.append(f"[{s.index:02d}] {s.kind:<21} {s.label} -> {shown}")
    final = cert.steps[-1]
    assert final.kind == KIND_CONCLUSION
    lines.append(f"final bound: {final.label}")
    return "\n".join(lines) + "\n"


def _output_dict(out):
    if isinstance(out, Verdict):
        return {"verdict": out.value}
    if isinstance(out, RankInterval):
        return {"lo": out.lo, "hi": out.hi}
    return {"lo": out, "hi": out}


def _cert_dict(cert):
    return {
        "schema_version": SCHEMA_VERSION,
        "genus": cert.genus,
        "n": cert.n,
        "steps": [
            {
                "index": s.index,
                "kind": s.kind,
                "label": s.label,
                "inputs": list(s.inputs),
                "output": _output_dict(s.output),
                "citation": {"anchor": s.citation.anchor, "quote": s.citation.quote},
            }
            for s in cert.steps
        ],
        "final_bound": cert.final_bound,
        "verdict": cert.verdict.value,
    }


def replay_json(text):
    """Re-derive the certificate a JSON document describes.

    Only the (genus, n) pair is trusted; everything else is recomputed,
    so comparing the emission of the result against the input is a full
    integrity check.
    """
    data = json.loads(text)
    return certify(data["genus"], data["n"])


def certificate_schema():
    """The published JSON schema as a dict."""
    path = resources.files("lspacecert").joinpath("certificate.schema.json")
    return json.loads(path.read_text())


# ---------------------------------------------------------------------------
# commands

def _parse_range(text):
    if ".." in text:
        lo, hi = text.split("..", 1)
        return range(int(lo), int(hi) + 1)
    v = int(text)
    return range(v, v + 1)


def _cmd_curves(args, out):
    system = standard_curve_system(args.genus)
    named = system.named()
    width = max(len(name) for name, _ in named)
    out.write(f"standard system on genus {args.genus}\n")
    for name, curve in named:
        out.write(f"  {name:<{width}}  {curve.tokens()}\n")
    out.write("intersection table\n")
    header = " ".join(f"{name:>3}" for name, _ in named)
    out.write(f"  {'':{width}}  {header}\n")
    for name, x in named:
        row = " ".join(f"{intersection_number(x, y):>3}" for _, y in named)
        out.write(f"  {name:<{width}}  {row}\n")
    return 0


def _cmd_intersect(args, out):
    a = curve_from_text(args.expr[0], args.genus)
    b = curve_from_text(args.expr[1], args.genus)
    out.write(f"{intersection_number(a, b)}\n")
    return 0


def _cmd_twist(args, out):
    curve = curve_from_text(args.expr, args.genus)
    out.write(f"{curve.tokens()}\n")
    return 0


def _cmd_alexander(args, out):
    poly = alexander_polynomial(monodromy_phi(args.genus, args.n))
    out.write(f"{poly}\n")
    return 0


def _cmd_staircase(args, out):
    stair = staircase_from_alexander(parse_poly(args.polynomial))
    profile = lspace_profile(stair)
    out.write("ns:     " + " ".join(str(v) for v in stair.ns) + "\n")
    out.write("deltas: " + " ".join(str(v) for v in stair.deltas) + "\n")
    ranks = " ".join(
        f"{j}:{profile.rank_at(j)}" for j in profile.gradings if profile.rank_at(j)
    )
    out.write(f"ranks:  {ranks} (total {profile.total_rank})\n")
    return 0


def _cmd_certify(args, out):
    cert = certify(args.genus, args.n)
    out.write(emit_certificate(cert, "json" if args.json else "text"))
    return 0


def _cmd_validate(args, out):
    report = cross_validate(args.genus, args.n, budget=args.budget)
    out.write(
        f"g={report.genus} n={report.n} direct={report.direct_value} "
        f"bound={report.engine_bound} slack={report.slack} "
        f"non_isotopic={report.non_isotopic}\n"
    )
    return 0


def _sweep_one(task):
    g, n = task
    cert = certify(g, n)
    return g, n, cert.final_bound, cert.verdict.value


def _cmd_sweep(args, out):
    tasks = [(g, n) for g in _parse_range(args.genus) for n in _parse_range(args.n)]
    if args.jobs > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_sweep_one, tasks))
    else:
        results = [_sweep_one(t) for t in tasks]
    mismatches = 0
    for g, n, bound, verdict in results:
        expected = (
            Verdict.OBSTRUCTION_FOUND if n >= 1 else Verdict.INCONCLUSIVE
        ).value
        flag = ""
        if verdict != expected:
            mismatches += 1
            flag = f"  MISMATCH (expected {expected})"
        out.write(f"g={g} n={n} final_bound={bound} verdict={verdict}{flag}\n")
    out.write(f"{len(results)} certificates, {mismatches} mismatches\n")
    return 2 if mismatches else 0


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="lspacecert",
        description=(
            "Exact intersection calculus on a one-holed genus-g surface and "
            "L-space obstruction certificates for its twisted monodromies."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("curves", help="print the standard curve system")
    p.add_argument("-g", "--genus", type=int, required=True)
    p.set_defaults(func=_cmd_curves)

    p = sub.add_parser("intersect", help="geometric intersection number")
    p.add_argument("-g", "--genus", type=int, required=True)
    p.add_argument("expr", nargs=2, help="two curve expressions")
    p.set_defaults(func=_cmd_intersect)

    p = sub.add_parser("twist", help="normalized word of a curve expression")
    p.add_argument("-g", "--genus", type=int, required=True)
    p.add_argument("expr")
    p.set_defaults(func=_cmd_twist)

    p = sub.add_parser("alexander", help="Alexander polynomial of phi_n")
    p.add_argument("-g", "--genus", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.set_defaults(func=_cmd_alexander)

    p = sub.add_parser("staircase", help="staircase of an L-space form polynomial")
    p.add_argument("polynomial")
    p.set_defaults(func=_cmd_staircase)

    p = sub.add_parser("certify", help="derive the obstruction certificate")
    p.add_argument("-g", "--genus", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("validate", help="directly measure the twisted pair rank")
    p.add_argument("-g", "--genus", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--budget", type=int, default=50_000)
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("sweep", help="certify a grid of (g, n) and verify verdicts")
    p.add_argument("-g", "--genus", required=True, help="genus or range G1..G2")
    p.add_argument("-n", required=True, help="twist count or range N1..N2")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=_cmd_sweep)

    return parser


def main(argv=None, out=None):
    out = out if out is not None else sys.stdout
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code in (0, None) else 1
    try:
        return args.func(args, out)
    except WorkbenchError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return 1
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
