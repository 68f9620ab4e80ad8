"""``ringline`` command line: analyses of finite rings, their projective lines,
representations and geometric models, reported as deterministic JSON.

Exit codes: 0 all certificates pass, 1 some certificate failed, 2 usage or
materialization error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from . import bimodule as BM
from . import geometry as G
from . import projline as PL
from . import ring as RG
from . import unbounded as UB
from .certificate import Certificate
from .field import gf, prime_power
from .linalg import Subspace, intersection, sum_space

SCHEMA = "ringline/1"
DEFAULT_SEED = 4242
EXAMPLE_IDS = {"5.1": G.Example.REGULUS, "5.2": G.Example.TWISTED_CONJUGATE,
               "5.3": G.Example.PRODUCT_HYPERBOLIC, "5.4": G.Example.DUAL_PARABOLIC,
               "5.5": G.Example.TRIANGULAR, "5.6": G.Example.EPS_DELTA}


class UsageError(ValueError):
    pass


def jsonable(obj):
    """Convert library objects into plain, order-stable JSON values."""
    if isinstance(obj, Certificate):
        return jsonable(obj.to_dict())
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if isinstance(obj, (set, frozenset)):
        return sorted((jsonable(v) for v in obj), key=lambda v: json.dumps(v, sort_keys=True))
    if isinstance(obj, PL.Point):
        return obj.label()
    if isinstance(obj, Subspace):
        return obj.to_list()
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, (bool, int, float, str)) or obj is None:
        return obj
    if hasattr(obj, "item"):  # numpy scalar
        return obj.item()
    return repr(obj)


def dump(report: dict) -> str:
    return json.dumps(jsonable(report), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _labels(R, xs) -> list[str]:
    return [R.label(x) for x in sorted(xs)]


# -- subcommands ---------------------------------------------------------------

def cmd_ring(args) -> tuple[dict, list[Certificate]]:
    R = RG.materialize(args.spec, args.ceiling)
    cert = Certificate("ring")
    df, dfw = RG.is_dedekind_finite(R)
    sr2, srw = RG.has_stable_rank_2(R)
    rad = RG.jacobson_radical(R).members
    cert.check("dedekind_finite", df, [dfw] if dfw else [])
    cert.check("stable_rank_2", sr2, [srw] if srw else [])
    cert.check("radical_one_sided_agree", RG.left_radical_characterization(R) == rad)
    ge = PL.ge2_analysis(R, args.gl2_ceiling, args.ceiling)
    if "ge2_ring" in ge:
        cert.check("ge2_ring", ge["ge2_ring"])
    section = {**RG.ring_summary(R), "units": _labels(R, R.units), "radical": _labels(R, rad),
               "dedekind_finite": df, "stable_rank_2": sr2, "local": RG.non_units_form_ideal(R),
               "ge2": ge}
    return {"ring": section}, [cert]


def cmd_pline(args) -> tuple[dict, list[Certificate]]:
    R = RG.materialize(args.spec, args.ceiling)
    pts = PL.projective_line(R, args.ceiling)
    g = PL.distant_graph(R)
    ge = PL.ge2_analysis(R, args.gl2_ceiling, args.ceiling)
    cert = Certificate("pline")
    cert.check("e2_orbit_equals_pline", ge.get("e2_orbit_equals_pline", True))
    if R.size <= args.gl2_ceiling:
        bad = [(R.label(a), R.label(b)) for a in range(R.size) for b in range(R.size)
               if PL.is_unimodular(R, a, b) != PL.is_admissible(R, a, b, mode="oracle")]
        cert.check("unimodular_iff_admissible", not bad, bad)
        notice = None
    else:
        notice = f"GL2 scan skipped: |R| = {R.size} > {args.gl2_ceiling}"
    if args.dot:
        Path(args.dot).write_text(g.to_dot())
    section = {"ring": R.name, "size": len(pts), "points": [p.label() for p in pts],
               "graph": g.stats(), "ge2": ge}
    if notice:
        section["notice"] = notice
    return {"pline": section}, [cert]


def cmd_hom(args) -> tuple[dict, list[Certificate]]:
    S = RG.materialize(args.source, args.ceiling)
    T = RG.materialize(args.target, args.ceiling)
    if args.images:
        parts = [x for x in args.images.split(",")]
        if len(parts) != S.size:
            raise UsageError(f"--images needs {S.size} entries, got {len(parts)}")
        phi = RG.validate_hom(S, T, [T.element(x) for x in parts])
    else:
        try:
            phi = RG.reduction_hom(S, T)
        except RG.HomError as e:
            raise UsageError(f"{e}; pass --images for homs other than k*1 -> k*1") from None
    imap = PL.induced_map(phi, args.words, args.seed)
    refl = PL.check_distance_reflection(phi)
    certs = [imap.certificate, refl]
    section = {"source": S.name, "target": T.name,
               "table": [T.label(phi(a)) for a in range(S.size)],
               "kernel": _labels(S, phi.kernel()),
               "mapping": {p.label(): q.label() for p, q in sorted(imap.mapping.items())},
               "induced": imap.certificate.details,
               "reflects_distance": refl.verdict}
    if phi.is_surjective():
        sc = PL.check_surjectivity(phi, args.gl2_ceiling)
        certs.append(sc)
        section["surjectivity"] = sc.details
    return {"hom": section}, certs


def _load_table_bimodule(R, path: str) -> BM.Bimodule:
    data = json.loads(Path(path).read_text())
    fld = data["field"]
    q = int(str(fld).removeprefix("GF(").removesuffix(")"))
    if prime_power(q) is None:
        raise UsageError(f"field order {q} is not a prime power")
    K = gf(q)
    rho = data["rho"]
    if isinstance(rho, dict):
        rho = [rho[R.label(a)] for a in range(R.size)]
    B = BM.make_bimodule(R, K, rho, name=Path(path).name)
    if "m" in data and int(data["m"]) != B.m:
        raise UsageError(f"declared m = {data['m']} but matrices are {B.m}x{B.m}")
    return B


def cmd_rep(args) -> tuple[dict, list[Certificate]]:
    R = RG.materialize(args.spec, args.ceiling)
    if args.table:
        B = _load_table_bimodule(R, args.table)
    elif args.reduction is not None:
        gens = [R.element(x) for x in args.reduction.split(",") if x.strip()]
        B = BM.reduction_bimodule(R, gens)
    else:
        B = BM.regular_bimodule(R)
    model = BM.build_model(B)
    certs = [BM.verify_model(model), BM.collineation_sweep(B, args.words, args.seed)]
    section = {"bimodule": B.describe(), "model": model.to_dict(),
               "verification": certs[0].details}
    if not model.faithful:
        *_, fc = BM.factor_representation(B)
        certs.append(fc)
        section["factor_representation"] = fc.details
    if B.m <= 3:
        subs = BM.invariant_subspaces(B, 3)
        proper = [W for W in subs if 0 < W.space.dim < B.m]
        section["invariant_subspaces"] = [W.space.to_list() for W in proper]
        for W in proper:
            certs.append(BM.sub_bimodule_model(W))
            certs.append(BM.quotient_model(W))
        for i, W1 in enumerate(proper):
            for W2 in proper[i + 1:]:
                if not intersection(W1.space, W2.space).dim and sum_space(W1.space, W2.space).dim == B.m:
                    certs.append(BM.direct_sum_model(W1, W2))
    return {"rep": section}, certs


def cmd_geometry(args) -> tuple[dict, list[Certificate]]:
    which = EXAMPLE_IDS.get(args.example) or G.Example(args.example)
    spec = G.ExampleSpec(which, args.q, args.aux)
    cert = G.run_example(spec)
    _, fam = G.build_example(spec)
    section = {"example": spec.to_dict(), "family": fam.to_dict(), "summary": cert.details}
    return {"geometry": section}, [cert]


def cmd_demo(args) -> tuple[dict, list[Certificate]]:
    kind = args.kind.lower()
    if kind == "poly":
        cert = UB.poly_example(args.p, args.samples, args.seed)
    elif kind == "zq":
        cert = UB.z_to_q_demo(args.height)
    elif kind == "kernels":
        cert = UB.exact_kernels(args.p, args.samples, args.seed)
    else:
        raise UsageError(f"unknown demo {args.kind!r}")
    return {"demo": {"kind": kind, "summary": cert.details}}, [cert]


# -- driver --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--ceiling", type=int, default=PL.ENUM_CEILING,
                        help="largest ring size for P(R) enumeration")
    common.add_argument("--gl2-ceiling", type=int, default=PL.GL2_CEILING,
                        help="largest ring size for exhaustive GL2 scans")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)
    common.add_argument("--out", help="write the JSON report here instead of stdout")
    common.add_argument("--threads", type=int, default=1,
                        help="accepted for compatibility; analyses run single-threaded")

    ap = argparse.ArgumentParser(prog="ringline", description=__doc__.split("\n\n")[0])
    ap.add_argument("--version", action="version", version=f"ringline {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ring", parents=[common], help="ring invariants")
    p.add_argument("spec")
    p.set_defaults(func=cmd_ring)

    p = sub.add_parser("pline", parents=[common], help="projective line and distant graph")
    p.add_argument("spec")
    p.add_argument("--dot", help="write the distant graph in DOT format")
    p.set_defaults(func=cmd_pline)

    p = sub.add_parser("hom", parents=[common], help="induced map of a ring homomorphism")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("--images", help="comma-separated images of the source elements, in index order")
    p.add_argument("--words", type=int, default=PL.EQUIVARIANCE_WORDS)
    p.set_defaults(func=cmd_hom)

    p = sub.add_parser("rep", parents=[common], help="projective representation of a bimodule")
    p.add_argument("spec")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--regular", action="store_true", help="R acting on itself (default)")
    g.add_argument("--table", help="JSON file with field, m and rho")
    g.add_argument("--reduction", help="ideal generators: R acting on R/I")
    p.add_argument("--words", type=int, default=BM.COLLINEATION_WORDS)
    p.set_defaults(func=cmd_rep)

    p = sub.add_parser("geometry", parents=[common], help="finite-geometry models")
    p.add_argument("example", help="5.1 .. 5.6 or an example name such as Regulus51")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--aux", type=int, help="Frobenius power (5.2, 5.4) or factor count (5.3)")
    p.set_defaults(func=cmd_geometry)

    p = sub.add_parser("demo", parents=[common], help="exact infinite-ring demos")
    p.add_argument("kind", help="poly, ZQ or kernels")
    p.add_argument("--p", type=int, default=2)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--height", type=int, default=10)
    p.set_defaults(func=cmd_demo)
    return ap


def _invocation(args) -> dict:
    skip = {"func", "out", "threads"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    if args.threads < 1 or args.ceiling < 1 or args.gl2_ceiling < 1:
        print("ringline: --threads and ceilings must be positive", file=sys.stderr)
        return 2
    try:
        sections, certs = args.func(args)
    except (ValueError, ArithmeticError, OSError, KeyError) as e:
        report = {"schema": SCHEMA, "command": args.command, "invocation": _invocation(args),
                  "error": f"{type(e).__name__}: {e}", "ok": False}
        _emit(args, report)
        print(f"ringline: {e}", file=sys.stderr)
        return 2
    ok = all(c.ok for c in certs)
    report = {"schema": SCHEMA, "version": __version__, "command": args.command,
              "invocation": _invocation(args), "sections": sections,
              "certificates": [c.to_dict() for c in certs], "ok": ok}
    _emit(args, report)
    return 0 if ok else 1


def _emit(args, report: dict):
    text = dump(report)
    if getattr(args, "out", None):
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


if __name__ == "__main__":
    sys.exit(main())
