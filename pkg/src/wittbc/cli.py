"""Command-line front end.

Every subcommand reads JSON arguments, computes with the exact kernels,
and prints one JSON document (or a pretty rendering with --format
pretty).  Output is deterministic for identical inputs: term lists are
canonically sorted and JSON keys are emitted sorted.

Exit codes: 0 success, 1 domain error (machine-readable {"error": ...}
on stderr), 2 usage error.
"""

from __future__ import annotations

import argparse
import cmath
import json
import sys
from fractions import Fraction

from . import bcalg, geodef, qsm, qwitt, witt, zetageo
from .groupring import GroupRingElem, QExpPoly
from .series import TruncSeries
from .witt import GhostVector, W0Elem, WittVector


def _parse_json(text: str, what: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid JSON for {what}: {exc}") from exc


def _parse_series(text: str) -> TruncSeries:
    data = _parse_json(text, "series")
    if isinstance(data, dict):
        return TruncSeries.from_json(data, coeff_decoder=QExpPoly.from_json)
    return TruncSeries([Fraction(str(c)) for c in data])


def _parse_components(text: str) -> list[Fraction]:
    data = _parse_json(text, "components")
    return [Fraction(str(c)) for c in data]


def _parse_q(text: str):
    return zetageo.FORMAL if text == "formal" else int(text)


def _parse_ring(text: str):
    """--ring Z|Q|R|habiro:N,D -> (ring, habiro_level, habiro_depth)."""
    if text.startswith("habiro:"):
        level, _, depth = text[len("habiro:"):].partition(",")
        return "habiro", int(level), int(depth or "1")
    if text not in ("Z", "Q", "R", "RQ"):
        raise ValueError(f"unknown ring {text!r}")
    return text, None, 1


def _pretty(obj, indent=0) -> str:
    pad = "  " * indent
    if isinstance(obj, dict):
        lines = []
        for k in sorted(obj):
            v = obj[k]
            if isinstance(v, (dict, list)):
                lines.append(f"{pad}{k}:")
                lines.append(_pretty(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {v}")
        return "\n".join(lines)
    if isinstance(obj, list):
        return "\n".join(_pretty(v, indent) if isinstance(v, (dict, list))
                         else f"{pad}- {v}" for v in obj)
    return f"{pad}{obj}"


def _emit(obj, fmt: str) -> None:
    if fmt == "pretty":
        print(_pretty(obj))
    else:
        print(json.dumps(obj, indent=2, sort_keys=True))


def _series_out(f: TruncSeries):
    return f.to_json()


# -- command handlers -------------------------------------------------


def _cmd_witt(args) -> dict | list:
    op = args.op
    if op in ("add", "mul"):
        a, b = _parse_series(args.a), _parse_series(args.b)
        f = witt.witt_add(a, b) if op == "add" else witt.witt_mul(a, b)
        return _series_out(f)
    if op == "ghost":
        x = WittVector(_parse_components(args.x))
        return {"components": [str(c) for c in witt.ghost_from_witt(x).components]}
    if op == "unghost":
        g = GhostVector(_parse_components(args.g))
        return {"components": [str(c) for c in witt.witt_from_ghost(g).components]}
    if op == "frob":
        return _series_out(witt.frobenius(_parse_series(args.series), args.n))
    if op == "versch":
        return _series_out(witt.verschiebung(_parse_series(args.series), args.n))
    raise ValueError(f"unknown witt operation {op!r}")


def _cmd_qwitt(args) -> dict | list:
    op = args.op
    if op == "ghost":
        xs = _parse_components(args.x)
        return {"components": [str(c) for c in
                               qwitt.qghost_components(xs, args.q)]}
    if op == "mul":
        a = qwitt.QWittVector(args.q, _parse_components(args.a))
        b = qwitt.QWittVector(args.q, _parse_components(args.b))
        return {"components": [str(c) for c in qwitt.qwitt_mul(a, b).components]}
    if op == "star_q":
        a = qwitt.LambdaQElem(args.q, _parse_series(args.a))
        b = qwitt.LambdaQElem(args.q, _parse_series(args.b))
        return _series_out(qwitt.star_q(a, b).series)
    if op == "diagram":
        e = W0Elem.from_json(_parse_json(args.e, "eigenvalue list"))
        reports = qwitt.diagram_checks(e, args.q, args.n, args.order)
        return [r.to_json() for r in reports]
    raise ValueError(f"unknown qwitt operation {op!r}")


def _cmd_geodef(args) -> dict | list:
    op = args.op
    if op == "omega":
        e = W0Elem.from_json(_parse_json(args.e, "eigenvalue list"))
        return geodef.omega(e, Fraction(args.grade), args.kind).to_json()
    x = geodef.GradedW0Elem.from_json(_parse_json(args.x, "graded element"))
    if x.kind != args.kind:
        raise ValueError(f"element kind {x.kind!r} does not match --kind {args.kind!r}")
    if op == "mul":
        y = geodef.GradedW0Elem.from_json(_parse_json(args.y, "graded element"))
        return geodef.graded_mul(x, y).to_json()
    if op == "frob":
        return geodef.graded_frobenius(x, args.n).to_json()
    if op == "versch":
        return geodef.graded_verschiebung(x, args.n).to_json()
    if op == "divisor":
        return geodef.deformed_divisor(x).to_json()
    raise ValueError(f"unknown geodef operation {op!r}")


def _cmd_zeta(args) -> dict | list:
    op = args.op
    q = _parse_q(args.q) if args.q is not None else None
    if op == "affine":
        return zetageo.zeta_affine(args.l, q, args.order).to_json()
    if op == "projective":
        return zetageo.zeta_projective(args.n, q, args.order).to_json()
    if op == "necklace":
        x = zetageo.FORMAL if args.x == "formal" else int(args.x)
        m = zetageo.necklace(QExpPoly.q(1) if x == zetageo.FORMAL else x, args.r)
        return {"value": m.to_json() if isinstance(m, QExpPoly) else m}
    if op in ("product", "union"):
        za = zetageo.ZetaFunction.from_json(_parse_json(args.a, "zeta"))
        zb = zetageo.ZetaFunction.from_json(_parse_json(args.b, "zeta"))
        fn = zetageo.zeta_product if op == "product" else zetageo.zeta_disjoint_union
        return fn(za, zb).to_json()
    if op == "shift":
        z = zetageo.ZetaFunction.from_json(_parse_json(args.z, "zeta"))
        return zetageo.zeta_affine_shift(z, args.l).to_json()
    raise ValueError(f"unknown zeta operation {op!r}")


def _cmd_bc(args) -> dict:
    ring, level, depth = _parse_ring(args.ring)
    kw = {"habiro_level": level, "habiro_depth": depth} if ring == "habiro" else {}
    if args.op == "normalize":
        word = _parse_json(args.word, "word")
        return bcalg.bc_normalize(word, ring, **kw).to_json()
    if args.op == "mul":
        a = bcalg.bc_normalize(_parse_json(args.a, "word"), ring, **kw)
        b = bcalg.bc_normalize(_parse_json(args.b, "word"), ring, **kw)
        return bcalg.bc_mul(a, b).to_json()
    raise ValueError(f"unknown bc operation {args.op!r}")


_CHECK_GENERATORS = {
    "classic": [("mu", 2), ("mu", 3), ("mustar", 2), ("mustar", 3),
                ("elem", "e(1/3)"), ("elem", "e(1/2)")],
    "qclassic": [("mu", 2), ("mu", 3), ("mustar", 2), ("mustar", 3),
                 ("elem", "e(1/3)"), ("elem", "e(1/2)")],
    "weighted": [("mu", 2), ("mu", 3), ("mustar", 2), ("mustar", 3),
                 ("elem", "E(1/2,1/3)"), ("elem", "E(1,0)"),
                 ("omega", "1")],
}


def _make_generator(system: str, kind: str, data):
    if kind in ("mu", "mustar"):
        return (kind, data)
    if kind == "elem":
        if system == "weighted":
            inner = data[2:-1]
            qexp, tors = inner.split(",")
            return ("elem", GroupRingElem.E(Fraction(qexp), Fraction(tors), "RQ"))
        return ("elem", GroupRingElem.e(Fraction(data[2:-1]), "Q"))
    if kind == "omega":
        # z on the unit circle keeps the weight phases unimodular, so the
        # absolute-deviation threshold is meaningful
        return ("omega", (Fraction(data), 1j))
    raise ValueError(f"unknown generator kind {kind!r}")


def _cmd_qsm(args) -> dict:
    if args.op == "zeta":
        res = qsm.zeta_q(args.s, args.q, mode=args.mode, tol=args.tol)
        return res.to_json()
    if args.op == "partition":
        if args.system:
            res = qsm.partition_Zq_system(args.beta, args.q, tol=args.tol)
        else:
            res = qsm.partition_Z(args.beta, args.q, tol=args.tol)
        return res.to_json()
    if args.op == "check":
        reports = []
        for kind, data in _CHECK_GENERATORS[args.system]:
            gen = _make_generator(args.system, kind, data)
            rep = qsm.covariance_check(gen, args.t, system=args.system,
                                       q=args.q, samples=args.samples,
                                       tol=args.tol)
            reports.append(rep.to_json())
        return {"system": args.system, "t": args.t,
                "pass": all(r["pass"] for r in reports), "generators": reports}
    raise ValueError(f"unknown qsm operation {args.op!r}")


# -- parser ------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    root = argparse.ArgumentParser(
        prog="wittbc",
        description="Exact Witt/lambda-ring arithmetic, q-deformations, "
                    "Bost-Connes algebras, and q-analog zeta numerics.")
    sub = root.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("json", "pretty"), default="json")

    witt_p = sub.add_parser("witt", help="big Witt ring on series and vectors")
    wsub = witt_p.add_subparsers(dest="op", required=True)
    for op in ("add", "mul"):
        p = wsub.add_parser(op)
        p.add_argument("--a", required=True, help="series coefficient array")
        p.add_argument("--b", required=True)
        common(p)
    p = wsub.add_parser("ghost")
    p.add_argument("--x", required=True, help="Witt coordinate array")
    common(p)
    p = wsub.add_parser("unghost")
    p.add_argument("--g", required=True, help="ghost component array")
    common(p)
    for op in ("frob", "versch"):
        p = wsub.add_parser(op)
        p.add_argument("--series", required=True)
        p.add_argument("--n", type=int, required=True)
        common(p)

    qwitt_p = sub.add_parser("qwitt", help="q-deformed Witt and lambda rings")
    qsub = qwitt_p.add_subparsers(dest="op", required=True)
    p = qsub.add_parser("ghost")
    p.add_argument("--x", required=True)
    p.add_argument("--q", type=int, default=2)
    common(p)
    p = qsub.add_parser("mul")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--q", type=int, default=2)
    common(p)
    p = qsub.add_parser("star_q")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--q", type=int, default=2)
    common(p)
    p = qsub.add_parser("diagram")
    p.add_argument("--e", required=True, help='eigenvalues [{"alpha":"1/3","mult":1}]')
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--order", type=int, default=8)
    common(p)

    geo_p = sub.add_parser("geodef", help="graded geometric deformations")
    gsub = geo_p.add_subparsers(dest="op", required=True)
    p = gsub.add_parser("omega")
    p.add_argument("--e", required=True)
    p.add_argument("--grade", required=True)
    p.add_argument("--kind", choices=geodef.KINDS, default="affine")
    common(p)
    for op in ("mul", "frob", "versch", "divisor"):
        p = gsub.add_parser(op)
        p.add_argument("--x", required=True)
        if op == "mul":
            p.add_argument("--y", required=True)
        if op in ("frob", "versch"):
            p.add_argument("--n", type=int, required=True)
        p.add_argument("--kind", choices=geodef.KINDS, default="affine")
        common(p)

    zeta_p = sub.add_parser("zeta", help="zeta functions over finite fields")
    zsub = zeta_p.add_subparsers(dest="op", required=True)
    p = zsub.add_parser("affine")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--q", default="2")
    p.add_argument("--order", type=int, default=12)
    common(p)
    p = zsub.add_parser("projective")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", default="2")
    p.add_argument("--order", type=int, default=12)
    common(p)
    for op in ("product", "union"):
        p = zsub.add_parser(op)
        p.add_argument("--a", required=True, help="zeta JSON")
        p.add_argument("--b", required=True)
        p.add_argument("--q", default=None)
        common(p)
    p = zsub.add_parser("shift")
    p.add_argument("--z", required=True, help="zeta JSON")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--q", default=None)
    common(p)
    p = zsub.add_parser("necklace")
    p.add_argument("--x", required=True, help="integer or 'formal'")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--q", default=None)
    common(p)

    bc_p = sub.add_parser("bc", help="Bost-Connes normal forms")
    bsub = bc_p.add_subparsers(dest="op", required=True)
    p = bsub.add_parser("normalize")
    p.add_argument("--word", required=True,
                   help='[{"mu":2},{"e":"1/3"},{"mustar":2}]')
    p.add_argument("--ring", default="Z", help="Z|Q|R|RQ|habiro:N,D")
    common(p)
    p = bsub.add_parser("mul")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--ring", default="Z")
    common(p)

    qsm_p = sub.add_parser("qsm", help="numeric zeta/partition/covariance")
    ssub = qsm_p.add_subparsers(dest="op", required=True)
    p = ssub.add_parser("zeta")
    p.add_argument("--q", type=float, required=True)
    p.add_argument("--s", type=float, required=True)
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--mode", choices=("smallq", "bigq"), default=None)
    common(p)
    p = ssub.add_parser("partition")
    p.add_argument("--q", type=float, required=True)
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--system", action="store_true",
                   help="weighted tensor system instead of the plain trace")
    common(p)
    p = ssub.add_parser("check")
    p.add_argument("--system", choices=("classic", "qclassic", "weighted"),
                   required=True)
    p.add_argument("--t", type=float, default=0.7)
    p.add_argument("--q", type=float, default=2.0)
    p.add_argument("--samples", type=int, default=64)
    p.add_argument("--tol", type=float, default=1e-9)
    common(p)

    return root


_HANDLERS = {"witt": _cmd_witt, "qwitt": _cmd_qwitt, "geodef": _cmd_geodef,
             "zeta": _cmd_zeta, "bc": _cmd_bc, "qsm": _cmd_qsm}


def dispatch(argv: list[str]) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        result = _HANDLERS[args.command](args)
    except (ValueError, ArithmeticError) as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return 1
    _emit(result, args.format)
    return 0


def main() -> None:
    sys.exit(dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
