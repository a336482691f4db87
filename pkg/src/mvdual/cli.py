"""Command-line interface: every result is printed as JSON on stdout.

Object and arrow arguments are JSON files, builtin names (``two``,
``point``, ``empty``, ``D<n>``) or inline JSON literals.  An argument that
starts with ``{`` is read as a literal; ``--inline`` forces that reading for
all of them.

Exit codes: 0 success, 1 domain error or failed check, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import supernat as sn
from .corel import enumerate_relations, relation_to_json
from .dot import diagram_to_dot
from .duality import algebra_of, dual_arrow
from .errors import DomainError
from .mscat import (
    canonical_arrow_to_family,
    cokernel_pair,
    coequalizer,
    coproduct,
    equalizer,
    extend_along_regular_mono,
    kernel_pair,
    product,
    pullback,
    pushout,
)
from .multiset import (
    arrow_from_json,
    arrow_to_json,
    classify,
    enumerate_homs,
    resolve_object,
    to_json as ms_to_json,
)
from .mv import hom_to_json
from .verify import CATALOG, run_check


class _Reader:
    def __init__(self, inline: bool):
        self.inline = inline

    def load(self, arg: str):
        if self.inline or arg.lstrip()[:1] in "{[":
            return json.loads(arg)
        if arg in ("two", "point", "empty") or (arg[:1] == "D" and arg[1:].isdigit()):
            return arg
        return json.loads(Path(arg).read_text())

    def resolve(self, ref):
        if isinstance(ref, str) and ref not in ("two", "point", "empty") and not (
                ref[:1] == "D" and ref[1:].isdigit()):
            ref = self.load(ref)
        return resolve_object(ref)

    def obj(self, arg: str):
        return self.resolve(self.load(arg))

    def arrow(self, arg: str):
        return arrow_from_json(self.load(arg), self.resolve)


def _supernatural(arg: str) -> sn.Supernatural:
    value = json.loads(arg)
    return sn.from_json(value)


def _construction_json(con) -> dict:
    out = con.out if isinstance(con.out, tuple) else (con.out,)
    return {"object": ms_to_json(con.apex), "arrows": [arrow_to_json(a) for a in out]}


def _cmd_sn(args, rd):
    vals = [_supernatural(a) for a in args.values]
    if args.op == "join":
        return sn.to_json(sn.join(vals))
    if args.op == "meet":
        return sn.to_json(sn.meet(vals))
    if args.op == "leq":
        if len(vals) != 2:
            raise DomainError("leq takes two values")
        return sn.leq(*vals)
    if args.op == "decompose":
        if len(vals) != 1:
            raise DomainError("decompose takes one value")
        return [[p, "inf" if e == sn.INF else e] for p, e in sn.irreducible_decomposition(vals[0])]
    if len(vals) != 1:
        raise DomainError("topology-member takes one value")
    fam = sn.TopologyFamily(args.family, p=args.p, k=args.k, n=args.n)
    return sn.topology_member(fam, vals[0])


def _cmd_check(args, rd):
    bounds = {}
    for item in args.bounds or []:
        key, _, value = item.partition("=")
        if not _:
            raise DomainError(f"bound {item!r} is not key=value")
        bounds[key] = json.loads(value)
    ids = list(CATALOG) if args.all else [args.check_id]
    if not args.all and args.check_id is None:
        raise DomainError("give a check id or --all")
    results = [run_check(i, bounds if not args.all else None) for i in ids]
    return results


def _diagram(obj, rd):
    if not isinstance(obj, dict) or "objects" not in obj:
        raise DomainError("a diagram is an object with 'objects' and 'arrows'")
    objects = {name: rd.resolve(ref) for name, ref in obj["objects"].items()}
    arrows = []
    for entry in obj.get("arrows", []):
        src, dst = entry["dom"], entry["cod"]
        if src not in objects or dst not in objects:
            raise DomainError(f"arrow {entry.get('name')!r} refers to an unknown object")
        f = arrow_from_json({"dom": objects[src], "cod": objects[dst], "map": entry["map"]},
                            resolve=lambda X: X)
        arrows.append((entry.get("name", f"{src}->{dst}"), src, dst, f))
    return objects, arrows


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mvdual", description=__doc__.splitlines()[0])
    p.add_argument("--inline", action="store_true", help="read every object/arrow argument as a JSON literal")
    sub = p.add_subparsers(dest="cmd", required=True)

    s = sub.add_parser("sn", help="supernatural number operations")
    s.add_argument("op", choices=["join", "meet", "leq", "decompose", "topology-member"])
    s.add_argument("values", nargs="*", help="positive integers or supernatural JSON")
    s.add_argument("--family", choices=sn.FAMILIES)
    s.add_argument("--p", type=int)
    s.add_argument("--k", type=int)
    s.add_argument("--n", type=int)

    s = sub.add_parser("homs", help="list every arrow X -> Y")
    s.add_argument("X")
    s.add_argument("Y")
    s = sub.add_parser("classify", help="monic/epic/regular/iso flags of an arrow")
    s.add_argument("f")
    for name in ("product", "coproduct"):
        s = sub.add_parser(name)
        s.add_argument("objects", nargs="*")
    for name in ("equalizer", "coequalizer", "pullback", "pushout"):
        s = sub.add_parser(name)
        s.add_argument("f")
        s.add_argument("g")
    for name in ("kernel-pair", "cokernel-pair"):
        s = sub.add_parser(name)
        s.add_argument("f")
    s = sub.add_parser("extend", help="extend f along the regular mono g")
    s.add_argument("g")
    s.add_argument("f")
    s = sub.add_parser("canonical", help="canonical arrow of X into the product over a family")
    s.add_argument("X")
    s.add_argument("--family", nargs="+", required=True)
    s.add_argument("--budget", type=int, default=10**4)
    s = sub.add_parser("dual", help="MV-algebra of an object, or homomorphism of an arrow")
    s.add_argument("item")
    s = sub.add_parser("quotients", help="every multiset relation on X")
    s.add_argument("X")
    s = sub.add_parser("check", help="run a named check")
    s.add_argument("check_id", nargs="?", choices=sorted(CATALOG))
    s.add_argument("--all", action="store_true")
    s.add_argument("--bounds", nargs="*", metavar="KEY=VALUE")
    s = sub.add_parser("export-dot", help="Graphviz DOT of a diagram or construction")
    s.add_argument("diagram")
    s.add_argument("--raw", action="store_true", help="print bare DOT instead of JSON")
    s.add_argument("--point-edges", action="store_true")
    return p


def run(args) -> tuple[object, int]:
    rd = _Reader(args.inline)
    cmd = args.cmd
    if cmd == "sn":
        return _cmd_sn(args, rd), 0
    if cmd == "homs":
        return [arrow_to_json(f) for f in enumerate_homs(rd.obj(args.X), rd.obj(args.Y))], 0
    if cmd == "classify":
        return classify(rd.arrow(args.f)).as_dict(), 0
    if cmd == "product":
        return _construction_json(product([rd.obj(a) for a in args.objects])), 0
    if cmd == "coproduct":
        return _construction_json(coproduct([rd.obj(a) for a in args.objects])), 0
    binary = {"equalizer": equalizer, "coequalizer": coequalizer, "pullback": pullback, "pushout": pushout}
    if cmd in binary:
        return _construction_json(binary[cmd](rd.arrow(args.f), rd.arrow(args.g))), 0
    if cmd == "kernel-pair":
        return _construction_json(kernel_pair(rd.arrow(args.f))), 0
    if cmd == "cokernel-pair":
        return _construction_json(cokernel_pair(rd.arrow(args.f))), 0
    if cmd == "extend":
        return arrow_to_json(extend_along_regular_mono(rd.arrow(args.g), rd.arrow(args.f))), 0
    if cmd == "canonical":
        res = canonical_arrow_to_family(rd.obj(args.X), [rd.obj(a) for a in args.family], args.budget)
        return {"arrow": arrow_to_json(res.arrow), "flags": res.flags.as_dict(),
                "index": [[k, t.mapping] for k, t in res.index]}, 0
    if cmd == "dual":
        item = rd.load(args.item)
        if isinstance(item, dict) and "map" in item:
            return hom_to_json(dual_arrow(arrow_from_json(item, rd.resolve))), 0
        A = algebra_of(rd.resolve(item))
        return {"algebra": str(A), "factors": list(A.moduli), "size": A.size}, 0
    if cmd == "quotients":
        return [relation_to_json(r) for r in enumerate_relations(rd.obj(args.X))], 0
    if cmd == "check":
        results = _cmd_check(args, rd)
        return results, 0 if all(r.passed for r in results) else 1
    if cmd == "export-dot":
        objects, arrows = _diagram(rd.load(args.diagram), rd)
        dot = diagram_to_dot(objects, arrows, args.point_edges)
        return (dot if args.raw else {"dot": dot}), 0
    raise AssertionError(cmd)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args, extra = parser.parse_known_args(argv)
        # values given after options, e.g. `sn topology-member --family T5 --n 2 3`
        if extra and args.cmd == "sn" and not any(e.startswith("--") for e in extra):
            args.values += extra
        elif extra:
            parser.error(f"unrecognized arguments: {' '.join(extra)}")
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        out, code = run(args)
    except (DomainError, json.JSONDecodeError, OSError, KeyError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if isinstance(out, str):
        sys.stdout.write(out)
    elif isinstance(out, list) and out and hasattr(out[0], "to_json"):
        for r in out:
            print(r.to_json())
    else:
        print(json.dumps(out, sort_keys=True, ensure_ascii=False))
    return code

