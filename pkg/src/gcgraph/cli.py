"""Command-line front end.

Exit codes: 0 success, 1 domain error (inadmissible subset, alpha of order > 2,
failed claim), 2 usage error (malformed group/alpha/subset spec).
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Sequence

from . import export
from .aut import automorphisms, is_involutory, parse_alpha
from .classify import (
    PreconditionError,
    not_gci_via_matching,
    render_reports,
    reports_to_json,
    restricted_gci_decide,
    verify_group,
)
from .gencayley import GenCayleyPair, NotInvolutory, build_graph, enumerate_subsets, partition, validate_subset
from .group import (
    GroupOrderCapExceeded,
    is_complete_group,
    named_group,
    parse_group_spec,
    split_elements,
)
from .iso import gci_isomorphic, graph_isomorphic
from .perm import CycleSyntaxError

COMMANDS = ["partition", "validate", "build", "enumerate", "gci-test", "aut", "classify", "verify-paper"]


class UsageError(Exception):
    pass


class DomainError(Exception):
    pass


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gcgraph", description="Generalized Cayley graphs of finite groups.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, alpha=True, subset=False):
        sp.add_argument("--group", required=True, help="S4, name:S4 or 'gens: (12),(123) degree:4'")
        if alpha:
            sp.add_argument("--alpha", default="id", help="id, inner:(12) or s6-delta:(g)")
        if subset:
            sp.add_argument("--subset", default="", help="comma-separated cycle strings")
        sp.add_argument("--format", choices=["text", "json", "dot", "edges"], default="text")
        sp.add_argument("--out", help="write output here instead of stdout")

    common(sub.add_parser("partition", help="omega / big_omega / mho partition"))
    common(sub.add_parser("validate", help="check a generalized Cayley subset"), subset=True)
    common(sub.add_parser("build", help="build GC(G, S, alpha)"), subset=True)
    sp = sub.add_parser("enumerate", help="list admissible subsets up to a size")
    common(sp)
    sp.add_argument("--max-size", type=int, default=2)
    sp = sub.add_parser("gci-test", help="GCI isomorphism between two pairs")
    common(sp, subset=True)
    sp.add_argument("--alpha2", required=True)
    sp.add_argument("--subset2", default="")
    common(sub.add_parser("aut", help="summary of Aut(G)"))
    sp = sub.add_parser("classify", help="GCI and restricted GCI status")
    common(sp, alpha=False)
    sp.add_argument("--max-size", type=int, default=None, help="m; default |G| up to order 24, else 4")
    sp = sub.add_parser("verify-paper", help="replay every claim on the target groups")
    sp.add_argument("--targets", default="S3,S4,S5,S6")
    sp.add_argument("--format", choices=["text", "json"], default="text")
    sp.add_argument("--out")
    sp.add_argument("--parallel", action="store_true", help="one worker per target; output order unchanged")
    return p


def _group(args):
    try:
        return parse_group_spec(args.group)
    except GroupOrderCapExceeded:
        raise
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _alpha(G, text):
    try:
        a = parse_alpha(G, text)
    except ValueError as exc:
        raise UsageError(f"bad --alpha {text!r}: {exc}") from None
    return a


def _subset(G, text):
    try:
        return G.elements_from(split_elements(text)) if text.strip() else frozenset()
    except ValueError as exc:
        raise UsageError(f"bad subset {text!r}: {exc}") from None


def _emit(args, text: str) -> None:
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def cmd_partition(args) -> int:
    G = _group(args)
    a = _alpha(G, args.alpha)
    part = partition(G, a)
    data = {"group": G.label, "alpha": a.describe(G), **part.to_json(G)}
    if args.format == "json":
        _emit(args, _dump(data))
    else:
        _emit(args, "".join(f"{k}: {', '.join(data[k])}\n" for k in ("omega", "big_omega", "mho")))
    return 0


def cmd_validate(args) -> int:
    G = _group(args)
    a = _alpha(G, args.alpha)
    S = _subset(G, args.subset)
    v = validate_subset(G, a, S)
    data = {
        "valid": v.valid,
        "condition": v.condition,
        "witness": G.label_of(v.witness) if v.witness is not None else None,
        "message": v.message,
    }
    _emit(args, _dump(data) if args.format == "json" else ("valid\n" if v else f"invalid: {v.message}\n"))
    if not v:
        print(v.message, file=sys.stderr)
        return 1
    return 0


def cmd_build(args) -> int:
    G = _group(args)
    a = _alpha(G, args.alpha)
    S = _subset(G, args.subset)
    v = validate_subset(G, a, S)
    if not v:
        raise DomainError(v.message)
    graph = build_graph(G, GenCayleyPair(a, S))
    if args.format == "dot":
        out = export.to_dot(G, graph, S, a)
    elif args.format == "edges":
        out = export.to_edge_list(graph)
    elif args.format == "json":
        out = export.to_json(G, graph, S, a) + "\n"
    else:
        comps = graph.components()
        out = (
            f"{export.graph_name(G, S, a)}\n"
            f"vertices: {graph.n}\nedges: {graph.edge_count}\n"
            f"regular degree: {graph.regular_degree()}\ncomponents: {len(comps)}\n"
        )
    _emit(args, out)
    return 0


def cmd_enumerate(args) -> int:
    G = _group(args)
    a = _alpha(G, args.alpha)
    if args.max_size < 0:
        raise UsageError("--max-size must be non-negative")
    subsets = [G.labels(p.subset) for p in enumerate_subsets(G, a, args.max_size)]
    if args.format == "json":
        _emit(args, _dump({"group": G.label, "alpha": a.describe(G), "max_size": args.max_size, "subsets": subsets}))
    else:
        _emit(args, "".join("{" + ",".join(s) + "}\n" for s in subsets))
    return 0


def cmd_gci_test(args) -> int:
    G = _group(args)
    p1 = GenCayleyPair(_alpha(G, args.alpha), _subset(G, args.subset))
    p2 = GenCayleyPair(_alpha(G, args.alpha2), _subset(G, args.subset2))
    for p in (p1, p2):
        v = validate_subset(G, p.alpha, p.subset)
        if not v:
            raise DomainError(v.message)
    cert = gci_isomorphic(G, p1, p2, automorphisms(G))
    g1, g2 = build_graph(G, p1), build_graph(G, p2)
    try:
        iso = graph_isomorphic(g1, g2) is not None
    except RuntimeError:
        iso = None
    data = {
        "graph_isomorphic": iso,
        "gci": cert.to_json(G) if cert else {"kind": "none"},
    }
    if args.format == "json":
        _emit(args, _dump(data))
    else:
        _emit(args, f"graph isomorphic: {iso}\ngci: {'yes' if cert else 'no'}\n")
    return 0


def cmd_aut(args) -> int:
    G = _group(args)
    auts = automorphisms(G)
    comp = is_complete_group(G)
    data = {
        "group": G.label,
        "order": len(G),
        "aut_order": len(auts),
        "inner": sum(a.kind in ("inner", "identity") for a in auts),
        "involutory": sum(is_involutory(a) for a in auts),
        "complete": comp.complete,
        "reason": comp.reason,
    }
    if args.alpha != "id":
        a = _alpha(G, args.alpha)
        data["alpha"] = {**a.to_json(G), "involutory": is_involutory(a), "order": a.order()}
    if args.format == "json":
        _emit(args, _dump(data))
    else:
        _emit(args, "".join(f"{k}: {v}\n" for k, v in data.items()))
    return 0


def cmd_classify(args) -> int:
    G = _group(args)
    comp = is_complete_group(G)
    try:
        gci = {"status": "no", "witness": not_gci_via_matching(G)} if comp.complete else {"status": "undecided"}
        status, details = restricted_gci_decide(G, args.max_size, complete=comp.complete)
    except PreconditionError as exc:
        raise DomainError(str(exc)) from None
    data = {"group": G.label, "gci": gci, "restricted_gci": status.to_json(), "details": details}
    if args.format == "json":
        _emit(args, _dump(data))
    else:
        _emit(args, f"{G.label}: gci={gci['status']} restricted_gci={status.value}\n")
    return 0


def _verify_one(name: str):
    return verify_group(named_group(name))


def cmd_verify_paper(args) -> int:
    targets = [t.strip() for t in args.targets.split(",") if t.strip()]
    for t in targets:
        try:
            named_group(t)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    if args.parallel and len(targets) > 1:
        with ProcessPoolExecutor() as pool:
            reports = list(pool.map(_verify_one, targets))
    else:
        reports = [_verify_one(t) for t in targets]
    out = reports_to_json(reports) + "\n" if args.format == "json" else render_reports(reports) + "\n"
    _emit(args, out)
    return 0 if all(r.passed for r in reports) else 1


HANDLERS = {
    "partition": cmd_partition,
    "validate": cmd_validate,
    "build": cmd_build,
    "enumerate": cmd_enumerate,
    "gci-test": cmd_gci_test,
    "aut": cmd_aut,
    "classify": cmd_classify,
    "verify-paper": cmd_verify_paper,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return HANDLERS[args.command](args)
    except (UsageError, CycleSyntaxError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except GroupOrderCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (DomainError, NotInvolutory) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
