"""
Command-line front end.

Verbs: verify, classify, catalog, extend, represent, coroots, window.
Exit codes: 0 affirmative verdict, 1 negative verdict, 2 input error.
All outputs are deterministic JSON (sorted keys) or DOT.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import axioms, catalog, coroots, extension, heapwindow
from .classify import classify as classify_poset
from .poset import ColoredPoset, PosetError
from .representation import build_operators, verify_relations, weight_of_split, splits

SCHEMA_VERSION = 1


class InputError(Exception):
    pass


def _load_json(path: str) -> dict:
    try:
        if path == "-":
            data = json.load(sys.stdin)
        else:
            with open(path) as fh:
                data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    if isinstance(data, dict) and data.get("version") != SCHEMA_VERSION:
        raise InputError(f"unsupported schema version {data.get('version')!r}")
    return data


def _load_poset(path: str) -> ColoredPoset:
    try:
        return ColoredPoset.from_json(_load_json(path))
    except (PosetError, KeyError, ValueError) as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(f"bad poset file {path}: {exc}") from exc


def _emit(data: dict) -> None:
    print(json.dumps(data, sort_keys=True, indent=2))


def _family_id(spec: str, n: Optional[int], j: Optional[int]) -> catalog.FamilyId:
    kinds = {
        "a-standard": "A_standard",
        "a-exterior": "A_exterior",
        "b": "B",
        "c": "C",
        "d-standard": "D_standard",
        "d-spin": "D_spin",
        "e6": "E6",
        "e7": "E7",
    }
    if spec not in kinds:
        raise InputError(f"unknown family {spec!r}; choose from {sorted(kinds)}")
    kind = kinds[spec]
    if kind == "E6":
        return catalog.FamilyId("E6", 6)
    if kind == "E7":
        return catalog.FamilyId("E7", 7)
    if n is None:
        raise InputError("--n is required for this family")
    if kind == "A_exterior":
        if j is None:
            raise InputError("--j is required for a-exterior")
        return catalog.FamilyId(kind, n, j)
    return catalog.FamilyId(kind, n)


def cmd_verify(args) -> int:
    p = _load_poset(args.file)
    if args.property:
        reports = [axioms.check(p, name) for name in args.property]
    else:
        _, reports = axioms.is_minuscule(p)
    ok = all(r.holds for r in reports)
    _emit({
        "version": SCHEMA_VERSION,
        "holds": ok,
        "reports": [r.to_json() for r in reports],
    })
    return 0 if ok else 1


def cmd_classify(args) -> int:
    data = _load_json(args.file)
    if "boundary" in data:
        window = heapwindow.PeriodicWindow.from_json(data)
        reports = heapwindow.verify_window(window)
        _emit({
            "version": SCHEMA_VERSION,
            "classification": "infinite-out-of-scope",
            "window_reports": [r.to_json() for r in reports],
        })
        return 1
    p = ColoredPoset.from_json(data)
    result = classify_poset(p)
    _emit(result.to_json())
    return 0 if result.minuscule else 1


def cmd_catalog(args) -> int:
    if args.index:
        try:
            letter, n, j = args.index.split(",")
            p = catalog.indexed(letter.strip().upper(), int(n), int(j))
        except (ValueError, catalog.NotAMinusculeWeight) as exc:
            raise InputError(str(exc)) from exc
    else:
        fam = _family_id(args.family, args.n, args.j)
        p = catalog.build(fam)
    if args.dot:
        print(p.to_dot(), end="")
    else:
        _emit(p.to_json())
    return 0


def cmd_extend(args) -> int:
    try:
        i, j, k = (int(v) for v in args.shape.split(","))
        seed = catalog.top_tree_Y(i, j, k)
    except (ValueError, catalog.BadParameters) as exc:
        raise InputError(str(exc)) from exc
    outcome = extension.run_extension(seed)
    data = outcome.to_json()
    data["version"] = SCHEMA_VERSION
    data["poset"] = outcome.poset.to_json()
    if not args.trace:
        del data["stages"]
    _emit(data)
    return 0 if outcome.verdict == "minuscule" else 1


def cmd_represent(args) -> int:
    p = _load_poset(args.file)
    out: dict = {"version": SCHEMA_VERSION, "splits": len(splits(p))}
    code = 0
    if args.relations:
        report = verify_relations(p, full_sweep=args.full_sweep)
        out["relations"] = report.to_json()
        code = 0 if report.all_pass else 1
    if args.weights:
        basis, _ = build_operators(p)
        out["weights"] = [
            {
                "ideal": sorted(s.ideal),
                "weight": {str(c): v for c, v in weight_of_split(p, s).items()},
            }
            for s in basis
        ]
    if args.matrices:
        basis, ops = build_operators(p)
        out["operators"] = {
            str(a): {
                "raising": x.to_coordinate_json(),
                "lowering": y.to_coordinate_json(),
                "diagonal": h.to_coordinate_json(),
            }
            for a, (x, y, h) in ops.items()
        }
    _emit(out)
    return code


def cmd_coroots(args) -> int:
    try:
        diagram = catalog.diagram_of_type(args.type.upper(), args.n)
    except catalog.BadParameters as exc:
        raise InputError(str(exc)) from exc
    try:
        system = coroots.CorootSystem(diagram)
    except coroots.NotFiniteType as exc:
        raise InputError(str(exc)) from exc
    out: dict = {
        "version": SCHEMA_VERSION,
        "type": f"{args.type.upper()}{args.n}",
        "positive_coroots": [list(b) for b in system.positive_coroots()],
        "highest": list(system.highest_coroot()),
    }
    code = 0
    if args.j is not None:
        filt = system.filter_at(args.j)
        out["filter"] = [list(b) for b in filt]
        if args.psi:
            p = _load_poset(args.psi)
            try:
                real = coroots.psi(p)
            except (coroots.NotMinusculeInput, coroots.NotFiniteType) as exc:
                raise InputError(str(exc)) from exc
            out["psi"] = {
                "j": real.j,
                "assignment": {
                    str(x): {"coroot": list(b), "color": str(p.color(x))}
                    for x, b in sorted(real.assignment.items())
                },
                "colors_in_order": [
                    str(real.coloring_of(b)) for b in coroots.coroot_filter(p.diagram, real.j)
                ],
            }
        else:
            # filter colored through the indexed poset when one exists
            try:
                p = catalog.indexed(args.type.upper(), args.n, args.j)
                real = coroots.psi(p)
                out["colors_in_order"] = [
                    str(real.coloring_of(b)) for b in real.coroot_ids
                ]
            except catalog.NotAMinusculeWeight:
                code = 1
    if args.dot and args.j is not None:
        p = catalog.indexed(args.type.upper(), args.n, args.j)
        real = coroots.psi(p)
        print(real.coroot_poset.to_dot(), end="")
        return code
    _emit(out)
    return code


def cmd_window(args) -> int:
    if args.chain:
        try:
            n, p = (int(v) for v in args.chain.split(","))
            window = heapwindow.cyclic_chain_window(n, p)
        except (ValueError, catalog.BadParameters) as exc:
            raise InputError(str(exc)) from exc
    else:
        if not args.file:
            raise InputError("window needs --chain n,p or a file")
        window = heapwindow.PeriodicWindow.from_json(_load_json(args.file))
    reports = heapwindow.verify_window(window)
    ok = all(r.holds for r in reports)
    _emit({
        "version": SCHEMA_VERSION,
        "holds": ok,
        "boundary": sorted(window.boundary),
        "reports": [r.to_json() for r in reports],
    })
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="minuscule",
        description="Exact-arithmetic toolkit for colored d-complete and minuscule posets",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    v = sub.add_parser("verify", help="check coloring axioms on a poset file")
    v.add_argument("file")
    v.add_argument("--property", action="append", help="check one property (repeatable)")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("classify", help="name the family of every component")
    c.add_argument("file")
    c.set_defaults(func=cmd_classify)

    g = sub.add_parser("catalog", help="emit a catalog poset")
    g.add_argument("--family", help="a-standard|a-exterior|b|c|d-standard|d-spin|e6|e7")
    g.add_argument("--n", type=int)
    g.add_argument("--j", type=int)
    g.add_argument("--index", help="minuscule weight index as letter,n,j")
    g.add_argument("--json", action="store_true", help="emit JSON (the default)")
    g.add_argument("--dot", action="store_true")
    g.set_defaults(func=cmd_catalog)

    e = sub.add_parser("extend", help="run the downward extension from a Y seed")
    e.add_argument("--shape", required=True, help="i,j,k")
    e.add_argument("--trace", action="store_true")
    e.set_defaults(func=cmd_extend)

    r = sub.add_parser("represent", help="operators on the split basis")
    r.add_argument("file")
    r.add_argument("--relations", action="store_true")
    r.add_argument("--full-sweep", action="store_true")
    r.add_argument("--weights", action="store_true")
    r.add_argument("--matrices", action="store_true")
    r.set_defaults(func=cmd_represent)

    k = sub.add_parser("coroots", help="positive coroots and the psi realization")
    k.add_argument("--type", required=True)
    k.add_argument("--n", type=int, required=True)
    k.add_argument("--j", type=int)
    k.add_argument("--psi", help="poset file to realize")
    k.add_argument("--dot", action="store_true")
    k.set_defaults(func=cmd_coroots)

    w = sub.add_parser("window", help="interior checks on a periodic window")
    w.add_argument("file", nargs="?")
    w.add_argument("--chain", help="cyclic chain demonstrator as n,p")
    w.set_defaults(func=cmd_window)

    return parser


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (PosetError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
