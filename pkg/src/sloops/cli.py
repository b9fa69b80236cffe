"""Command line interface.

Exit codes: 0 for pass/universal verdicts, 1 for counterexample verdicts,
2 for usage and validation errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .catalog import (SearchBoundExceeded, SearchSpec, gen_chein, gen_cyclic,
                      gen_dihedral, gen_klein, gen_quaternion, gen_sym3,
                      search_loops)
from .core import LoopError, format_table, read_table, write_table
from .identities import PropertyId, check_identity
from .isotopy import principal_isotope
from .subalgebra import NonTrivialityPolicy, SmarandacheClass, classify
from .universality import (SCHEMA_VERSION, NotInClass, is_smarandache_universal,
                           is_universal, verify_theorem)

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _dump(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=False)


def _props(text: str) -> list[PropertyId]:
    return [PropertyId.parse(tok) for tok in text.split(",") if tok.strip()]


def _cex_line(cex) -> str:
    parts = [f"x={cex.x}", f"y={cex.y}"]
    if cex.z is not None:
        parts.append(f"z={cex.z}")
    return f"{' '.join(parts)} lhs={cex.lhs} rhs={cex.rhs} ({cex.form})"


def cmd_validate(args) -> int:
    T = read_table(args.file)
    holding = [p.value for p in PropertyId
               if (T.is_loop or p not in _LOOP_ONLY) and check_identity(T, p) is None]
    doc = {"schema_version": SCHEMA_VERSION, "command": "validate", "valid": True,
           "order": T.order, "kind": "loop" if T.is_loop else "quasigroup",
           "identity": T.identity, "properties": holding}
    if args.json:
        print(_dump(doc))
    else:
        ident = "none" if T.identity is None else T.identity
        print(f"valid {doc['kind']} of order {T.order}, identity {ident}")
        print("properties: " + (", ".join(holding) or "none"))
    return EXIT_OK


_LOOP_ONLY = {PropertyId.LIP, PropertyId.RIP, PropertyId.IP, PropertyId.ALOOP}


def cmd_classify(args) -> int:
    T = read_table(args.file)
    rep = classify(T, NonTrivialityPolicy.parse(args.policy))
    doc = {"schema_version": SCHEMA_VERSION, "command": "classify", **rep.to_dict()}
    if args.json:
        print(_dump(doc))
    else:
        for c, v in rep.verdicts.items():
            w = "" if v.witness is None else f" witness {v.witness.elements()}"
            print(f"{c.value}: {'yes' if v.member else 'no'}{w}")
    return EXIT_OK


def cmd_check(args) -> int:
    T = read_table(args.file)
    p = PropertyId.parse(args.property)
    cex = check_identity(T, p)
    doc = {"schema_version": SCHEMA_VERSION, "command": "check", "property": p.value,
           "result": "pass" if cex is None else "counterexample",
           "counterexample": None if cex is None else cex.to_dict()}
    if args.json:
        print(_dump(doc))
    elif cex is None:
        print("pass")
    else:
        print("counterexample: " + _cex_line(cex))
    return EXIT_OK if cex is None else EXIT_COUNTEREXAMPLE


def cmd_isotope(args) -> int:
    T = read_table(args.file)
    n = T.order
    if not (0 <= args.f < n and 0 <= args.g < n):
        raise UsageError(f"f and g must lie in [0, {n})")
    H = principal_isotope(T, args.f, args.g)
    if args.output:
        write_table(H, args.output)
    else:
        sys.stdout.write(format_table(H))
    return EXIT_OK


def cmd_universal(args) -> int:
    T = read_table(args.file)
    if (args.property is None) == (args.cls is None):
        raise UsageError("give exactly one of --property or --class")
    if args.property is not None:
        rep = is_universal(T, PropertyId.parse(args.property))
    else:
        rep = is_smarandache_universal(T, SmarandacheClass.parse(args.cls), args.quantifier,
                                       NonTrivialityPolicy.parse(args.policy))
    if args.json:
        print(_dump({"command": "universal", **rep.to_dict()}))
    elif rep.universal:
        print(f"universal ({rep.isotopes_checked} isotopes)")
    else:
        f, g, cex = rep.counterexample
        tail = "" if cex is None else ": " + _cex_line(cex)
        print(f"not universal: isotope f={f} g={g}{tail}")
    return EXIT_OK if rep.universal else EXIT_COUNTEREXAMPLE


def cmd_verify(args) -> int:
    T = read_table(args.file)
    rep = verify_theorem(T, args.theorem, NonTrivialityPolicy.parse(args.policy),
                         args.quantifier)
    if args.json:
        print(_dump({"command": "verify", **rep.to_dict()}))
    else:
        print(f"theorem {rep.theorem}: hypothesis {rep.hypothesis_status}, "
              f"conclusion {rep.conclusion_status}")
        for part in rep.parts:
            print(f"  {part['part']}: hypothesis {part['hypothesis']}, "
                  f"conclusion {part['conclusion']}")
            tally: dict[str, list[int]] = {}
            for w in part["witnesses"]:
                for key in ("triples", "variants"):
                    for tid, res in w.get(key, {}).items():
                        label = tid if key == "triples" else tid + " (variant)"
                        ok = not res["failures"] and not res.get("oracle_misses")
                        t = tally.setdefault(label, [0, 0])
                        t[0 if ok else 1] += 1
            for label, (good, bad) in tally.items():
                verdict = "all pass" if not bad else f"{bad} failing"
                print(f"    {label}: {good + bad} witnesses, {verdict}")
    return EXIT_COUNTEREXAMPLE if rep.conclusion_status == "fails" else EXIT_OK


def cmd_search(args) -> int:
    spec = SearchSpec(args.order, _props(args.require), _props(args.forbid),
                      args.limit, args.seed)
    tables = search_loops(spec)
    if args.json:
        print(_dump({"schema_version": SCHEMA_VERSION, "command": "search",
                     "order": args.order, "tables": [T.rows() for T in tables]}))
    else:
        sys.stdout.write("\n".join(format_table(T) for T in tables))
    return EXIT_OK


def _named_group(name: str):
    if ":" in name:
        kind, arg = name.split(":", 1)
        return {"cyclic": gen_cyclic, "dihedral": gen_dihedral}[kind](int(arg))
    simple = {"klein": gen_klein, "sym3": gen_sym3, "quaternion": gen_quaternion}
    if name in simple:
        return simple[name]()
    return read_table(name)


def cmd_gen(args) -> int:
    kind = args.kind
    if kind in ("cyclic", "dihedral"):
        if args.arg is None:
            raise UsageError(f"gen {kind} needs an integer argument")
        T = (gen_cyclic if kind == "cyclic" else gen_dihedral)(int(args.arg))
    elif kind == "chein":
        if args.arg is None:
            raise UsageError("gen chein needs a base group (name or table file)")
        T = gen_chein(_named_group(args.arg))
    else:
        T = _named_group(kind)
    sys.stdout.write(format_table(T))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="sloops", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, file=True):
        p = sub.add_parser(name)
        if file:
            p.add_argument("file")
        p.add_argument("--json", action="store_true", help="emit the structured report")
        p.set_defaults(fn=fn)
        return p

    add("validate", cmd_validate)
    p = add("classify", cmd_classify)
    p.add_argument("--policy", choices=["strict", "loose"], default="strict")
    p = add("check", cmd_check)
    p.add_argument("--property", required=True)
    p = add("isotope", cmd_isotope)
    p.add_argument("--f", type=int, required=True)
    p.add_argument("--g", type=int, required=True)
    p.add_argument("-o", "--output")
    p = add("universal", cmd_universal)
    p.add_argument("--property")
    p.add_argument("--class", dest="cls")
    p.add_argument("--quantifier", choices=["s", "g"], default="s")
    p.add_argument("--policy", choices=["strict", "loose"], default="strict")
    p = add("verify", cmd_verify)
    p.add_argument("--theorem", required=True)
    p.add_argument("--quantifier", choices=["s", "g"], default="s")
    p.add_argument("--policy", choices=["strict", "loose"], default="strict")
    p = add("search", cmd_search, file=False)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--require", default="")
    p.add_argument("--forbid", default="")
    p.add_argument("--limit", type=int, default=1)
    p.add_argument("--seed", type=int)
    p = add("gen", cmd_gen, file=False)
    p.add_argument("kind", choices=["cyclic", "klein", "sym3", "dihedral", "quaternion", "chein"])
    p.add_argument("arg", nargs="?")
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.fn(args)
    except (UsageError, LoopError, NotInClass, SearchBoundExceeded, ValueError,
            OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
