"""Command-line front end.

Exit codes: 0 on success, 1 when a domain-level answer is negative or a
file fails validation, 2 on I/O or parse errors. That way scripts can
tell "computed false" apart from "could not compute".
"""

import argparse
import json
import sys

from symtorus import classify4d, monodromy, serialize
from symtorus.errors import (
    OrbitSizeExceeded,
    ParseError,
    SymtorusError,
    ValidationError,
)
from symtorus.orbisurface import first_orbifold_homology, normalize_signature

CASE_LABELS = {
    1: "delzant",
    2: "product_t2s2",
    3: "lagrangian_free",
    4: "symplectic_orbits",
}


def _read(path):
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise ParseError("cannot read %s: %s" % (path, exc)) from None


def _emit(args, payload, text_lines):
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        for line in text_lines:
            print(line)


def _parse_signature_flag(raw):
    head, _, tail = raw.partition(":")
    try:
        genus = int(head)
        orders = [int(x) for x in tail.split(",") if x.strip() != ""]
        return normalize_signature(genus, orders)
    except ValueError as exc:
        raise ParseError(
            "signature flag must look like G:o1,o2 (e.g. 1:2 or 0:10,15): %s"
            % exc
        ) from None


def cmd_validate(args):
    desc = serialize.parse_description(_read(args.paths[0]), args.paths[0])
    case = classify4d.classify(desc)
    _emit(args, {"valid": True, "case": CASE_LABELS[case]},
          ["valid: true", "case: %s" % CASE_LABELS[case]])
    return 0


def cmd_classify(args):
    desc = serialize.parse_description(_read(args.paths[0]), args.paths[0])
    case = classify4d.classify(desc)
    _emit(args, {"case": case, "label": CASE_LABELS[case]},
          ["case %d (%s)" % (case, CASE_LABELS[case])])
    return 0


def cmd_compare(args):
    d1 = serialize.parse_description(_read(args.paths[0]), args.paths[0])
    d2 = serialize.parse_description(_read(args.paths[1]), args.paths[1])
    c1, c2 = classify4d.classify(d1), classify4d.classify(d2)
    breakdown = {"case": [CASE_LABELS[c1], CASE_LABELS[c2]],
                 "case_match": c1 == c2}
    lines = ["case: %s vs %s" % (CASE_LABELS[c1], CASE_LABELS[c2])]

    def note(key, value):
        breakdown[key] = value
        lines.append("%s: %s" % (key.replace("_", " "), value))

    if c1 == c2 == 2:
        note("torus_area_match", d1.torus_area == d2.torus_area)
        note("sphere_area_match", d1.sphere_area == d2.sphere_area)
    elif c1 == c2 == 3:
        from symtorus.lagrangian import same_lattice

        note("lattice_match", same_lattice(d1, d2))
        note("cocycle_match", d1.c_value == d2.c_value)
    elif c1 == c2 == 4:
        note("signature_match", d1.signature == d2.signature)
        note("area_match", d1.area == d2.area)
        note("vertical_form_match", d1.sigma_t == d2.sigma_t)
    verdict = classify4d.equivalent(d1, d2, max_states=args.max_states)
    breakdown["equivalent"] = verdict
    lines.append("equivalent: %s" % str(verdict).lower())
    _emit(args, breakdown, lines)
    return 0 if verdict else 1


def cmd_canonical(args):
    datum = serialize.parse_datum_document(_read(args.paths[0]), args.paths[0])
    form = monodromy.canonical_form(datum, max_states=args.max_states)
    coords = [[serialize.format_rational(q) for q in t.coords] for t in form]
    _emit(args, {"canonical": coords},
          ["canonical form:"] + ["  %s" % row for row in coords])
    return 0


def cmd_orbit_size(args):
    datum = serialize.parse_datum_document(_read(args.paths[0]), args.paths[0])
    size = monodromy.orbit_size(datum, max_states=args.max_states)
    _emit(args, {"orbit_size": size}, ["orbit size: %d" % size])
    return 0


def cmd_homology(args):
    if args.signature is None:
        raise ParseError("homology needs --signature G:o1,o2,...")
    sig = _parse_signature_flag(args.signature)
    group = first_orbifold_homology(sig)
    factors = list(group.factors)
    _emit(args, {"rank": group.free_rank, "torsion": factors},
          ["rank %d, torsion %s" % (group.free_rank, factors)])
    return 0


def cmd_model(args):
    desc = serialize.parse_description(_read(args.paths[0]), args.paths[0])
    report = classify4d.construct_model_report(desc)
    _emit(args, report, report["lines"])
    return 0


def cmd_splits(args):
    desc = serialize.parse_description(_read(args.paths[0]), args.paths[0])
    verdict = classify4d.splits_as_product(desc)
    if verdict is None:
        case = CASE_LABELS[classify4d.classify(desc)]
        _emit(args, {"splits": None},
              ["not applicable: case %s has no splitting criterion" % case])
        return 1
    _emit(args, {"splits": verdict}, ["splits as product: %s"
                                      % str(verdict).lower()])
    return 0 if verdict else 1


COMMANDS = {
    "validate": (cmd_validate, 1),
    "classify": (cmd_classify, 1),
    "compare": (cmd_compare, 2),
    "canonical": (cmd_canonical, 1),
    "orbit-size": (cmd_orbit_size, 1),
    "homology": (cmd_homology, 0),
    "model": (cmd_model, 1),
    "splits": (cmd_splits, 1),
}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="symtorus",
        description="Exact invariants of symplectic 2-torus actions on "
                    "compact 4-manifolds",
    )
    parser.add_argument("verb", choices=sorted(COMMANDS))
    parser.add_argument("paths", nargs="*", help="input JSON files")
    parser.add_argument("--signature", help="inline signature G:o1,o2,...")
    parser.add_argument("--max-states", type=int,
                        default=monodromy.DEFAULT_MAX_STATES,
                        help="orbit enumeration cap (default %(default)s)")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    handler, npaths = COMMANDS[args.verb]
    try:
        if len(args.paths) != npaths:
            raise ParseError("%s takes exactly %d file argument(s)"
                             % (args.verb, npaths))
        return handler(args)
    except ParseError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except OrbitSizeExceeded as exc:
        print("resource limit: %s (raise --max-states)" % exc, file=sys.stderr)
        return 2
    except ValidationError as exc:
        print("invalid: %s" % exc, file=sys.stderr)
        return 1
    except SymtorusError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
