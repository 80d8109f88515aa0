"""Command-line front end.

Every decision procedure is exposed as a subcommand with exact JSON
input and output; ``--format text`` renders a lossy human-readable
summary instead.  Validation failures exit with status 2 and a
structured diagnostic; an internal invariant breach exits with 3.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import serialize as ser
from .blocks import block_id, classify_type, level_zero_block, same_block
from .rootdata import gamma_group, j0_set
from .serialize import ParseError
from .spectral import chi, g_pi, is_isomorphic
from .torus import TorusPoint, orbit_match
from .weights import gcd_normal_form, normalize_deltas, realizations, weyl_translate

SCHEMAS = {
    "rational": 'exact string "p/q", lowest terms, q > 0, "/1" omitted',
    "type": 'Lie type string, e.g. "A2", "E8"',
    "class": '"0" or "w<i>" with i a minuscule node',
    "point": '["p/q", ...] nonzero rationals, length k-1',
    "affine_weight": '{"level": int, "fin": [int x rank], "delta": rational}',
    "toroidal_weight": '{"type", "k", "central": [int x k], '
                       '"fin": [int x rank], "deltas": [rational x k]}',
    "pi": '{"type", "k", "entries": [{"point", "weight": affine_weight}]}',
    "xi": '{"type", "k", "entries": [{"point", '
          '"value": {"level": int, "class"}}]}',
    "lattice": '{"dim": int, "basis": [[int x dim], ...]} (canonical HNF)',
    "block_id": '{"kind": "I", "xi"} or {"kind": "II", "pi", "coset": [int]}',
    "commands": {
        "gamma": "arg: type -> {invariant_factors, j0}",
        "j0": "arg: type -> {j0}",
        "realizations": "args: type level class -> {realizations: [[int]]}",
        "chi": "stdin: pi -> xi",
        "gpi": "stdin: pi -> {lattice, invariant_factors, index, "
               "generators_log}",
        "type": "stdin: xi -> {type, witness, diagnostics}",
        "iso": "stdin: {pi1, g1, pi2, g2} -> {isomorphic}",
        "link": "stdin: {pi1, g1, pi2, g2} -> {same_block}",
        "blockid": "stdin: {pi, g} -> block_id + diagnostics",
        "orbit": "stdin: {A: [{point, label}], B: [...]} -> {match}",
        "translate": "stdin: {weight, alpha: [int], i, m} -> weight",
        "normalize": "stdin: {weight, m} -> weight",
        "gcdform": "stdin: [int, ...] -> {m, normal}",
        "level0block": "stdin: xi (levels 0) -> xi",
        "schemas": "-> this document",
    },
}


def _read_doc(args):
    if args.input:
        with open(args.input, "r", encoding="utf-8") as f:
            text = f.read()
    else:
        text = sys.stdin.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"malformed JSON input: {e}") from None


def _cmd_gamma(args):
    t = ser.parse_type(args.type)
    return {"invariant_factors": list(gamma_group(t)),
            "j0": sorted(j0_set(t))}


def _cmd_j0(args):
    return {"j0": sorted(j0_set(ser.parse_type(args.type)))}


def _cmd_realizations(args):
    t = ser.parse_type(args.type)
    cls = ser.parse_class(t, args.cls)
    try:
        reals = realizations(t, args.level, cls)
    except ValueError as e:
        raise ParseError(str(e)) from None
    return {"realizations": [list(w.coeffs) for w in reals]}


def _cmd_chi(args):
    return ser.xi_json(chi(ser.parse_pi(_read_doc(args))))


def _cmd_gpi(args):
    pi = ser.parse_pi(_read_doc(args))
    if not pi.entries:
        raise ParseError("empty pi-function")
    res = g_pi(pi)
    return {
        "lattice": ser.lattice_json(res.lattice),
        "invariant_factors": list(res.quotient.invariant_factors),
        "index": res.quotient.index,
        "generators_log": [{"coset": list(c), "witness": list(w)}
                           for c, w in res.generators_log],
    }


def _cmd_type(args):
    xi = ser.parse_xi(_read_doc(args))
    try:
        ct = classify_type(xi)
    except ValueError as e:
        raise ParseError(str(e)) from None
    witness = None
    if ct.witness is not None:
        p, reals = ct.witness
        witness = {"point": ser.point_json(p),
                   "realizations": [list(w.coeffs) for w in reals]}
    return {"type": ct.tag, "witness": witness,
            "diagnostics": list(ct.diagnostics)}


def _parse_pair(doc):
    pi1 = ser.parse_pi(ser._require(doc, "pi1"))
    pi2 = ser.parse_pi(ser._require(doc, "pi2"))
    g1 = ser.int_vector(ser._require(doc, "g1"), pi1.k - 1)
    g2 = ser.int_vector(ser._require(doc, "g2"), pi2.k - 1)
    return pi1, g1, pi2, g2


def _cmd_iso(args):
    pi1, g1, pi2, g2 = _parse_pair(_read_doc(args))
    try:
        return {"isomorphic": is_isomorphic(pi1, g1, pi2, g2)}
    except ValueError as e:
        raise ParseError(str(e)) from None


def _cmd_link(args):
    pi1, g1, pi2, g2 = _parse_pair(_read_doc(args))
    try:
        return {"same_block": same_block(pi1, g1, pi2, g2)}
    except ValueError as e:
        raise ParseError(str(e)) from None


def _cmd_blockid(args):
    doc = _read_doc(args)
    pi = ser.parse_pi(ser._require(doc, "pi"))
    g = ser.int_vector(ser._require(doc, "g"), pi.k - 1)
    try:
        bid = block_id(pi, g)
    except ValueError as e:
        raise ParseError(str(e)) from None
    out = ser.block_id_json(bid)
    out["diagnostics"] = list(bid.diagnostics)
    return out


def _cmd_orbit(args):
    doc = _read_doc(args)
    sides = []
    for key in ("A", "B"):
        side = []
        for e in ser._require(doc, key, list):
            p = ser.parse_point(ser._require(e, "point"))
            side.append((p, json.dumps(e.get("label"), sort_keys=True)))
        sides.append(side)
    try:
        b = orbit_match(sides[0], sides[1], lambda x, y: x == y)
    except ValueError as e:
        raise ParseError(str(e)) from None
    return {"match": None if b is None else [ser.rat_str(x) for x in b.b]}


def _cmd_translate(args):
    doc = _read_doc(args)
    lam = ser.parse_toroidal(ser._require(doc, "weight"))
    alpha = ser.int_vector(ser._require(doc, "alpha"), lam.type.rank)
    i = ser._require(doc, "i", int)
    m = ser._require(doc, "m", int)
    try:
        return ser.toroidal_json(weyl_translate(lam, alpha, i, m))
    except ValueError as e:
        raise ParseError(str(e)) from None


def _cmd_normalize(args):
    doc = _read_doc(args)
    lam = ser.parse_toroidal(ser._require(doc, "weight"))
    m = ser._require(doc, "m", int)
    try:
        return ser.toroidal_json(normalize_deltas(lam, m))
    except ValueError as e:
        raise ParseError(str(e)) from None


def _cmd_gcdform(args):
    doc = _read_doc(args)
    central = ser.int_vector(doc)
    if not central:
        raise ParseError("expected a nonempty integer array")
    m, normal = gcd_normal_form(central)
    return {"m": m, "normal": list(normal)}


def _cmd_level0block(args):
    xi = ser.parse_xi(_read_doc(args))
    try:
        return ser.xi_json(level_zero_block(xi))
    except ValueError as e:
        raise ParseError(str(e)) from None


def _cmd_schemas(args):
    return SCHEMAS


_COMMANDS = {
    "gamma": _cmd_gamma,
    "j0": _cmd_j0,
    "realizations": _cmd_realizations,
    "chi": _cmd_chi,
    "gpi": _cmd_gpi,
    "type": _cmd_type,
    "iso": _cmd_iso,
    "link": _cmd_link,
    "blockid": _cmd_blockid,
    "orbit": _cmd_orbit,
    "translate": _cmd_translate,
    "normalize": _cmd_normalize,
    "gcdform": _cmd_gcdform,
    "level0block": _cmd_level0block,
    "schemas": _cmd_schemas,
}


def _render_text(doc, indent=0):
    pad = "  " * indent
    lines = []
    if isinstance(doc, dict):
        for k, v in doc.items():
            if isinstance(v, (dict, list)):
                lines.append(f"{pad}{k}:")
                lines.extend(_render_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {v}")
    elif isinstance(doc, list):
        for v in doc:
            if isinstance(v, (dict, list)):
                lines.append(f"{pad}-")
                lines.extend(_render_text(v, indent + 1))
            else:
                lines.append(f"{pad}- {v}")
    else:
        lines.append(f"{pad}{doc}")
    return lines


def _emit(doc, args):
    if args.format == "json":
        text = json.dumps(doc) + "\n"
    else:
        text = "\n".join(_render_text(doc)) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="torblocks",
        description="Exact block classification for positive-level "
                    "integrable modules of toroidal Lie algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, positionals=()):
        p = sub.add_parser(name, help=help_text)
        for pos in positionals:
            p.add_argument(**pos)
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.add_argument("--input", default=None)
        p.add_argument("--output", default=None)
        return p

    type_pos = {"dest": "type", "help": "Lie type, e.g. A2"}
    add("gamma", "class group invariant factors and minuscule nodes",
        [type_pos])
    add("j0", "minuscule node set", [type_pos])
    add("realizations", "dominant finite parts for a (level, class) value",
        [type_pos, {"dest": "level", "type": int},
         {"dest": "cls", "help": 'class, "0" or "w<i>"'}])
    for name, help_text in (
        ("chi", "spectral character of a pi-function"),
        ("gpi", "support lattice G_pi and its quotient"),
        ("type", "type I / type II classification of a character"),
        ("iso", "isomorphism test for two (pi, g) pairs"),
        ("link", "same-block test for two (pi, g) pairs"),
        ("blockid", "canonical block identifier of a (pi, g) pair"),
        ("orbit", "scaling matching labeled supports"),
        ("translate", "Weyl translation of a toroidal weight"),
        ("normalize", "reduce delta coordinates into [0, m)"),
        ("gcdform", "gcd normal form of a central character"),
        ("level0block", "canonical level-zero block representative"),
        ("schemas", "print input/output schemas"),
    ):
        add(name, help_text)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        result = _COMMANDS[args.command](args)
    except ParseError as e:
        _emit({"error": str(e)}, args)
        return 2
    except OSError as e:
        _emit({"error": str(e)}, args)
        return 2
    except AssertionError as e:
        _emit({"error": f"internal invariant breach: {e}"}, args)
        return 3
    _emit(result, args)
    return 0


if __name__ == "__main__":
    sys.exit(main())
