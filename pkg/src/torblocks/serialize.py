"""Exact JSON encodings of the domain values.

Rationals appear as canonical strings "p/q" (lowest terms, positive
denominator, "/1" omitted); everything else is plain JSON.  Parsers and
renderers are inverse to each other on every schema.
"""

from __future__ import annotations

from fractions import Fraction

from .blocks import BlockId
from .rootdata import FiniteWeight, GammaClass, LieType, all_gamma_classes
from .spectral import PiFunction, XiCharacter
from .torus import TorusPoint
from .weights import AffineWeight, ToroidalWeight
from .zlattice import ZLattice, hnf


class ParseError(ValueError):
    pass


def rat_str(q) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rat(s) -> Fraction:
    if isinstance(s, int):
        return Fraction(s)
    if not isinstance(s, str):
        raise ParseError(f"expected a rational string, got {s!r}")
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as e:
        raise ParseError(f"bad rational literal {s!r}: {e}") from None


def parse_type(s) -> LieType:
    try:
        return LieType.parse(s)
    except Exception as e:
        raise ParseError(str(e)) from None


def _require(doc, key, kind=None):
    if not isinstance(doc, dict) or key not in doc:
        raise ParseError(f"missing field {key!r}")
    v = doc[key]
    if kind is not None and not isinstance(v, kind):
        raise ParseError(f"field {key!r} has wrong type")
    return v


def point_json(p: TorusPoint):
    return [rat_str(c) for c in p.coords]


def parse_point(doc) -> TorusPoint:
    if not isinstance(doc, list) or not doc:
        raise ParseError("a point must be a nonempty array of rationals")
    coords = tuple(parse_rat(c) for c in doc)
    try:
        return TorusPoint(len(coords), coords)
    except ValueError as e:
        raise ParseError(str(e)) from None


def class_str(c: GammaClass) -> str:
    return str(c)


def parse_class(t: LieType, s) -> GammaClass:
    for c in all_gamma_classes(t):
        if str(c) == s:
            return c
    raise ParseError(f"unknown class {s!r} for {t}")


def affine_json(lam: AffineWeight):
    return {"level": lam.level, "fin": list(lam.fin.coeffs),
            "delta": rat_str(lam.delta)}


def parse_affine(t: LieType, doc) -> AffineWeight:
    level = _require(doc, "level", int)
    fin = _require(doc, "fin", list)
    if len(fin) != t.rank or not all(isinstance(c, int) for c in fin):
        raise ParseError(f"fin must be {t.rank} integers")
    delta = parse_rat(doc.get("delta", "0"))
    return AffineWeight(t, level, FiniteWeight(t, tuple(fin)), delta)


def toroidal_json(lam: ToroidalWeight):
    return {"type": str(lam.type), "k": lam.k,
            "central": list(lam.central), "fin": list(lam.fin.coeffs),
            "deltas": [rat_str(d) for d in lam.deltas]}


def parse_toroidal(doc) -> ToroidalWeight:
    t = parse_type(_require(doc, "type", str))
    k = _require(doc, "k", int)
    central = _require(doc, "central", list)
    fin = _require(doc, "fin", list)
    deltas = _require(doc, "deltas", list)
    if len(fin) != t.rank or not all(isinstance(c, int) for c in fin):
        raise ParseError(f"fin must be {t.rank} integers")
    if not all(isinstance(c, int) for c in central):
        raise ParseError("central must be integers")
    try:
        return ToroidalWeight(t, k, tuple(central), FiniteWeight(t, tuple(fin)),
                              tuple(parse_rat(d) for d in deltas))
    except ValueError as e:
        raise ParseError(str(e)) from None


def pi_json(pi: PiFunction):
    return {"type": str(pi.type), "k": pi.k, "entries": [
        {"point": point_json(p), "weight": affine_json(lam)}
        for p, lam in pi.entries]}


def parse_pi(doc) -> PiFunction:
    t = parse_type(_require(doc, "type", str))
    k = _require(doc, "k", int)
    entries = []
    for e in _require(doc, "entries", list):
        p = parse_point(_require(e, "point"))
        lam = parse_affine(t, _require(e, "weight"))
        entries.append((p, lam))
    try:
        return PiFunction(t, k, tuple(entries))
    except ValueError as e:
        raise ParseError(str(e)) from None


def xi_json(xi: XiCharacter):
    return {"type": str(xi.type), "k": xi.k, "entries": [
        {"point": point_json(p),
         "value": {"level": level, "class": class_str(cls)}}
        for p, (level, cls) in xi.entries]}


def parse_xi(doc) -> XiCharacter:
    t = parse_type(_require(doc, "type", str))
    k = _require(doc, "k", int)
    entries = []
    for e in _require(doc, "entries", list):
        p = parse_point(_require(e, "point"))
        v = _require(e, "value")
        entries.append((p, (_require(v, "level", int),
                            parse_class(t, _require(v, "class", str)))))
    try:
        return XiCharacter(t, k, tuple(entries))
    except ValueError as e:
        raise ParseError(str(e)) from None


def lattice_json(L: ZLattice):
    return {"dim": L.dim, "basis": [list(r) for r in L.basis]}


def parse_lattice(doc) -> ZLattice:
    dim = _require(doc, "dim", int)
    basis = _require(doc, "basis", list)
    for row in basis:
        if not isinstance(row, list) or not all(isinstance(x, int) for x in row):
            raise ParseError("basis rows must be integer arrays")
    try:
        return hnf([tuple(r) for r in basis], dim)
    except ValueError as e:
        raise ParseError(str(e)) from None


def block_id_json(bid: BlockId):
    out = {"kind": bid.kind}
    if bid.kind == "I":
        out["xi"] = xi_json(bid.xi)
    else:
        out["pi"] = pi_json(bid.pi)
        out["coset"] = list(bid.coset)
    return out


def int_vector(doc, length=None):
    if not isinstance(doc, list) or not all(isinstance(x, int) for x in doc):
        raise ParseError("expected an integer array")
    if length is not None and len(doc) != length:
        raise ParseError(f"expected {length} integers")
    return tuple(doc)
