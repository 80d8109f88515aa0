"""Rational points of the (k-1)-torus.

Coordinates are nonzero rationals kept alongside their prime
factorization (sign bit plus sparse prime -> exponent map), so that
monomial evaluation, multiplicative relation lattices, and the scaling
action are all exact.  Irrational or oversized coordinates are rejected
up front; every decision procedure downstream is invariant under field
embedding, so nothing is lost by working over Q.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from sympy import factorint

from .zlattice import ZLattice, full_lattice, hnf, kernel

_MAX_MAGNITUDE = 2 ** 64


class TorusError(ValueError):
    pass


def _factor_rational(q: Fraction):
    """(sign, {prime: exponent}) with sign in {1, -1}."""
    if q == 0:
        raise TorusError("torus coordinates must be nonzero")
    if abs(q.numerator) > _MAX_MAGNITUDE or q.denominator > _MAX_MAGNITUDE:
        raise TorusError(
            f"coordinate {q} exceeds the 2**64 factorization bound")
    sign = 1 if q > 0 else -1
    exps = dict(factorint(abs(q.numerator)))
    for p, e in factorint(q.denominator).items():
        exps[p] = exps.get(p, 0) - e
    return sign, {p: e for p, e in exps.items() if e != 0}


@dataclass(frozen=True)
class TorusPoint:
    k_minus_1: int
    coords: tuple  # nonzero Fractions
    factored: tuple = None  # per coordinate: (sign, ((prime, exp), ...))

    def __post_init__(self):
        coords = tuple(Fraction(c) for c in self.coords)
        if len(coords) != self.k_minus_1:
            raise TorusError("coordinate count does not match dimension")
        if self.k_minus_1 < 1:
            raise TorusError("torus dimension must be >= 1")
        object.__setattr__(self, "coords", coords)
        if self.factored is None:
            fac = tuple(
                (s, tuple(sorted(e.items())))
                for s, e in (_factor_rational(c) for c in coords)
            )
            object.__setattr__(self, "factored", fac)

    def __lt__(self, other):
        return self.coords < other.coords


def torus_point(*coords) -> TorusPoint:
    return TorusPoint(len(coords), tuple(Fraction(c) for c in coords))


@dataclass(frozen=True)
class ScalingElement:
    b: tuple  # nonzero Fractions, length k-1

    def __post_init__(self):
        b = tuple(Fraction(x) for x in self.b)
        if any(x == 0 for x in b):
            raise TorusError("scaling elements must be componentwise nonzero")
        object.__setattr__(self, "b", b)

    def inverse(self) -> "ScalingElement":
        return ScalingElement(tuple(1 / x for x in self.b))


def identity_scaling(k_minus_1: int) -> ScalingElement:
    return ScalingElement((Fraction(1),) * k_minus_1)


def evaluate(p: TorusPoint, m) -> Fraction:
    """The Laurent monomial t^m at p: prod_j coords[j] ** m[j]."""
    if len(m) != p.k_minus_1:
        raise TorusError("exponent vector length mismatch")
    out = Fraction(1)
    for c, e in zip(p.coords, m):
        out *= c ** int(e)
    return out


def relation_lattice(q) -> ZLattice:
    """{m in Z^d : prod_j q[j]**m[j] = 1} for nonzero rationals q.

    One integer row per prime (exponent vectors must cancel exactly)
    plus the sign row relaxed modulo 2 through an auxiliary doubled
    column; the answer is the integer kernel projected back to Z^d.
    """
    q = tuple(Fraction(x) for x in q)
    d = len(q)
    if d == 0:
        raise TorusError("empty coordinate vector")
    facs = [_factor_rational(x) for x in q]
    primes = sorted({p for _, exps in facs for p, _ in exps.items()})
    rows = [[dict(exps).get(p, 0) for _, exps in facs] + [0] for p in primes]
    rows.append([0 if s > 0 else 1 for s, _ in facs] + [2])
    K = kernel(rows)
    return hnf([row[:d] for row in K.basis], d)


def scale(b: ScalingElement, p: TorusPoint) -> TorusPoint:
    if len(b.b) != p.k_minus_1:
        raise TorusError("scaling dimension mismatch")
    return TorusPoint(p.k_minus_1, tuple(x * c for x, c in zip(b.b, p.coords)))


def orbit_match(A, B, equiv) -> ScalingElement | None:
    """A scaling b carrying the labeled support A bijectively onto B.

    A and B are lists of (TorusPoint, label); ``equiv`` decides label
    compatibility.  Each pairing of A's first point with a point of B
    forces b componentwise; candidates are tried in coordinate-sorted
    order and the first one that maps the whole labeled support onto B
    (respecting equiv) is returned.  None when no candidate works.
    """
    if not A or not B:
        raise TorusError("orbit matching requires nonempty supports")
    for pts in (A, B):
        seen = [p.coords for p, _ in pts]
        if len(set(seen)) != len(seen):
            raise TorusError("duplicate points within a support")
    if len(A) != len(B):
        return None
    p0, _ = A[0]
    candidates = sorted(
        tuple(cb / ca for cb, ca in zip(pb.coords, p0.coords))
        for pb, _ in B
    )
    for cand in candidates:
        b = ScalingElement(cand)
        ok = True
        for pa, la in A:
            img = scale(b, pa).coords
            hit = next(((pb, lb) for pb, lb in B if pb.coords == img), None)
            if hit is None or not equiv(la, hit[1]):
                ok = False
                break
        if ok:
            return b
    return None
