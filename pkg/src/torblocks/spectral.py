"""Spectral characters and the exact support lattice G_pi.

A pi-function assigns dominant affine weights of positive level to
finitely many rational torus points.  Its spectral character records,
per point, the level and the root-lattice coset of the finite part.
The lattice G_pi collects the monomial degrees m where the diagonal
action on the highest-weight vector is nonzero; it has finite index in
Z^{k-1} and its quotient enumerates the irreducible summands attached
to the pi-function.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .rootdata import GammaClass, LieType, gamma_class
from .torus import (
    ScalingElement,
    TorusPoint,
    evaluate,
    relation_lattice,
    scale,
)
from .weights import AffineWeight, is_dominant
from .zlattice import (
    QuotientData,
    ZLattice,
    hnf,
    member,
    mod2_kernel_lattice,
    quotient,
)


class SpectralError(ValueError):
    pass


def _sorted_entries(entries, k_minus_1, what):
    pts = [p.coords for p, _ in entries]
    if len(set(pts)) != len(pts):
        raise SpectralError(f"duplicate support points in {what}")
    for p, _ in entries:
        if p.k_minus_1 != k_minus_1:
            raise SpectralError(f"support point dimension mismatch in {what}")
    return tuple(sorted(entries, key=lambda e: e[0].coords))


@dataclass(frozen=True)
class PiFunction:
    type: LieType
    k: int
    entries: tuple  # ((TorusPoint, AffineWeight), ...) sorted by point

    def __post_init__(self):
        if self.k < 2:
            raise SpectralError("pi-functions need at least two loop variables")
        for _, lam in self.entries:
            if lam.type != self.type:
                raise SpectralError("weight type mismatch in pi-function")
            if lam.level < 1:
                raise SpectralError(
                    "pi-function values must have level >= 1 "
                    "(level-0 one-dimensional twists are excluded by design)")
            if not is_dominant(lam):
                raise SpectralError("pi-function values must be dominant")
        object.__setattr__(
            self, "entries",
            _sorted_entries(tuple(self.entries), self.k - 1, "pi-function"))

    def support(self):
        return [p for p, _ in self.entries]

    def total_level(self) -> int:
        return sum(lam.level for _, lam in self.entries)


@dataclass(frozen=True)
class XiCharacter:
    type: LieType
    k: int
    entries: tuple  # ((TorusPoint, (level, GammaClass)), ...) sorted by point

    def __post_init__(self):
        if self.k < 2:
            raise SpectralError("characters need at least two loop variables")
        for _, (level, cls) in self.entries:
            if cls.type != self.type:
                raise SpectralError("class type mismatch in character")
            if level == 0 and cls.rep == 0:
                raise SpectralError("character values must be nonzero")
        object.__setattr__(
            self, "entries",
            _sorted_entries(tuple(self.entries), self.k - 1, "character"))


@dataclass(frozen=True)
class GPiResult:
    lattice: ZLattice
    quotient: QuotientData
    generators_log: tuple  # ((coset_rep, witness), ...) per contributing coset


def wt(pi: PiFunction) -> AffineWeight:
    """Sum of all values of the pi-function."""
    from .weights import affine_zero

    out = affine_zero(pi.type)
    for _, lam in pi.entries:
        out = out + lam
    return out


def chi(pi: PiFunction) -> XiCharacter:
    """Spectral character: per point, (level, class of the finite part)."""
    return XiCharacter(pi.type, pi.k, tuple(
        (p, (lam.level, gamma_class(lam.fin))) for p, lam in pi.entries))


def xi_add(x1: XiCharacter, x2: XiCharacter) -> XiCharacter:
    if x1.type != x2.type or x1.k != x2.k:
        raise SpectralError("character type/loop-count mismatch")
    acc = {p.coords: (p, level, cls) for p, (level, cls) in x1.entries}
    for p, (level, cls) in x2.entries:
        if p.coords in acc:
            q, l0, c0 = acc[p.coords]
            acc[p.coords] = (q, l0 + level, c0 + cls)
        else:
            acc[p.coords] = (p, level, cls)
    entries = tuple((p, (l, c)) for p, l, c in acc.values()
                    if not (l == 0 and c.rep == 0))
    return XiCharacter(x1.type, x1.k, entries)


def xi_neg(x: XiCharacter) -> XiCharacter:
    return XiCharacter(x.type, x.k, tuple(
        (p, (-level, -cls))
        for p, (level, cls) in x.entries))


def xi_scale_action(b: ScalingElement, x: XiCharacter) -> XiCharacter:
    """(b.xi)(S) = xi(b.S); stored points are relabeled by b^{-1}."""
    binv = b.inverse()
    return XiCharacter(x.type, x.k, tuple(
        (scale(binv, p), v) for p, v in x.entries))


def pi_scale_action(b: ScalingElement, pi: PiFunction) -> PiFunction:
    """(b.pi)(M) = pi(b.M); stored points are relabeled by b^{-1}."""
    binv = b.inverse()
    return PiFunction(pi.type, pi.k, tuple(
        (scale(binv, p), lam) for p, lam in pi.entries))


def _vec(lam: AffineWeight):
    """Faithful coordinates of the weight on the small Cartan:
    (level, omega-coordinates, delta coefficient)."""
    return (Fraction(lam.level),) + tuple(
        Fraction(c) for c in lam.fin.coeffs) + (lam.delta,)


def vanishing_test(pi: PiFunction, m) -> bool:
    """True iff sum_i evaluate(M_i, m) * vec(lambda_i) = 0 exactly."""
    if len(m) != pi.k - 1:
        raise SpectralError("degree vector length mismatch")
    n = pi.type.rank + 2
    total = [Fraction(0)] * n
    for p, lam in pi.entries:
        e = evaluate(p, m)
        for j, v in enumerate(_vec(lam)):
            total[j] += e * v
    return not any(total)


def _contains_basis(L: ZLattice, basis) -> bool:
    return all(member(L, row) for row in basis)


def g_pi(pi: PiFunction) -> GPiResult:
    """The lattice generated by {m : vanishing_test(pi, m) = false}.

    Works coset by coset over the all-positive-evaluation sublattice P_0:
    on P_0 every evaluation is positive, so the level coordinates add up
    to something strictly positive and a basis of P_0 goes straight into
    the generator set.  On each coset of P_0, support indices whose
    points differ by a character trivial on P_0 are merged; if every
    merged class sums to zero, distinct characters are linearly
    independent and the whole coset vanishes, otherwise a witness exists
    inside a box of side (class count) in P_0-basis coordinates and the
    lexicographically first one is taken.
    """
    if not pi.entries:
        raise SpectralError("G_pi of an empty pi-function")
    d = pi.k - 1
    points = [p for p, _ in pi.entries]
    vecs = [_vec(lam) for _, lam in pi.entries]
    sign_rows = [[0 if s > 0 else 1 for s, _ in p.factored] for p in points]
    P0 = mod2_kernel_lattice(sign_rows, d)
    assert P0.is_full_rank()
    generators = [list(row) for row in P0.basis]
    log = []
    for c in quotient(P0).coset_reps():
        # merge indices whose point ratios are trivial characters on P_0
        classes = []
        for i in range(len(points)):
            placed = False
            for cl in classes:
                j = cl[0]
                ratio = tuple(a / b for a, b in
                              zip(points[i].coords, points[j].coords))
                if _contains_basis(relation_lattice(ratio), P0.basis):
                    cl.append(i)
                    placed = True
                    break
            if not placed:
                classes.append([i])
        n = pi.type.rank + 2
        some_nonzero = False
        for cl in classes:
            s = [Fraction(0)] * n
            for i in cl:
                e = evaluate(points[i], c)
                for j in range(n):
                    s[j] += e * vecs[i][j]
            if any(s):
                some_nonzero = True
                break
        if not some_nonzero:
            continue
        witness = None
        side = len(classes)
        for digits in product(range(side), repeat=d):
            m = tuple(
                c[j] + sum(t * row[j] for t, row in zip(digits, P0.basis))
                for j in range(d))
            if not vanishing_test(pi, m):
                witness = m
                break
        if witness is None:
            raise AssertionError(
                "no generator found inside the class-count box "
                "(internal error)")
        generators.append(list(witness))
        log.append((tuple(c), witness))
    generators.sort()
    L = hnf(generators, d)
    return GPiResult(L, quotient(L), tuple(log))


def is_isomorphic(pi1: PiFunction, g1, pi2: PiFunction, g2) -> bool:
    """Same irreducible: a scaling matches the labeled supports with
    per-point weights equal up to delta shift, and g1 - g2 lies in G_pi."""
    if pi1.type != pi2.type or pi1.k != pi2.k:
        raise SpectralError("pi-function type/loop-count mismatch")
    if len(g1) != pi1.k - 1 or len(g2) != pi1.k - 1:
        raise SpectralError("coset vector length mismatch")
    if pi1.total_level() != pi2.total_level():
        return False
    from .torus import orbit_match

    b = orbit_match(
        list(pi1.entries), list(pi2.entries),
        lambda a, c: a.delta_shift_key() == c.delta_shift_key())
    if b is None:
        return False
    diff = tuple(a - c for a, c in zip(g1, g2))
    return member(g_pi(pi1).lattice, diff)
