"""Block classification for positive-level integrable modules.

A spectral character is type II when each of its values (level, class)
has a unique dominant realization; its blocks are then isomorphism
classes, identified by a canonical orbit representative of the
pi-function plus a coset modulo G_pi.  Otherwise the character is
type I and the whole scaling orbit of the character is a single block.
Level-zero characters are classified separately, by their scaling
orbit alone.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction

from .rootdata import gamma_order
from .spectral import (
    PiFunction,
    SpectralError,
    XiCharacter,
    chi,
    g_pi,
    wt,
)
from .torus import ScalingElement, scale
from .weights import realizations

E8_DISCREPANCY_NOTICE = (
    "unique realization despite trivial class group: the definition "
    "yields type II although the general expectation for trivial-class-"
    "group types is type I; enumeration found a single dominant "
    "realization for every value")

STABILIZER_NOTICE = (
    "support admits a nontrivial scaling self-symmetry; pointwise "
    "realization choices may be identified by the symmetry")


class BlockError(ValueError):
    pass


@dataclass(frozen=True)
class CharacterType:
    tag: str  # "I" or "II"
    witness: tuple = None  # TypeI: (point, realizations); TypeII: None
    diagnostics: tuple = ()


@dataclass(frozen=True)
class BlockId:
    kind: str  # "I" or "II"
    xi: XiCharacter = None  # canonical orbit representative (TypeI)
    pi: PiFunction = None  # canonical orbit representative (TypeII)
    coset: tuple = None  # canonical coset representative (TypeII)
    diagnostics: tuple = ()

    def key(self):
        """Equality payload; diagnostics never distinguish blocks."""
        return (self.kind, self.xi, self.pi, self.coset)

    def __eq__(self, other):
        return isinstance(other, BlockId) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())


def _stabilizer_nontrivial(entries, label_key) -> bool:
    """Whether some scaling other than 1 permutes the labeled support."""
    if len(entries) < 2:
        return False
    p0 = entries[0][0]
    coords = {p.coords: label_key(l) for p, l in entries}
    ones = (Fraction(1),) * p0.k_minus_1
    for p, _ in entries:
        cand = tuple(c / a for c, a in zip(p.coords, p0.coords))
        if cand == ones:
            continue
        b = ScalingElement(cand)
        if all(coords.get(scale(b, q).coords) == label_key(l)
               for q, l in entries):
            return True
    return False


def _canonical_orbit(entries, label_key, rebuild):
    """Lexicographically least anchor-normalized labeled support.

    Each support point in turn is scaled to (1, ..., 1); the sorted,
    relabeled entry list with the least (coords, label-key) sequence
    wins.  ``rebuild`` turns the winning entry list back into a value.
    """
    if not entries:
        return rebuild(())
    best = None
    for anchor, _ in entries:
        b = ScalingElement(tuple(1 / c for c in anchor.coords))
        moved = sorted(
            ((scale(b, p), l) for p, l in entries),
            key=lambda e: (e[0].coords, label_key(e[1])))
        sig = tuple((p.coords, label_key(l)) for p, l in moved)
        if best is None or sig < best[0]:
            best = (sig, moved)
    return rebuild(tuple(best[1]))


def classify_type(xi: XiCharacter) -> CharacterType:
    """Type II iff every value (level, class) has a unique dominant
    realization; otherwise type I, witnessed by the first point whose
    value admits several."""
    for _, (level, _) in xi.entries:
        if level < 1:
            raise BlockError("type classification requires levels >= 1")
    diagnostics = []
    if _stabilizer_nontrivial(list(xi.entries), lambda v: v):
        diagnostics.append(STABILIZER_NOTICE)
    for p, (level, cls) in xi.entries:
        reals = realizations(xi.type, level, cls)
        if len(reals) >= 2:
            return CharacterType("I", (p, tuple(reals)), tuple(diagnostics))
    if gamma_order(xi.type) == 1 and xi.entries:
        diagnostics.append(E8_DISCREPANCY_NOTICE)
    return CharacterType("II", None, tuple(diagnostics))


def _zero_deltas(pi: PiFunction) -> PiFunction:
    return PiFunction(pi.type, pi.k, tuple(
        (p, replace(lam, delta=Fraction(0))) for p, lam in pi.entries))


def _canonical_xi(xi: XiCharacter) -> XiCharacter:
    return _canonical_orbit(
        list(xi.entries),
        lambda v: (v[0], v[1].rep),
        lambda entries: XiCharacter(xi.type, xi.k, entries))


def _canonical_pi(pi: PiFunction) -> PiFunction:
    return _canonical_orbit(
        list(pi.entries),
        lambda lam: (lam.level, lam.fin.coeffs),
        lambda entries: PiFunction(pi.type, pi.k, entries))


def block_id(pi: PiFunction, g) -> BlockId:
    """Canonical block identifier of the irreducible indexed by (pi, g)."""
    if wt(pi).level < 1:
        raise BlockError(
            "level-0 pi-function; use level_zero_block for that regime")
    if len(g) != pi.k - 1:
        raise BlockError("coset vector length mismatch")
    xi = chi(pi)
    ct = classify_type(xi)
    if ct.tag == "I":
        return BlockId("I", xi=_canonical_xi(xi), diagnostics=ct.diagnostics)
    res = g_pi(pi)
    coset = res.quotient.coset_rep(tuple(int(x) for x in g))
    return BlockId("II", pi=_canonical_pi(_zero_deltas(pi)), coset=coset,
                   diagnostics=ct.diagnostics)


def same_block(pi1: PiFunction, g1, pi2: PiFunction, g2) -> bool:
    """Whether the two irreducibles lie in the same block."""
    if pi1.type != pi2.type or pi1.k != pi2.k:
        raise BlockError("pi-function type/loop-count mismatch")
    if pi1.total_level() != pi2.total_level():
        return False
    x1, x2 = chi(pi1), chi(pi2)
    if _canonical_xi(x1) != _canonical_xi(x2):
        return False
    if classify_type(x1).tag == "I":
        return True
    from .spectral import is_isomorphic

    return is_isomorphic(pi1, tuple(g1), pi2, tuple(g2))


def level_zero_block(xi0: XiCharacter) -> XiCharacter:
    """Canonical scaling-orbit representative of a level-zero character."""
    for _, (level, _) in xi0.entries:
        if level != 0:
            raise BlockError("level-zero block requested with nonzero level")
    return _canonical_xi(xi0)
