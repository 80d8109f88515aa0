"""Affine and toroidal weight arithmetic.

An affine weight is stored as (level, finite part, delta coefficient)
where the level is the value on the first zero-degree central element.
The value on the extra simple coroot is ``level - <fin, theta_check>``
and is available as :func:`affine_coroot_value`.

Delta coefficients are exact rationals.  Two affine weights that differ
only in the delta coefficient are "equal up to delta shift"; that
predicate is what the one-dimensional twists preserve.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from math import gcd

from .rootdata import (
    FiniteWeight,
    GammaClass,
    LieType,
    RootDataError,
    build_root_system,
    gamma_class,
    zero_weight,
)


class WeightError(ValueError):
    pass


@dataclass(frozen=True)
class AffineWeight:
    type: LieType
    level: int
    fin: FiniteWeight
    delta: Fraction = Fraction(0)

    def __post_init__(self):
        if self.fin.type != self.type:
            raise WeightError("finite part has mismatched Lie type")
        object.__setattr__(self, "delta", Fraction(self.delta))

    def __add__(self, other):
        if not isinstance(other, AffineWeight) or other.type != self.type:
            raise WeightError("mixed types in affine weight addition")
        return AffineWeight(self.type, self.level + other.level,
                            self.fin + other.fin, self.delta + other.delta)

    def is_zero(self) -> bool:
        return self.level == 0 and self.fin.is_zero() and self.delta == 0

    def delta_shift_key(self):
        """Identification key modulo one-dimensional twists."""
        return (self.level, self.fin.coeffs)


@dataclass(frozen=True)
class ToroidalWeight:
    type: LieType
    k: int
    central: tuple  # values on K_1..K_k
    fin: FiniteWeight
    deltas: tuple  # Fraction coefficients of delta_1..delta_k

    def __post_init__(self):
        if self.k < 1:
            raise WeightError("loop count must be >= 1")
        if len(self.central) != self.k or len(self.deltas) != self.k:
            raise WeightError("central/delta vectors must have length k")
        if self.fin.type != self.type:
            raise WeightError("finite part has mismatched Lie type")
        object.__setattr__(self, "central", tuple(int(c) for c in self.central))
        object.__setattr__(self, "deltas", tuple(Fraction(d) for d in self.deltas))


def affine_zero(t: LieType) -> AffineWeight:
    return AffineWeight(t, 0, zero_weight(t), Fraction(0))


def affine_coroot_value(lam: AffineWeight) -> int:
    """Value on the affine simple coroot: level - <fin, theta_check>."""
    rs = build_root_system(lam.type)
    return lam.level - rs.theta_pairing(lam.fin)


def is_dominant(lam: AffineWeight) -> bool:
    return lam.fin.is_dominant() and affine_coroot_value(lam) >= 0


def affine_geq(lam: AffineWeight, mu: AffineWeight) -> bool:
    """Partial order: lam - mu a nonnegative integer sum of simple roots.

    The coefficient of the affine simple root is forced by the delta
    difference; the rest reduces to integrality and nonnegativity of the
    simple-root coordinates of the remaining finite part.
    """
    if lam.type != mu.type:
        raise WeightError("mixed types in affine comparison")
    if lam.level != mu.level:
        return False
    k_aff = lam.delta - mu.delta
    if k_aff.denominator != 1 or k_aff < 0:
        return False
    rs = build_root_system(lam.type)
    # lam - mu = sum k_i alpha_i + k_aff (delta_1 - theta)
    diff = lam.fin - mu.fin
    target = tuple(d + int(k_aff) * th for d, th in
                   zip(diff.coeffs, rs.alpha_to_omega(rs.theta)))
    coords = rs.omega_to_alpha(target)
    return all(c.denominator == 1 and c >= 0 for c in coords)


def min_coset_rep(lam: AffineWeight) -> FiniteWeight:
    """Minimal dominant representative of the finite part mod the root lattice."""
    if not is_dominant(lam):
        raise WeightError("minimal coset representative requires a dominant weight")
    return gamma_class(lam.fin).weight()


def realizations(t: LieType, level: int, gamma: GammaClass):
    """All dominant finite parts of level-``level`` dominant affine weights
    in the given class, up to delta shift.

    Enumerates dominant weights with comark-weighted coordinate sum at
    most ``level`` and filters by class; returned sorted lexicographically.
    """
    if level <= 0:
        raise WeightError("realization enumeration requires level >= 1")
    if gamma.type != t:
        raise WeightError("class type mismatch")
    rs = build_root_system(t)
    n = t.rank
    out = []

    def extend(prefix, budget):
        i = len(prefix)
        if i == n:
            w = FiniteWeight(t, tuple(prefix))
            if gamma_class(w) == gamma:
                out.append(w)
            return
        step = rs.comarks[i]
        c = 0
        while c * step <= budget:
            extend(prefix + [c], budget - c * step)
            c += 1

    extend([], level)
    out.sort(key=lambda w: w.coeffs)
    return out


def _translate_data(lam: ToroidalWeight, alpha, s):
    """Shared pieces of the paired-reflection translation: the coroot
    pairing a = <fin, alpha_check> and the finite part shifted by s*alpha."""
    rs = build_root_system(lam.type)
    a = rs.pairing_with_coroot(lam.fin, alpha)
    if a.denominator != 1:
        raise AssertionError("non-integral coroot pairing (internal error)")
    alpha_omega = rs.alpha_to_omega(alpha)
    fin = FiniteWeight(lam.type, tuple(c + s * x for c, x in
                                       zip(lam.fin.coeffs, alpha_omega)))
    return int(a), fin


def _step(lam: ToroidalWeight, alpha, mvec):
    """Translation step size s = (2/(alpha|alpha)) * sum_i mvec[i]*<lam,K_i>."""
    rs = build_root_system(lam.type)
    if alpha not in rs.positive_roots:
        raise WeightError(f"{alpha} is not a positive root of {lam.type}")
    s = Fraction(2, 1) / rs.root_norm(alpha) * sum(
        m * c for m, c in zip(mvec, lam.central))
    if s.denominator != 1:
        raise AssertionError("non-integral translation step (internal error)")
    return int(s)


def weyl_translate(lam: ToroidalWeight, alpha, i: int, m_i: int) -> ToroidalWeight:
    """Translation along the real root alpha + m_i * delta_i:

    lam + s*alpha - (<fin, alpha_check> + s) * delta_i,
    s = (2/(alpha|alpha)) * m_i * <lam, K_i>.

    Only the finite part and the i-th delta coordinate change; level and
    central values are preserved.
    """
    if not 1 <= i <= lam.k:
        raise WeightError(f"delta index {i} out of range 1..{lam.k}")
    mvec = [0] * lam.k
    mvec[i - 1] = m_i
    s = _step(lam, tuple(alpha), mvec)
    a, fin = _translate_data(lam, tuple(alpha), s)
    deltas = list(lam.deltas)
    deltas[i - 1] -= a + s
    return replace(lam, fin=fin, deltas=tuple(deltas))


def _translate_multi(lam: ToroidalWeight, alpha, mvec):
    """Composite r_alpha r_beta for beta = alpha + sum_i mvec[i] delta_i,
    expanded directly from the reflection formulas:

    lam + s*alpha - (<fin, alpha_check> + s) * sum_i mvec[i] delta_i.

    Unlike the single-index form this weights each delta shift by the
    corresponding degree, which is what composing the two reflections
    actually produces; it is the engine behind delta normalization.
    """
    if len(mvec) != lam.k:
        raise WeightError("translation degree vector must have length k")
    s = _step(lam, alpha, mvec)
    a, fin = _translate_data(lam, alpha, s)
    deltas = tuple(d - (a + s) * m for d, m in zip(lam.deltas, mvec))
    return replace(lam, fin=fin, deltas=deltas)


def normalize_deltas(lam: ToroidalWeight, m: int) -> ToroidalWeight:
    """Reduce delta coordinates 2..k into [0, m) by Weyl translations.

    Requires central values (m, 0, ..., 0) with m > 0 and integral delta
    coordinates beyond the first.  Reduction is performed coordinate by
    coordinate in increasing order; each step composes three translations
    along the highest root (the mixed-degree one shifts the target delta
    by a multiple of m, the others restore the finite part).
    """
    if m <= 0:
        raise WeightError("normalization requires m > 0")
    if lam.central[0] != m or any(c != 0 for c in lam.central[1:]):
        raise WeightError("central vector must be (m, 0, ..., 0)")
    if any(d.denominator != 1 for d in lam.deltas[1:]):
        raise WeightError("delta coordinates 2..k must be integral")
    rs = build_root_system(lam.type)
    theta = rs.theta
    cur = lam
    for j in range(2, lam.k + 1):
        dj = cur.deltas[j - 1]
        if 0 <= dj < m:
            continue
        t = int(dj // m)  # shift needed: -t*m lands in [0, m)
        # Writing t*m = (-t)*a + t*(a+m) with a = <fin, theta_check>:
        # a pure degree-j translation contributes -a per unit, and a
        # mixed (1, j) pair contributes -(a+m) per unit while the second
        # leg of the pair undoes the finite-part change.
        mvec = [0] * cur.k
        mvec[j - 1] = -t
        cur = _translate_multi(cur, theta, tuple(mvec))
        mvec = [0] * cur.k
        mvec[0] = 1
        mvec[j - 1] = t
        cur = _translate_multi(cur, theta, tuple(mvec))
        mvec = [0] * cur.k
        mvec[0] = -1
        cur = _translate_multi(cur, theta, tuple(mvec))
        assert cur.fin == lam.fin
        assert 0 <= cur.deltas[j - 1] < m
    return cur


def gcd_normal_form(central):
    """Canonical central character: (gcd m, vector (m, 0, ..., 0))."""
    central = tuple(int(c) for c in central)
    m = 0
    for c in central:
        m = gcd(m, c)
    return m, (m,) + (0,) * (len(central) - 1)
