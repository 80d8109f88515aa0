"""Root and weight data for the nine finite simple types.

Everything is exact: Cartan matrices are hardcoded integer tables in
Bourbaki numbering, roots are generated from them by the root-string
algorithm, and the derived quantities (highest root, highest short root,
comarks) are cross-checked at build time against hardcoded expected
values.

Conventions used throughout:

* ``cartan[i][j] = <alpha_j, alpha_i_check>``, so column ``j`` of the
  Cartan matrix is the fundamental-weight coordinate vector of the
  simple root ``alpha_j``.
* Weights are stored by their coordinates in the fundamental-weight
  basis; roots additionally carry simple-root coordinates.
* The invariant form is normalised so that long roots have squared
  length 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache


class RootDataError(ValueError):
    """Invalid Lie type or malformed weight data."""


_RANK_BOUNDS = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 3,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 4,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}

_ROOT_COUNTS = {
    "A": lambda n: n * (n + 1),
    "B": lambda n: 2 * n * n,
    "C": lambda n: 2 * n * n,
    "D": lambda n: 2 * n * (n - 1),
    "E": lambda n: {6: 72, 7: 126, 8: 240}[n],
    "F": lambda n: 48,
    "G": lambda n: 12,
}


@dataclass(frozen=True, order=True)
class LieType:
    family: str
    rank: int

    def __post_init__(self):
        check = _RANK_BOUNDS.get(self.family)
        if check is None or not check(self.rank):
            raise RootDataError(f"inadmissible Lie type {self.family}{self.rank}")

    def __str__(self):
        return f"{self.family}{self.rank}"

    @staticmethod
    def parse(s: str) -> "LieType":
        s = s.strip()
        if len(s) < 2 or s[0] not in "ABCDEFG" or not s[1:].isdigit():
            raise RootDataError(f"cannot parse Lie type {s!r}")
        return LieType(s[0], int(s[1:]))


@dataclass(frozen=True)
class FiniteWeight:
    """Integral weight in fundamental-weight coordinates."""

    type: LieType
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != self.type.rank:
            raise RootDataError("coefficient vector length does not match rank")
        if not all(isinstance(c, int) for c in self.coeffs):
            raise RootDataError("weight coordinates must be integers")

    def __add__(self, other):
        self._check(other)
        return FiniteWeight(self.type, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        self._check(other)
        return FiniteWeight(self.type, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return FiniteWeight(self.type, tuple(-a for a in self.coeffs))

    def scale(self, n: int) -> "FiniteWeight":
        return FiniteWeight(self.type, tuple(n * a for a in self.coeffs))

    def _check(self, other):
        if not isinstance(other, FiniteWeight) or other.type != self.type:
            raise RootDataError("mixed Lie types in weight arithmetic")

    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)


def zero_weight(t: LieType) -> FiniteWeight:
    return FiniteWeight(t, (0,) * t.rank)


def fundamental_weight(t: LieType, i: int) -> FiniteWeight:
    if not 1 <= i <= t.rank:
        raise RootDataError(f"fundamental weight index {i} out of range for {t}")
    return FiniteWeight(t, tuple(1 if j == i - 1 else 0 for j in range(t.rank)))


@dataclass(frozen=True)
class GammaClass:
    """Element of the weight lattice modulo the root lattice.

    The canonical representative is 0 or a minuscule fundamental weight
    ``omega_i`` with ``i`` in the J0 index set of the type.
    """

    type: LieType
    rep: int  # 0 for the trivial class, else an index in J0

    def __post_init__(self):
        if self.rep != 0 and self.rep not in j0_set(self.type):
            raise RootDataError(f"{self.rep} is not a J0 index for {self.type}")

    def weight(self) -> FiniteWeight:
        if self.rep == 0:
            return zero_weight(self.type)
        return fundamental_weight(self.type, self.rep)

    def __add__(self, other):
        if not isinstance(other, GammaClass) or other.type != self.type:
            raise RootDataError("mixed Lie types in Gamma arithmetic")
        return gamma_class(self.weight() + other.weight())

    def __neg__(self):
        return gamma_class(-self.weight())

    def is_zero(self) -> bool:
        return self.rep == 0

    def __str__(self):
        return "0" if self.rep == 0 else f"w{self.rep}"


def _cartan_matrix(t: LieType):
    """Cartan matrix with ``cartan[i][j] = <alpha_j, alpha_i_check>``."""
    n = t.rank
    C = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, cij=-1, cji=-1):
        # 1-based node indices
        C[i - 1][j - 1] = cij
        C[j - 1][i - 1] = cji

    f = t.family
    if f in ("A", "B", "C"):
        for i in range(1, n):
            link(i, i + 1)
        if f == "B":
            # alpha_n short: <alpha_{n-1}, alpha_n_check> = -2
            link(n - 1, n, -1, -2)
        elif f == "C":
            # alpha_n long: <alpha_n, alpha_{n-1}_check> = -2
            link(n - 1, n, -2, -1)
    elif f == "D":
        for i in range(1, n - 1):
            link(i, i + 1)
        C[n - 2][n - 1] = 0
        C[n - 1][n - 2] = 0
        link(n - 2, n)
    elif f == "E":
        # Bourbaki: chain 1-3-4-5-...-n, node 2 attached to node 4
        link(1, 3)
        link(3, 4)
        link(2, 4)
        for i in range(4, n):
            link(i, i + 1)
    elif f == "F":
        link(1, 2)
        link(2, 3, -1, -2)  # alpha_3 short
        link(3, 4)
    elif f == "G":
        # alpha_1 short, alpha_2 long
        link(1, 2, -3, -1)
    return tuple(tuple(row) for row in C)


def _root_lengths(t: LieType):
    """Half squared lengths d_i = (alpha_i|alpha_i)/2, long roots = 1."""
    n = t.rank
    C = _cartan_matrix(t)
    d = [None] * n
    d[0] = Fraction(1)
    # propagate along the Dynkin graph: d_j / d_i = C[i][j] / C[j][i]
    changed = True
    while changed:
        changed = False
        for i in range(n):
            if d[i] is None:
                continue
            for j in range(n):
                if i != j and C[i][j] != 0 and d[j] is None:
                    d[j] = d[i] * Fraction(C[i][j], C[j][i])
                    changed = True
    top = max(d)
    return tuple(x / top for x in d)


# Expected theta (omega-coords), theta_s (omega-coords) and comarks,
# guarding against transcription errors in the Cartan tables.
def _expected_data(t: LieType):
    n = t.rank
    f = t.family

    def omega(*pairs):
        v = [0] * n
        for i, c in pairs:
            v[i - 1] = c
        return tuple(v)

    if f == "A":
        theta = omega((1, 2)) if n == 1 else omega((1, 1), (n, 1))
        return theta, theta, (1,) * n
    if f == "B":
        theta = omega((2, 1))
        theta_s = omega((1, 1))
        return theta, theta_s, (1,) + (2,) * (n - 2) + (1,)
    if f == "C":
        theta = omega((1, 2))
        theta_s = omega((2, 1))
        return theta, theta_s, (1,) * n
    if f == "D":
        theta = omega((2, 1))
        return theta, theta, (1,) + (2,) * (n - 3) + (1, 1)
    if f == "E":
        if n == 6:
            return omega((2, 1)), omega((2, 1)), (1, 2, 2, 3, 2, 1)
        if n == 7:
            return omega((1, 1)), omega((1, 1)), (2, 2, 3, 4, 3, 2, 1)
        return omega((8, 1)), omega((8, 1)), (2, 3, 4, 6, 5, 4, 3, 2)
    if f == "F":
        return omega((1, 1)), omega((4, 1)), (2, 3, 2, 1)
    # G2
    return omega((2, 1)), omega((1, 1)), (1, 2)


_J0_TABLE = {
    "A": lambda n: frozenset(range(1, n + 1)),
    "B": lambda n: frozenset({n}),
    "C": lambda n: frozenset({1}),
    "D": lambda n: frozenset({1, n - 1, n}),
    "E": lambda n: {6: frozenset({1, 6}), 7: frozenset({7}), 8: frozenset()}[n],
    "F": lambda n: frozenset(),
    "G": lambda n: frozenset(),
}


def j0_set(t: LieType) -> frozenset:
    """Indices of the minuscule fundamental-weight representatives of Gamma."""
    return _J0_TABLE[t.family](t.rank)


@dataclass(frozen=True)
class RootSystemData:
    type: LieType
    cartan: tuple  # cartan[i][j] = <alpha_j, alpha_i_check>
    cartan_inv: tuple  # Fraction matrix, inverse of cartan
    roots: tuple  # all roots, alpha-basis coordinates
    positive_roots: tuple
    theta: tuple  # alpha-basis coordinates of the highest root
    theta_s: tuple  # alpha-basis coordinates of the highest short root
    comarks: tuple
    lengths: tuple  # d_i = (alpha_i|alpha_i)/2

    @property
    def rank(self):
        return self.type.rank

    def alpha_to_omega(self, x):
        """Fundamental-weight coordinates of sum x_j alpha_j."""
        C = self.cartan
        n = self.rank
        return tuple(sum(C[i][j] * x[j] for j in range(n)) for i in range(n))

    def omega_to_alpha(self, c):
        """Simple-root coordinates (Fractions) of a weight given in omega-coords."""
        Ci = self.cartan_inv
        n = self.rank
        return tuple(sum(Ci[j][i] * c[i] for i in range(n)) for j in range(n))

    def root_norm(self, x) -> Fraction:
        """(beta|beta) for beta with alpha-coordinates x."""
        n = self.rank
        d = self.lengths
        C = self.cartan
        # (alpha_i|alpha_j) = d_i * C[i][j]
        return sum(
            x[i] * x[j] * d[i] * C[i][j] for i in range(n) for j in range(n)
        )

    def pairing_with_coroot(self, fin: FiniteWeight, alpha) -> Fraction:
        """<lambda, alpha_check> for a root alpha in alpha-coordinates."""
        n = self.rank
        d = self.lengths
        nrm = self.root_norm(alpha)
        s = sum(alpha[j] * d[j] * fin.coeffs[j] for j in range(n))
        return 2 * s / nrm

    def theta_pairing(self, fin: FiniteWeight) -> int:
        """<lambda, theta_check> = sum of comark-weighted coordinates."""
        return sum(c * a for c, a in zip(fin.coeffs, self.comarks))


def _invert(matrix):
    n = len(matrix)
    A = [[Fraction(matrix[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
         for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if A[r][col] != 0)
        A[col], A[piv] = A[piv], A[col]
        pv = A[col][col]
        A[col] = [v / pv for v in A[col]]
        for r in range(n):
            if r != col and A[r][col] != 0:
                f = A[r][col]
                A[r] = [v - f * w for v, w in zip(A[r], A[col])]
    return tuple(tuple(row[n:]) for row in A)


def _generate_positive_roots(C):
    n = len(C)
    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    roots = set(simple)
    frontier = list(simple)
    while frontier:
        new = []
        for x in frontier:
            for i in range(n):
                pairing = sum(C[i][j] * x[j] for j in range(n))
                # p = number of times alpha_i can be subtracted
                p = 0
                y = list(x)
                while True:
                    y[i] -= 1
                    if any(v < 0 for v in y) or tuple(y) not in roots:
                        break
                    p += 1
                if p - pairing > 0:
                    z = list(x)
                    z[i] += 1
                    z = tuple(z)
                    if z not in roots:
                        roots.add(z)
                        new.append(z)
        frontier = new
    return roots


@lru_cache(maxsize=None)
def build_root_system(t: LieType) -> RootSystemData:
    """Generate the full root system of an admissible type, with checks."""
    C = _cartan_matrix(t)
    n = t.rank
    d = _root_lengths(t)
    pos = _generate_positive_roots(C)
    expected_count = _ROOT_COUNTS[t.family](n)
    if 2 * len(pos) != expected_count:
        raise AssertionError(f"root count mismatch for {t}: {2 * len(pos)}")

    def norm(x):
        return sum(x[i] * x[j] * d[i] * C[i][j] for i in range(n) for j in range(n))

    by_height = sorted(pos, key=lambda x: (sum(x), x))
    theta = by_height[-1]
    short = [x for x in pos if norm(x) < 2]
    theta_s = theta if not short else sorted(short, key=lambda x: (sum(x), x))[-1]
    if norm(theta) != 2:
        raise AssertionError(f"highest root of {t} is not long")
    comark_fracs = [theta[i] * d[i] for i in range(n)]
    if any(Fraction(c).denominator != 1 for c in comark_fracs):
        raise AssertionError(f"non-integral comark for {t}")
    comarks = tuple(int(c) for c in comark_fracs)

    exp_theta, exp_theta_s, exp_comarks = _expected_data(t)
    Ci = _invert(C)
    theta_omega = tuple(sum(C[i][j] * theta[j] for j in range(n)) for i in range(n))
    theta_s_omega = tuple(sum(C[i][j] * theta_s[j] for j in range(n)) for i in range(n))
    if theta_omega != exp_theta or theta_s_omega != exp_theta_s or comarks != exp_comarks:
        raise AssertionError(f"root-system cross-check failed for {t}")

    all_roots = tuple(sorted(pos) ) + tuple(sorted(tuple(-v for v in x) for x in pos))
    return RootSystemData(
        type=t,
        cartan=C,
        cartan_inv=Ci,
        roots=all_roots,
        positive_roots=tuple(sorted(pos)),
        theta=theta,
        theta_s=theta_s,
        comarks=comarks,
        lengths=d,
    )


def in_root_lattice(w: FiniteWeight) -> bool:
    rs = build_root_system(w.type)
    return all(x.denominator == 1 for x in rs.omega_to_alpha(w.coeffs))


def gamma_class(w: FiniteWeight) -> GammaClass:
    """Class of an integral weight modulo the root lattice."""
    if in_root_lattice(w):
        return GammaClass(w.type, 0)
    for i in sorted(j0_set(w.type)):
        if in_root_lattice(w - fundamental_weight(w.type, i)):
            return GammaClass(w.type, i)
    raise AssertionError(f"no J0 representative found for {w} (internal error)")


def gamma_group(t: LieType):
    """Invariant factors of the weight lattice modulo the root lattice.

    The factors are those of the Cartan matrix as the inclusion of the
    root lattice into the weight lattice, with trivial factors dropped.
    """
    from . import zlattice

    C = _cartan_matrix(t)
    # columns of C generate the root lattice inside Z^rank = weight lattice
    lat = zlattice.hnf([tuple(C[i][j] for i in range(t.rank)) for j in range(t.rank)], t.rank)
    q = zlattice.quotient(lat)
    return list(q.invariant_factors)


def gamma_order(t: LieType) -> int:
    order = 1
    for f in gamma_group(t):
        order *= f
    return order


def all_gamma_classes(t: LieType):
    return [GammaClass(t, 0)] + [GammaClass(t, i) for i in sorted(j0_set(t))]


ADMISSIBLE_TYPES = None  # populated lazily by admissible_types()


def admissible_types(max_rank: int = 8):
    """All admissible types up to the given rank."""
    out = []
    for fam, check in _RANK_BOUNDS.items():
        for n in range(1, max_rank + 1):
            if check(n):
                out.append(LieType(fam, n))
    return out
