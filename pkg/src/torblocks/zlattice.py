"""Exact integer-lattice engine.

Sublattices of Z^d are kept in a canonical row Hermite normal form:
pivots positive, entries above a pivot reduced into [0, pivot), rows
ordered by pivot column.  Lattice equality is therefore matrix equality.
Quotients come from the Smith normal form with tracked column
operations, which also yields explicit coset representatives when the
index is finite.

All arithmetic is arbitrary-precision integer; the intended scale is
d <= 4 or so, and clarity wins over speed.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product


class LatticeError(ValueError):
    pass


def _hnf_rows(rows, dim):
    """Row HNF of a list of integer vectors; returns list of basis rows."""
    pivot_rows = {}  # leading column -> row
    for row in rows:
        r = list(row)
        while True:
            piv = next((j for j, v in enumerate(r) if v != 0), None)
            if piv is None:
                break
            if piv not in pivot_rows:
                pivot_rows[piv] = r
                break
            prow = pivot_rows[piv]
            # Euclid at the shared leading column; both rows vanish left of it
            a, b = prow[piv], r[piv]
            while b != 0:
                q = a // b
                prow, r = r, [x - q * y for x, y in zip(prow, r)]
                a, b = prow[piv], r[piv]
            pivot_rows[piv] = prow
            # r now vanishes at piv; continue with its new leading column
    # normalise: positive pivots, reduce above
    out = []
    for pcol in sorted(pivot_rows):
        row = pivot_rows[pcol]
        if row[pcol] < 0:
            row = [-v for v in row]
        out.append((pcol, row))
    # left-to-right: row i has zeros left of its pivot, so reducing against
    # pivot i never disturbs columns already reduced
    for i in range(len(out)):
        pcol, row = out[i]
        for j in range(i):
            above = out[j][1]
            if not 0 <= above[pcol] < row[pcol]:
                q = above[pcol] // row[pcol]
                out[j] = (out[j][0], [a - q * b for a, b in zip(above, row)])
    return [tuple(row) for _, row in out]


@dataclass(frozen=True)
class ZLattice:
    """Sublattice of Z^dim with canonical HNF basis rows."""

    dim: int
    basis: tuple  # tuple of basis row tuples, in HNF

    @property
    def rank(self) -> int:
        return len(self.basis)

    def is_full_rank(self) -> bool:
        return self.rank == self.dim

    def index(self):
        """Index in Z^dim: product of pivots, or None when infinite."""
        if not self.is_full_rank():
            return None
        idx = 1
        for i, row in enumerate(self.basis):
            piv = next(v for v in row if v != 0)
            idx *= piv
        return idx

    def __contains__(self, v):
        return member(self, v)


def hnf(rows, dim: int) -> ZLattice:
    """Canonical HNF lattice generated by the given integer vectors."""
    for r in rows:
        if len(r) != dim:
            raise LatticeError(f"generator length {len(r)} != ambient dim {dim}")
    return ZLattice(dim, tuple(_hnf_rows(rows, dim)))


def full_lattice(dim: int) -> ZLattice:
    return hnf([tuple(1 if j == i else 0 for j in range(dim)) for i in range(dim)], dim)


def zero_lattice(dim: int) -> ZLattice:
    return ZLattice(dim, ())


def member(L: ZLattice, v) -> bool:
    """Integer-combination membership by back-substitution through HNF."""
    if len(v) != L.dim:
        raise LatticeError(f"vector length {len(v)} != ambient dim {L.dim}")
    r = list(v)
    for row in L.basis:
        piv = next(j for j, x in enumerate(row) if x != 0)
        if r[piv] != 0:
            if r[piv] % row[piv] != 0:
                return False
            q = r[piv] // row[piv]
            r = [a - q * b for a, b in zip(r, row)]
    return not any(r)


def kernel(matrix) -> ZLattice:
    """{v in Z^d : M v = 0} for an integer m x d matrix."""
    if not matrix:
        raise LatticeError("kernel of an empty matrix is ambiguous; pass a zero row")
    d = len(matrix[0])
    m = len(matrix)
    for row in matrix:
        if len(row) != d:
            raise LatticeError("ragged matrix")
    # HNF of [M^T | I_d]: rows of the echelon basis whose M^T-part vanishes
    # generate exactly the kernel (echelon rows with pivot past column m
    # span the sublattice supported on the identity block).
    aug = [tuple(matrix[r][j] for r in range(m)) + tuple(int(i == j) for i in range(d))
           for j in range(d)]
    echelon = _hnf_rows(aug, m + d)
    ker_rows = [row[m:] for row in echelon if not any(row[:m])]
    L = hnf(ker_rows, d)
    for krow in L.basis:
        for mrow in matrix:
            if sum(a * b for a, b in zip(mrow, krow)) != 0:
                raise AssertionError("kernel verification failed (internal error)")
    return L


def mod2_kernel_lattice(rows, dim: int) -> ZLattice:
    """{v in Z^dim : R v = 0 mod 2} for 0/1 rows R."""
    if not rows:
        return full_lattice(dim)
    r = len(rows)
    stacked = [list(rows[i]) + [2 if j == i else 0 for j in range(r)] for i in range(r)]
    K = kernel(stacked)
    return hnf([row[:dim] for row in K.basis], dim)


def _snf_with_colops(matrix):
    """Diagonalise via row/column ops; track column ops (V and its inverse)."""
    A = [list(r) for r in matrix]
    nrows = len(A)
    ncols = len(A[0]) if A else 0
    V = [[int(i == j) for j in range(ncols)] for i in range(ncols)]
    Vinv = [[int(i == j) for j in range(ncols)] for i in range(ncols)]

    def col_swap(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]
        Vinv[i], Vinv[j] = Vinv[j], Vinv[i]

    def col_add(dst, src, q):
        # column dst += q * column src
        for row in A:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]
        Vinv[src] = [a - q * b for a, b in zip(Vinv[src], Vinv[dst])]

    def col_neg(i):
        for row in A:
            row[i] = -row[i]
        for row in V:
            row[i] = -row[i]
        Vinv[i] = [-a for a in Vinv[i]]

    def row_swap(i, j):
        A[i], A[j] = A[j], A[i]

    def row_add(dst, src, q):
        A[dst] = [a + q * b for a, b in zip(A[dst], A[src])]

    t = 0
    while t < min(nrows, ncols):
        # find a nonzero pivot in the remaining block
        pos = next(((i, j) for i in range(t, nrows) for j in range(t, ncols)
                    if A[i][j] != 0), None)
        if pos is None:
            break
        row_swap(t, pos[0])
        col_swap(t, pos[1])
        while True:
            # clear column t below, then row t to the right
            done = True
            for i in range(t + 1, nrows):
                if A[i][t] != 0:
                    q = A[i][t] // A[t][t]
                    row_add(i, t, -q)
                    if A[i][t] != 0:
                        row_swap(i, t)
                        done = False
            for j in range(t + 1, ncols):
                if A[t][j] != 0:
                    q = A[t][j] // A[t][t]
                    col_add(j, t, -q)
                    if A[t][j] != 0:
                        col_swap(j, t)
                        done = False
            if done:
                break
        if A[t][t] < 0:
            col_neg(t)
        t += 1
    # enforce divisibility chain
    changed = True
    while changed:
        changed = False
        for i in range(t - 1):
            a, b = A[i][i], A[i + 1][i + 1]
            if b % a != 0:
                changed = True
                col_add(i, i + 1, 1)
                # re-clear the 2x2 block
                while True:
                    if A[i + 1][i] != 0:
                        q = A[i + 1][i] // A[i][i]
                        row_add(i + 1, i, -q)
                        if A[i + 1][i] != 0:
                            A[i], A[i + 1] = A[i + 1], A[i]
                            continue
                    if A[i][i + 1] != 0:
                        q = A[i][i + 1] // A[i][i]
                        col_add(i + 1, i, -q)
                        if A[i][i + 1] != 0:
                            col_swap(i + 1, i)
                            continue
                    break
                if A[i][i] < 0:
                    col_neg(i)
                if A[i + 1][i + 1] < 0:
                    col_neg(i + 1)
    diag = [A[i][i] for i in range(min(nrows, ncols))]
    return diag, V, Vinv


@dataclass(frozen=True)
class QuotientData:
    """Z^dim modulo a lattice: invariant factors and coset structure."""

    dim: int
    invariant_factors: tuple  # nontrivial factors only (1s dropped)
    index: object  # positive int, or None for infinite index
    _factors_full: tuple = ()
    _vinv: tuple = ()
    _v: tuple = ()

    def coset_reps(self):
        """Explicit representatives in mixed-radix order over the SNF factors."""
        if self.index is None:
            raise LatticeError("coset enumeration requested for infinite index")
        reps = []
        ranges = [range(f) for f in self._factors_full]
        for digits in product(*ranges):
            reps.append(self._from_snf_coords(digits))
        return reps

    def coset_rep(self, v):
        """Canonical representative of v + L."""
        if self.index is None:
            raise LatticeError("coset reduction requested for infinite index")
        if len(v) != self.dim:
            raise LatticeError("dimension mismatch")
        coords = [sum(v[i] * self._v[i][j] for i in range(self.dim)) % f
                  for j, f in enumerate(self._factors_full)]
        return self._from_snf_coords(coords)

    def _from_snf_coords(self, digits):
        return tuple(
            sum(digits[i] * self._vinv[i][j] for i in range(self.dim))
            for j in range(self.dim)
        )


def quotient(L: ZLattice) -> QuotientData:
    """Smith-normal-form quotient data of Z^dim / L."""
    dim = L.dim
    if dim == 0:
        return QuotientData(0, (), 1, (), (), ())
    if L.rank == 0:
        return QuotientData(dim, (), None)
    diag, V, Vinv = _snf_with_colops([list(r) for r in L.basis])
    factors = [d for d in diag if d != 0]
    if L.rank < dim:
        inv = tuple(f for f in factors if f > 1)
        return QuotientData(dim, inv, None)
    index = 1
    for f in factors:
        index *= f
    return QuotientData(
        dim,
        tuple(f for f in factors if f > 1),
        index,
        tuple(factors),
        tuple(tuple(r) for r in Vinv),
        tuple(tuple(r) for r in V),
    )
