"""Exact linear algebra over GF(q): reduced echelon forms and subspaces of K^d.

Vectors are tuples of field element codes; matrices are tuples of row
vectors.  Over GF(2) rows are packed into int bitsets for elimination.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .field import FieldGF

Vector = tuple[int, ...]
Matrix = tuple[Vector, ...]

SUBSPACE_CEILING = 10**6


class LinalgError(ValueError):
    pass


def _rref_gf2(rows: Sequence[Vector], ncols: int) -> tuple[list[Vector], list[int]]:
    # bit (ncols - 1 - j) holds column j, so larger ints have earlier pivots
    packed = [sum(1 << (ncols - 1 - j) for j, x in enumerate(r) if x) for r in rows]
    basis: list[int] = []
    for v in packed:
        for b in basis:
            if v ^ b < v:
                v ^= b
        if v:
            for i, b in enumerate(basis):
                if b ^ v < b:
                    basis[i] = b ^ v
            basis.append(v)
    # full reduction: each pivot bit cleared from every other row
    basis.sort(reverse=True)
    for i in range(len(basis)):
        top = basis[i].bit_length() - 1
        for j in range(len(basis)):
            if j != i and basis[j] >> top & 1:
                basis[j] ^= basis[i]
    basis.sort(reverse=True)
    out = [tuple((b >> (ncols - 1 - j)) & 1 for j in range(ncols)) for b in basis]
    pivots = [ncols - b.bit_length() for b in basis]
    return out, pivots


def _rref_general(F: FieldGF, rows: Sequence[Vector], ncols: int) -> tuple[list[Vector], list[int]]:
    A, M, inv, neg = F.add, F.mul, F.inv, F.neg
    work = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(work)) if work[i][c]), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        s = inv[work[r][c]]
        work[r] = [M[s][x] for x in work[r]]
        prow = work[r]
        for i in range(len(work)):
            if i != r and work[i][c]:
                f = neg[work[i][c]]
                row = work[i]
                work[i] = [A[x][M[f][y]] for x, y in zip(row, prow)]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return [tuple(row) for row in work[:r]], pivots


def _rref_rows(F: FieldGF, rows: Sequence[Vector], ncols: int) -> tuple[list[Vector], list[int]]:
    if F.q == 2:
        return _rref_gf2(rows, ncols)
    return _rref_general(F, rows, ncols)


def rref(F: FieldGF, matrix: Sequence[Vector], ncols: int | None = None) -> tuple[Matrix, int]:
    """Reduced row-echelon form (same shape, zero rows last) and rank."""
    matrix = [tuple(r) for r in matrix]
    if ncols is None:
        ncols = len(matrix[0]) if matrix else 0
    rows, _ = _rref_rows(F, matrix, ncols)
    rank = len(rows)
    padded = rows + [tuple([0] * ncols)] * (len(matrix) - rank)
    return tuple(padded), rank


@dataclass(frozen=True)
class Subspace:
    """Row space in canonical reduced-echelon form; equality is basis equality."""

    field: FieldGF
    d: int
    basis: Matrix

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(j for j, x in enumerate(r) if x) for r in self.basis)

    def contains_vector(self, v: Vector) -> bool:
        return span(self.field, list(self.basis) + [tuple(v)], self.d).dim == self.dim

    def contains(self, other: "Subspace") -> bool:
        return sum_space(self, other).dim == self.dim

    def is_zero(self) -> bool:
        return not self.basis

    def vectors(self) -> Iterator[Vector]:
        F = self.field
        for coeffs in itertools.product(range(F.q), repeat=self.dim):
            yield combine(F, coeffs, self.basis, self.d)

    def to_list(self) -> list[list[int]]:
        return [list(r) for r in self.basis]

    def __repr__(self):
        return f"Subspace(d={self.d}, dim={self.dim}, basis={[list(r) for r in self.basis]})"


def combine(F: FieldGF, coeffs: Sequence[int], rows: Sequence[Vector], d: int) -> Vector:
    out = [0] * d
    A, M = F.add, F.mul
    for c, r in zip(coeffs, rows):
        if c:
            out = [A[x][M[c][y]] for x, y in zip(out, r)]
    return tuple(out)


def span(F: FieldGF, rows: Sequence[Vector], d: int) -> Subspace:
    for r in rows:
        if len(r) != d:
            raise LinalgError(f"vector of length {len(r)} in ambient dimension {d}")
    basis, _ = _rref_rows(F, [tuple(r) for r in rows], d)
    return Subspace(F, d, tuple(basis))


def zero_space(F: FieldGF, d: int) -> Subspace:
    return Subspace(F, d, ())


def full_space(F: FieldGF, d: int) -> Subspace:
    return span(F, identity(d), d)


def _same_ambient(W1: Subspace, W2: Subspace):
    if W1.d != W2.d or W1.field != W2.field:
        raise LinalgError(f"ambient mismatch: {W1.d} vs {W2.d}")


def sum_space(W1: Subspace, W2: Subspace) -> Subspace:
    _same_ambient(W1, W2)
    return span(W1.field, W1.basis + W2.basis, W1.d)


def intersection(W1: Subspace, W2: Subspace) -> Subspace:
    """Kernel of the stacked basis: x B1 + y B2 = 0 gives x B1 in W1 & W2."""
    _same_ambient(W1, W2)
    F, d = W1.field, W1.d
    r1, r2 = W1.dim, W2.dim
    if r1 == 0 or r2 == 0:
        return zero_space(F, d)
    k = r1 + r2
    stacked = [tuple(row) + tuple(1 if i == j else 0 for j in range(k))
               for i, row in enumerate(W1.basis + W2.basis)]
    red, pivots = _rref_rows(F, stacked, d + k)
    kernel = [row[d:] for row, p in zip(red, pivots) if p >= d]
    vecs = [combine(F, kv[:r1], W1.basis, d) for kv in kernel]
    return span(F, vecs, d)


def sum_and_intersection(W1: Subspace, W2: Subspace) -> tuple[Subspace, Subspace]:
    s, i = sum_space(W1, W2), intersection(W1, W2)
    if W1.dim + W2.dim != s.dim + i.dim:
        raise LinalgError("dimension formula violated")
    return s, i


def meets(W1: Subspace, W2: Subspace) -> bool:
    """Nonzero intersection."""
    return sum_space(W1, W2).dim < W1.dim + W2.dim


def is_complementary(W1: Subspace, W2: Subspace) -> bool:
    _same_ambient(W1, W2)
    return W1.dim + W2.dim == W1.d and sum_space(W1, W2).dim == W1.d


def in_G(W: Subspace) -> bool:
    """Half-dimensional: for finite dimension, isomorphic to a complement."""
    if W.d % 2:
        raise LinalgError(f"odd ambient dimension {W.d}")
    return W.dim == W.d // 2


# -- matrices ----------------------------------------------------------------

def identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def zeros(r: int, c: int) -> Matrix:
    return tuple(tuple([0] * c) for _ in range(r))


def vec_mat(F: FieldGF, v: Vector, M: Matrix) -> Vector:
    cols = len(M[0]) if M else 0
    return combine(F, v, M, cols)


def mat_mul(F: FieldGF, X: Matrix, Y: Matrix) -> Matrix:
    return tuple(vec_mat(F, r, Y) for r in X)


def mat_add(F: FieldGF, X: Matrix, Y: Matrix) -> Matrix:
    A = F.add
    return tuple(tuple(A[x][y] for x, y in zip(rx, ry)) for rx, ry in zip(X, Y))


def hstack(*blocks: Matrix) -> Matrix:
    return tuple(tuple(itertools.chain.from_iterable(rows)) for rows in zip(*blocks))


def block2(A_: Matrix, B: Matrix, C: Matrix, D: Matrix) -> Matrix:
    return hstack(A_, B) + hstack(C, D)


def mat_rank(F: FieldGF, M: Matrix) -> int:
    if not M:
        return 0
    return rref(F, M)[1]


def is_invertible_matrix(F: FieldGF, M: Matrix) -> bool:
    return len(M) == (len(M[0]) if M else 0) and mat_rank(F, M) == len(M)


def mat_inverse(F: FieldGF, M: Matrix) -> Matrix:
    n = len(M)
    aug = [tuple(r) + identity(n)[i] for i, r in enumerate(M)]
    red, pivots = _rref_rows(F, aug, 2 * n)
    if pivots[:n] != list(range(n)) or len(red) < n:
        raise LinalgError("singular matrix")
    return tuple(tuple(r[n:]) for r in red[:n])


def image(W: Subspace, M: Matrix) -> Subspace:
    """Row action W . M."""
    cols = len(M[0]) if M else 0
    return span(W.field, [vec_mat(W.field, r, M) for r in W.basis], cols)


# -- enumeration -------------------------------------------------------------

def gaussian_binomial(d: int, r: int, q: int) -> int:
    if r < 0 or r > d:
        return 0
    num, den = 1, 1
    for i in range(r):
        num *= q ** (d - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def enumerate_subspaces(F: FieldGF, d: int, r: int, ceiling: int = SUBSPACE_CEILING) -> Iterator[Subspace]:
    """Every r-dimensional subspace of K^d exactly once, by echelon pattern."""
    count = gaussian_binomial(d, r, F.q)
    if count > ceiling:
        raise LinalgError(f"{count} subspaces exceed the ceiling {ceiling}")
    for pivots in itertools.combinations(range(d), r):
        pset = set(pivots)
        free = [(i, j) for i, p in enumerate(pivots) for j in range(p + 1, d) if j not in pset]
        for values in itertools.product(range(F.q), repeat=len(free)):
            rows = [[0] * d for _ in range(r)]
            for i, p in enumerate(pivots):
                rows[i][p] = 1
            for (i, j), v in zip(free, values):
                rows[i][j] = v
            yield Subspace(F, d, tuple(tuple(row) for row in rows))


def points_of(W: Subspace) -> list[Subspace]:
    """The 1-dimensional subspaces of W."""
    return [span(W.field, [v], W.d) for v in _normalized_vectors(W)]


def _normalized_vectors(W: Subspace) -> list[Vector]:
    out = []
    for v in W.vectors():
        lead = next((x for x in v if x), None)
        if lead == 1:
            out.append(v)
    return out


@dataclass(frozen=True)
class QuotientMap:
    """Coordinates on K^d / W: ``coords`` (d x (d - dim W)) has kernel W;
    ``section`` ((d - dim W) x d) is a right inverse."""

    W: Subspace
    coords: Matrix
    section: Matrix

    def project(self, V: Subspace) -> Subspace:
        return span(V.field, [vec_mat(V.field, r, self.coords) for r in V.basis] or [],
                    len(self.section))

    def lift(self, V: Subspace) -> Subspace:
        """Preimage: the subspace of K^d containing W that maps onto V."""
        F = self.W.field
        rows = [vec_mat(F, r, self.section) for r in V.basis]
        return span(F, rows + list(self.W.basis), self.W.d)


def quotient_space(F: FieldGF, d: int, W: Subspace) -> QuotientMap:
    """Coordinates on the non-pivot columns after reducing by W's echelon basis."""
    if W.d != d:
        raise LinalgError("ambient mismatch")
    piv = W.pivots
    free = [j for j in range(d) if j not in piv]
    k = len(free)
    coords = []
    for i in range(d):
        e = [0] * d
        e[i] = 1
        # reduce e_i by W: subtract e_i[p] * w for each pivot p
        for p, w in zip(piv, W.basis):
            if e[p]:
                f = F.neg[e[p]]
                e = [F.add[x][F.mul[f][y]] for x, y in zip(e, w)]
        coords.append(tuple(e[j] for j in free))
    section = tuple(tuple(1 if c == j else 0 for c in range(d)) for j in free)
    return QuotientMap(W, tuple(coords) if k else tuple(() for _ in range(d)), section)
