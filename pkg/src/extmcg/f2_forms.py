"""Symplectic vector spaces over GF(2) and quadratic refinements.

A quadratic refinement of the intersection pairing assigns a bit q(v) to
every vector so that q(x + y) = q(x) + q(y) + <x, y> mod 2.  The Arf
invariant sorts refinements into two classes; it is computed here both
from a symplectic basis and by exhaustive majority vote, and the two
routes are kept separate on purpose so each can check the other.

Vectors are bitmask integers internally (bit i = coordinate i); the
public types expose plain 0/1 tuples.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product


class DegenerateFormError(ValueError):
    """Gram matrix is not a nondegenerate alternating form."""


class DimensionMismatchError(ValueError):
    pass


class UnsupportedSizeError(ValueError):
    pass


def _parity(x: int) -> int:
    return bin(x).count("1") & 1


def _rank_f2(rows: list[int]) -> int:
    rank = 0
    basis: list[int] = []
    for r in rows:
        for b in basis:
            r = min(r, r ^ b)
        if r:
            basis.append(r)
            basis.sort(reverse=True)
            rank += 1
    return rank


@dataclass(frozen=True)
class F2Vector:
    """Vector over GF(2), stored as a tuple of 0/1 entries."""

    bits: tuple[int, ...]

    def __post_init__(self):
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError("entries must be 0 or 1")

    @classmethod
    def from_mask(cls, mask: int, dim: int) -> "F2Vector":
        return cls(tuple((mask >> i) & 1 for i in range(dim)))

    @property
    def mask(self) -> int:
        return sum(b << i for i, b in enumerate(self.bits))

    def __add__(self, other: "F2Vector") -> "F2Vector":
        if len(self.bits) != len(other.bits):
            raise DimensionMismatchError("vector dimensions differ")
        return F2Vector(tuple(a ^ b for a, b in zip(self.bits, other.bits)))

    def __len__(self) -> int:
        return len(self.bits)

    def is_zero(self) -> bool:
        return not any(self.bits)


@dataclass(frozen=True)
class SymplecticSpaceF2:
    """Even-dimensional GF(2) space with a nondegenerate alternating Gram matrix."""

    gram: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.gram)
        if n == 0 or n % 2:
            raise DegenerateFormError(f"dimension {n} is not even and positive")
        for row in self.gram:
            if len(row) != n or any(e not in (0, 1) for e in row):
                raise DegenerateFormError("Gram matrix must be square over {0,1}")
        for i in range(n):
            if self.gram[i][i]:
                raise DegenerateFormError(f"Gram diagonal entry ({i},{i}) is nonzero")
            for j in range(n):
                if self.gram[i][j] != self.gram[j][i]:
                    raise DegenerateFormError("Gram matrix is not symmetric")
        if _rank_f2(list(self.row_masks)) != n:
            raise DegenerateFormError("Gram matrix is singular over GF(2)")

    @property
    def dim(self) -> int:
        return len(self.gram)

    @cached_property
    def row_masks(self) -> tuple[int, ...]:
        return tuple(sum(e << j for j, e in enumerate(row)) for row in self.gram)

    def pair_masks(self, u: int, v: int) -> int:
        acc = 0
        i = 0
        while u >> i:
            if (u >> i) & 1:
                acc ^= self.row_masks[i] & v
            i += 1
        return _parity(acc)

    def pair(self, u: F2Vector, v: F2Vector) -> int:
        """Intersection pairing <u, v> in {0, 1}."""
        if len(u) != self.dim or len(v) != self.dim:
            raise DimensionMismatchError("vector does not match space dimension")
        return self.pair_masks(u.mask, v.mask)


def standard_space(k: int) -> SymplecticSpaceF2:
    """Hyperbolic space of dimension 2k: Gram is 2x2 antidiagonal blocks."""
    if k < 1:
        raise UnsupportedSizeError(f"k = {k} must be positive")
    n = 2 * k
    gram = [[0] * n for _ in range(n)]
    for i in range(k):
        gram[2 * i][2 * i + 1] = 1
        gram[2 * i + 1][2 * i] = 1
    return SymplecticSpaceF2(tuple(tuple(row) for row in gram))


@dataclass(frozen=True)
class QuadraticRefinement:
    """Quadratic refinement of a space's pairing, determined by its basis values."""

    space: SymplecticSpaceF2
    basis_values: tuple[int, ...]

    def __post_init__(self):
        if len(self.basis_values) != self.space.dim:
            raise DimensionMismatchError("basis_values length != dimension")
        if any(b not in (0, 1) for b in self.basis_values):
            raise ValueError("basis values must be 0 or 1")

    @cached_property
    def value_table(self) -> tuple[int, ...]:
        # q(v + e_i) = q(v) + q(e_i) + <v, e_i>, filled in mask order.
        n = self.space.dim
        rows = self.space.row_masks
        table = [0] * (1 << n)
        for m in range(1, 1 << n):
            i = (m & -m).bit_length() - 1
            prev = m ^ (1 << i)
            table[m] = table[prev] ^ self.basis_values[i] ^ (bin(rows[i] & prev).count("1") & 1)
        return tuple(table)

    def eval_mask(self, mask: int) -> int:
        return self.value_table[mask]


def eval_q(q: QuadraticRefinement, v: F2Vector) -> int:
    """Value of the refinement on a vector."""
    if len(v) != q.space.dim:
        raise DimensionMismatchError("vector does not match refinement dimension")
    return q.eval_mask(v.mask)


def symplectic_basis(space: SymplecticSpaceF2) -> list[tuple[F2Vector, F2Vector]]:
    """Greedy Gram-Schmidt: split the space into hyperbolic pairs (a_i, b_i).

    Returns pairs with <a_i, b_j> = delta_ij and all other pairings zero.
    """
    n = space.dim
    pool = [1 << i for i in range(n)]
    pairs: list[tuple[int, int]] = []
    while pool:
        a = pool[0]
        b = next((v for v in pool[1:] if space.pair_masks(a, v)), None)
        if b is None:
            raise DegenerateFormError("vector pairs trivially with the whole space")
        pairs.append((a, b))
        reduced = []
        for v in pool:
            if v in (a, b):
                continue
            w = v ^ (a if space.pair_masks(v, b) else 0) ^ (b if space.pair_masks(v, a) else 0)
            reduced.append(w)
        # keep an independent spanning subset of the projected vectors
        pool = []
        basis: list[int] = []
        for w in reduced:
            r = w
            for bb in basis:
                r = min(r, r ^ bb)
            if r:
                basis.append(r)
                basis.sort(reverse=True)
                pool.append(w)
    return [(F2Vector.from_mask(a, n), F2Vector.from_mask(b, n)) for a, b in pairs]


def arf(q: QuadraticRefinement) -> int:
    """Arf invariant: sum of q(a_i) q(b_i) over a symplectic basis."""
    total = 0
    for a, b in symplectic_basis(q.space):
        total ^= q.eval_mask(a.mask) & q.eval_mask(b.mask)
    return total


def arf_by_majority(q: QuadraticRefinement) -> int:
    """Democratic definition: the value q takes on a strict majority of vectors.

    Independent of any basis choice; used to cross-check arf().
    """
    n = q.space.dim
    if n > 16:
        raise UnsupportedSizeError("majority count is exhaustive; dimension too large")
    ones = sum(q.value_table)
    half = 1 << (n - 1)
    if ones == half:
        raise DegenerateFormError("no majority value; pairing must be degenerate")
    return 1 if ones > half else 0


def all_refinements(space: SymplecticSpaceF2) -> list[QuadraticRefinement]:
    return [QuadraticRefinement(space, bits) for bits in product((0, 1), repeat=space.dim)]


@dataclass(frozen=True)
class SpElement:
    """Element of the symplectic group of the standard space, as a 0/1 matrix.

    Columns are images of the standard basis vectors; the matrix acts on
    column vectors from the left.
    """

    matrix: tuple[tuple[int, ...], ...]

    @cached_property
    def row_masks(self) -> tuple[int, ...]:
        return tuple(sum(e << j for j, e in enumerate(row)) for row in self.matrix)

    @property
    def dim(self) -> int:
        return len(self.matrix)

    def apply_mask(self, v: int) -> int:
        out = 0
        for i, row in enumerate(self.row_masks):
            out |= (bin(row & v).count("1") & 1) << i
        return out

    def column_mask(self, j: int) -> int:
        return sum(((row >> j) & 1) << i for i, row in enumerate(self.row_masks))

    def __mul__(self, other: "SpElement") -> "SpElement":
        if self.dim != other.dim:
            raise DimensionMismatchError("matrix dimensions differ")
        # row i of the product is the XOR of other's rows selected by our row i
        rows = []
        for r in self.row_masks:
            acc = 0
            k = 0
            while r >> k:
                if (r >> k) & 1:
                    acc ^= other.row_masks[k]
                k += 1
            rows.append(acc)
        n = self.dim
        return SpElement(tuple(tuple((m >> j) & 1 for j in range(n)) for m in rows))


def _matrix_from_columns(cols: list[int], n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple((cols[j] >> i) & 1 for j in range(n)) for i in range(n))


def is_symplectic(mat: tuple[tuple[int, ...], ...], space: SymplecticSpaceF2) -> bool:
    """Check S^T J S = J entrywise over GF(2)."""
    n = space.dim
    if len(mat) != n or any(len(r) != n for r in mat):
        return False
    cols = [sum((mat[i][j] & 1) << i for i in range(n)) for j in range(n)]
    for a in range(n):
        for b in range(n):
            if space.pair_masks(cols[a], cols[b]) != space.gram[a][b]:
                return False
    return True


def enumerate_sp(k: int) -> list[SpElement]:
    """All elements of Sp(2k, 2) for the standard space, sorted, each exactly once.

    Elements are enumerated by extending symplectic bases: pick the image
    of a_1 (any nonzero vector), the image of b_1 (pairing 1 with it),
    then recurse inside the simultaneous annihilator.  Orders: 6 at k=1,
    720 at k=2, 1451520 at k=3.
    """
    if not 1 <= k <= 3:
        raise UnsupportedSizeError(f"k = {k} outside supported range 1..3")
    space = standard_space(k)
    n = 2 * k
    size = 1 << n
    # bitset over vector indices: bit v of ortho[u] says <u, v> = 0
    ortho = [0] * size
    for u in range(size):
        for v in range(size):
            if not space.pair_masks(u, v):
                ortho[u] |= 1 << v
    full = (1 << size) - 1

    out: list[SpElement] = []
    cols: list[int] = []

    def iter_bits(bitset: int):
        while bitset:
            low = bitset & -bitset
            yield low.bit_length() - 1
            bitset ^= low

    def extend(candidates: int):
        if len(cols) == n:
            out.append(SpElement(_matrix_from_columns(cols, n)))
            return
        for a in iter_bits(candidates & ~1):  # nonzero vectors only
            partners = candidates & ~ortho[a]
            rest_a = candidates & ortho[a]
            cols.append(a)
            for b in iter_bits(partners):
                cols.append(b)
                extend(rest_a & ortho[b])
                cols.pop()
            cols.pop()

    extend(full)
    out.sort(key=lambda s: s.matrix)
    return out


def sp_order(k: int) -> int:
    n = 1
    for i in range(1, k + 1):
        n *= ((1 << (2 * i)) - 1) * (1 << (2 * i - 1))
    return n


def transport(q: QuadraticRefinement, s: SpElement) -> QuadraticRefinement:
    """Pull back a refinement along a symplectic matrix: q'(v) = q(S v)."""
    if s.dim != q.space.dim:
        raise DimensionMismatchError("matrix does not match refinement dimension")
    if not is_symplectic(s.matrix, q.space):
        raise ValueError("matrix does not preserve the pairing")
    vals = tuple(q.eval_mask(s.column_mask(j)) for j in range(s.dim))
    return QuadraticRefinement(q.space, vals)


def stabilizer(q: QuadraticRefinement) -> list[SpElement]:
    """All symplectic matrices with q(S v) = q(v) for every v.  Dimension <= 6."""
    if q.space.dim > 6:
        raise UnsupportedSizeError("stabilizer enumeration capped at dimension 6")
    if q.space.gram != standard_space(q.space.dim // 2).gram:
        raise ValueError("stabilizer enumeration expects the standard space")
    return [s for s in enumerate_sp(q.space.dim // 2)
            if transport(q, s).basis_values == q.basis_values]


def orbit(q: QuadraticRefinement) -> list[QuadraticRefinement]:
    """Distinct transports of q under the full symplectic group, sorted."""
    if q.space.dim > 6:
        raise UnsupportedSizeError("orbit enumeration capped at dimension 6")
    if q.space.gram != standard_space(q.space.dim // 2).gram:
        raise ValueError("orbit enumeration expects the standard space")
    seen = {transport(q, s).basis_values for s in enumerate_sp(q.space.dim // 2)}
    return [QuadraticRefinement(q.space, bv) for bv in sorted(seen)]
