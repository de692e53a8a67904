"""Signed permutation matrices for rotations of a sphere around an
embedded product of spheres.

Coordinates 0..p+q+2 split as x0 | a-block (1..p+1) | b-block (p+2..p+q+2);
a point of the product is (a, b) with |a| = |b| = 1.  Matrices act on row
vectors by right multiplication, so image[i] = (column, sign) says
coordinate i is sent to the given column with the given sign.  R denotes
a single-coordinate reflection, so e.g. (a, b) -> (R(b), a) means the
blocks swap and the incoming first coordinate flips sign.

The degree of the sphere map each block performs equals the determinant
of its signed permutation block, which is what drives the induced action
on middle-dimensional homology.
"""

from __future__ import annotations

from dataclasses import dataclass

from .sl2z import UniModMat2


class InvalidMatrixError(ValueError):
    pass


class NotBlockStructuredError(ValueError):
    """Matrix does not map the coordinate blocks to coordinate blocks."""


class BlockSizeError(ValueError):
    pass


@dataclass(frozen=True)
class SignedPermMatrix:
    """Orthogonal matrix with one +-1 entry per row and column."""

    size: int
    image: tuple[tuple[int, int], ...]  # row -> (column, sign)

    def __post_init__(self):
        if self.size < 1 or len(self.image) != self.size:
            raise InvalidMatrixError("image must list one (column, sign) per row")
        cols = set()
        for col, sign in self.image:
            if not 0 <= col < self.size or sign not in (1, -1):
                raise InvalidMatrixError(f"bad image entry ({col}, {sign})")
            cols.add(col)
        if len(cols) != self.size:
            raise InvalidMatrixError("two rows hit the same column")

    def __mul__(self, other: "SignedPermMatrix") -> "SignedPermMatrix":
        """Composite acting as self first, then other (row-vector convention)."""
        if self.size != other.size:
            raise InvalidMatrixError("sizes differ")
        out = []
        for col, sign in self.image:
            col2, sign2 = other.image[col]
            out.append((col2, sign * sign2))
        return SignedPermMatrix(self.size, tuple(out))

    def __pow__(self, n: int) -> "SignedPermMatrix":
        if n < 0:
            return self.inverse() ** (-n)
        acc = identity(self.size)
        for _ in range(n):
            acc = acc * self
        return acc

    def inverse(self) -> "SignedPermMatrix":
        out = [(0, 0)] * self.size
        for row, (col, sign) in enumerate(self.image):
            out[col] = (row, sign)
        return SignedPermMatrix(self.size, tuple(out))

    def is_identity(self) -> bool:
        return all(col == row and sign == 1 for row, (col, sign) in enumerate(self.image))

    def order(self, cap: int = 16) -> int:
        acc = self
        for n in range(1, cap + 1):
            if acc.is_identity():
                return n
            acc = acc * self
        raise InvalidMatrixError(f"order exceeds {cap}")

    def determinant(self) -> int:
        sign = 1
        for _, s in self.image:
            sign *= s
        seen = [False] * self.size
        for start in range(self.size):
            if seen[start]:
                continue
            length = 0
            j = start
            while not seen[j]:
                seen[j] = True
                j = self.image[j][0]
                length += 1
            if length % 2 == 0:
                sign = -sign
        return sign

    def to_dense(self) -> list[list[int]]:
        rows = [[0] * self.size for _ in range(self.size)]
        for i, (col, sign) in enumerate(self.image):
            rows[i][col] = sign
        return rows

    def to_json(self) -> dict:
        return {"size": self.size,
                "entries": [[i, col, sign] for i, (col, sign) in enumerate(self.image)]}

    @classmethod
    def from_json(cls, data: dict) -> "SignedPermMatrix":
        try:
            size = data["size"]
            entries = data["entries"]
        except (KeyError, TypeError):
            raise InvalidMatrixError("expected {\"size\": n, \"entries\": [[row, col, sign], ...]}")
        if not isinstance(size, int) or not isinstance(entries, list) or len(entries) != size:
            raise InvalidMatrixError("entries must list each row exactly once")
        image = [None] * size
        for ent in entries:
            if not isinstance(ent, list) or len(ent) != 3:
                raise InvalidMatrixError(f"bad entry {ent!r}")
            row, col, sign = ent
            if not isinstance(row, int) or not 0 <= row < size or image[row] is not None:
                raise InvalidMatrixError(f"bad or repeated row in entry {ent!r}")
            image[row] = (col, sign)
        return cls(size, tuple(image))


def identity(size: int) -> SignedPermMatrix:
    return SignedPermMatrix(size, tuple((i, 1) for i in range(size)))


def build_omega(p: int) -> SignedPermMatrix:
    """Order-4 rotation of the (2p+2)-sphere restricting to (a, b) -> (R(b), a).

    Size 2p+3: x0 scales by (-1)^p, the a-block moves to the b-columns
    with sign +1, and the b-block moves to the a-columns with its first
    coordinate negated.  Determinant +1 for every p.
    """
    if p < 1:
        raise BlockSizeError(f"p = {p} must be at least 1")
    size = 2 * p + 3
    image = [(0, (-1) ** p)]
    for i in range(1, p + 2):
        image.append((i + p + 1, 1))
    for j in range(1, p + 2):
        image.append((j, -1 if j == 1 else 1))
    return SignedPermMatrix(size, tuple(image))


def build_omega_hat(p: int) -> SignedPermMatrix:
    """Involution of the (2p+2)-sphere restricting to the factor swap (a, b) -> (b, a).

    Needs even p: x0 is negated and the blocks swap with all signs +1,
    so the determinant is (-1)^p and only even p keeps it +1.
    """
    if p < 2 or p % 2:
        raise BlockSizeError(f"p = {p} must be even and at least 2")
    size = 2 * p + 3
    image = [(0, -1)]
    for i in range(1, p + 2):
        image.append((i + p + 1, 1))
    for j in range(1, p + 2):
        image.append((j, 1))
    return SignedPermMatrix(size, tuple(image))


def build_omega_prime(p: int, q: int) -> SignedPermMatrix:
    """Diagonal involution of the (p+q+2)-sphere restricting to (a, b) -> (R(a), R(b)).

    Negates the first coordinate of each block; determinant +1.  Allows
    p = q (both blocks reflected at once) as well as p < q.
    """
    if p < 2 or q < p:
        raise BlockSizeError(f"need 2 <= p <= q, got p = {p}, q = {q}")
    size = p + q + 3
    image = [(i, -1 if i in (1, p + 2) else 1) for i in range(size)]
    return SignedPermMatrix(size, tuple(image))


@dataclass(frozen=True)
class ProductMapDescriptor:
    """How a block-structured matrix moves the two sphere factors.

    first_block_det / second_block_det are the determinants of the signed
    permutation blocks feeding the first / second output factor; these are
    the degrees of the corresponding sphere maps.
    """

    block_sizes: tuple[int, int]
    swaps_factors: bool
    first_block_det: int
    second_block_det: int


def restrict_to_product(m: SignedPermMatrix, p: int, q: int) -> ProductMapDescriptor:
    """Split a signed permutation of the ambient coordinates into block data.

    Coordinate 0 must map to itself (up to sign) and each block must map
    entirely onto one block; anything else is not a symmetry of the
    embedded product and raises NotBlockStructuredError.
    """
    if p < 1 or q < 1:
        raise BlockSizeError("block dimensions must be positive")
    if m.size != p + q + 3:
        raise BlockSizeError(f"matrix size {m.size} != p + q + 3 = {p + q + 3}")
    a_rows = range(1, p + 2)
    b_rows = range(p + 2, p + q + 3)
    a_cols, b_cols = set(a_rows), set(b_rows)
    if m.image[0][0] != 0:
        raise NotBlockStructuredError("coordinate 0 does not map to itself")

    def block_target(rows) -> str:
        targets = {("a" if m.image[i][0] in a_cols else
                    "b" if m.image[i][0] in b_cols else "x0") for i in rows}
        if len(targets) != 1 or "x0" in targets:
            raise NotBlockStructuredError("a block maps across block boundaries")
        return targets.pop()

    ta, tb = block_target(a_rows), block_target(b_rows)
    if ta == tb:
        raise NotBlockStructuredError("both blocks map to the same block")
    swaps = ta == "b"

    def block_det(rows, col_base: int) -> int:
        sub = [(m.image[i][0] - col_base, m.image[i][1]) for i in rows]
        return SignedPermMatrix(len(sub), tuple(sub)).determinant()

    if swaps:
        # columns of the first factor are fed by the b-rows and vice versa
        first = block_det(b_rows, 1)
        second = block_det(a_rows, p + 2)
    else:
        first = block_det(a_rows, 1)
        second = block_det(b_rows, p + 2)
    return ProductMapDescriptor((p + 1, q + 1), swaps, first, second)


@dataclass(frozen=True)
class HomologyAction:
    """Integer 2x2 matrix of determinant +-1 acting on middle homology."""

    rows: tuple[tuple[int, int], tuple[int, int]]

    def __post_init__(self):
        (a, b), (c, d) = self.rows
        if a * d - b * c not in (1, -1):
            raise InvalidMatrixError("determinant must be +-1")

    def __mul__(self, other: "HomologyAction") -> "HomologyAction":
        (a, b), (c, d) = self.rows
        (e, f), (g, h) = other.rows
        return HomologyAction(((a * e + b * g, a * f + b * h),
                               (c * e + d * g, c * f + d * h)))

    def to_unimodular(self) -> UniModMat2:
        (a, b), (c, d) = self.rows
        return UniModMat2(a, b, c, d)


def induced_homology_action(desc: ProductMapDescriptor) -> HomologyAction:
    """Action on the rank-2 middle homology of an equal-dimension product.

    A non-swapping map scales the two generating cycles by the block
    degrees; a swapping map exchanges them, weighted the same way.
    """
    if desc.block_sizes[0] != desc.block_sizes[1]:
        raise BlockSizeError("induced 2x2 action needs equal factor dimensions")
    d1, d2 = desc.first_block_det, desc.second_block_det
    if desc.swaps_factors:
        return HomologyAction(((0, d1), (d2, 0)))
    return HomologyAction(((d1, 0), (0, d2)))


def homology_group_closure(mats: list[HomologyAction]) -> list[HomologyAction]:
    """Multiplicative closure of finitely many homology actions (must stay finite)."""
    seen = {identity_action().rows: identity_action()}
    frontier = list(mats)
    for m in frontier:
        seen.setdefault(m.rows, m)
    frontier = list(seen.values())
    while frontier:
        nxt = []
        for a in frontier:
            for b in list(seen.values()):
                for c in (a * b, b * a):
                    if c.rows not in seen:
                        if len(seen) >= 256:
                            raise InvalidMatrixError("closure is not small; giving up")
                        seen[c.rows] = c
                        nxt.append(c)
        frontier = nxt
    return sorted(seen.values(), key=lambda m: m.rows)


def identity_action() -> HomologyAction:
    return HomologyAction(((1, 0), (0, 1)))
