"""Stable and near-stable homotopy of the rotation groups, as lookup tables.

Only the handful of rows the classification needs are encoded: the
image-of-stabilization groups SPi_p(SO(p)) by residue of p mod 8 (with the
single exceptional value at p = 6), the unstable rows pi_p(SO(p+1)) and
pi_p(SO(p+2)) for even p, and one isolated entry used by the
adjacent-dimension family.  Out-of-domain queries raise OutOfDomainError
rather than extrapolate.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd


class OutOfDomainError(ValueError):
    pass


@dataclass(frozen=True)
class FinAbGroup:
    """Finitely generated abelian group in invariant-factor form.

    torsion is a divisibility chain d_1 | d_2 | ... with every d_i >= 2;
    free_rank counts the infinite cyclic summands.  Use make() to build
    one from an arbitrary bag of cyclic orders.
    """

    free_rank: int
    torsion: tuple[int, ...]

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        for i, d in enumerate(self.torsion):
            if d < 2:
                raise ValueError(f"torsion order {d} must be at least 2")
            if i and self.torsion[i - 1] != gcd(self.torsion[i - 1], d):
                raise ValueError("torsion orders must form a divisibility chain")

    @classmethod
    def make(cls, free_rank: int = 0, cyclic_orders=()) -> "FinAbGroup":
        return cls(free_rank, _invariant_factors(cyclic_orders))

    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def order(self) -> int | None:
        """Number of elements, or None if infinite."""
        if self.free_rank:
            return None
        n = 1
        for d in self.torsion:
            n *= d
        return n

    def __str__(self) -> str:
        parts = ["Z"] * self.free_rank + [f"Z{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"

    def to_json(self) -> dict:
        return {"rank": self.free_rank, "torsion": list(self.torsion)}

    @classmethod
    def from_json(cls, data: dict) -> "FinAbGroup":
        if not isinstance(data, dict) or "rank" not in data or "torsion" not in data:
            raise ValueError("expected {\"rank\": r, \"torsion\": [...]}")
        return cls.make(data["rank"], tuple(data["torsion"]))


def _invariant_factors(orders) -> tuple[int, ...]:
    """Canonical divisibility chain of a direct sum of cyclic groups."""
    primary: dict[int, list[int]] = {}
    for n in orders:
        if n < 1:
            raise ValueError(f"cyclic order {n} must be positive")
        if n == 1:
            continue
        m = n
        p = 2
        while p * p <= m:
            if m % p == 0:
                e = 0
                while m % p == 0:
                    m //= p
                    e += 1
                primary.setdefault(p, []).append(p ** e)
            p += 1
        if m > 1:
            primary.setdefault(m, []).append(m)
    for plist in primary.values():
        plist.sort(reverse=True)
    depth = max((len(v) for v in primary.values()), default=0)
    factors = []
    for i in range(depth):
        d = 1
        for plist in primary.values():
            if i < len(plist):
                d *= plist[i]
        factors.append(d)
    return tuple(reversed(factors))


TRIVIAL = FinAbGroup.make()
Z = FinAbGroup.make(free_rank=1)
Z2 = FinAbGroup.make(cyclic_orders=(2,))
Z2_Z2 = FinAbGroup.make(cyclic_orders=(2, 2))

# image of pi_p(SO(p)) in pi_p(SO(p+1)), by p mod 8 (generic rows)
_S_PI_BY_RESIDUE = {
    0: Z2_Z2,
    1: Z2,
    2: Z2,
    3: Z,
    4: Z2,
    5: TRIVIAL,
    6: Z2,
    7: Z,
}


def s_pi_p_so_p(p: int) -> FinAbGroup:
    """SPi_p(SO(p)) for p >= 3; the lone exception is p = 6, which is trivial."""
    if p < 3:
        raise OutOfDomainError(f"p = {p} is below the tabulated range (p >= 3)")
    if p == 6:
        return TRIVIAL
    return _S_PI_BY_RESIDUE[p % 8]


def pi_p_so_p_plus(p: int, shift: int) -> FinAbGroup:
    """pi_p(SO(p + shift)) for even p >= 4 and shift in {1, 2}."""
    if p < 4 or p % 2:
        raise OutOfDomainError(f"p = {p} must be even and at least 4")
    if shift == 1:
        return Z2_Z2 if p % 8 == 0 else Z2
    if shift == 2:
        return Z2 if p % 8 == 0 else TRIVIAL
    raise OutOfDomainError(f"shift = {shift} must be 1 or 2")


def pi_p_so_p_residue5(p: int) -> FinAbGroup:
    """pi_p(SO(p)) itself, tabulated only at p congruent to 5 mod 8, p >= 13.

    Single-purpose entry: it is the kernel term for products of spheres in
    adjacent dimensions p-2, p-1 with p = 6 mod 8, where the relevant index
    p - 1 lands on this residue.
    """
    if p < 13 or p % 8 != 5:
        raise OutOfDomainError(f"p = {p} not tabulated (need p = 5 mod 8, p >= 13)")
    return Z2


def hom_to(source_rank: int, target: FinAbGroup) -> FinAbGroup:
    """Hom(Z^rank, A) = direct sum of rank copies of A, canonicalized."""
    if source_rank < 0:
        raise OutOfDomainError("source rank must be nonnegative")
    return FinAbGroup.make(source_rank * target.free_rank,
                           target.torsion * source_rank)
