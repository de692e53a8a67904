"""Small finite groups: presentations, coset enumeration, table groups.

Groups of order at most 64 are stored as explicit multiplication tables
(table[i][j] = index of element_i * element_j).  Presentations feed a
deterministic HLT-style Todd-Coxeter enumeration of the trivial-subgroup
cosets; for a finite presented group the cosets are the elements, which
yields the table.  On a presentation of an infinite group the coset count
passes any cap, reported as CosetCapacityError.
"""

from __future__ import annotations

from dataclasses import dataclass, field


class PresentationError(ValueError):
    pass


class CosetCapacityError(RuntimeError):
    """Coset cap exceeded; the presented group may be infinite."""


class InvalidTableError(ValueError):
    pass


class InvalidActionError(ValueError):
    pass


class InvalidSubgroupError(ValueError):
    pass


class UnsupportedSizeError(ValueError):
    pass


# ---------------------------------------------------------------------------
# presentations


@dataclass(frozen=True)
class Presentation:
    """Finite presentation: generator names and relator words.

    A relator is a tuple of (generator_index, exponent_sign) letters; the
    relator multiplies out to the identity.
    """

    generators: tuple[str, ...]
    relators: tuple[tuple[tuple[int, int], ...], ...]

    def __post_init__(self):
        if len(set(self.generators)) != len(self.generators):
            raise PresentationError("duplicate generator names")
        for rel in self.relators:
            for g, s in rel:
                if not 0 <= g < len(self.generators) or s not in (1, -1):
                    raise PresentationError(f"bad letter ({g}, {s})")


def _parse_factor(tok: str, index: dict[str, int]) -> list[tuple[int, int]]:
    if tok.startswith("[") and tok.endswith("]"):
        inner = tok[1:-1].split(",")
        if len(inner) != 2:
            raise PresentationError(f"bad commutator {tok!r}")
        x, y = (t.strip() for t in inner)
        if x not in index or y not in index:
            raise PresentationError(f"unknown generator in {tok!r}")
        a, b = index[x], index[y]
        return [(a, 1), (b, 1), (a, -1), (b, -1)]
    name, caret, tail = tok.partition("^")
    if name not in index:
        raise PresentationError(f"unknown generator {name!r}")
    exp = 1
    if caret:
        try:
            exp = int(tail)
        except ValueError:
            raise PresentationError(f"bad exponent in {tok!r}") from None
    g = index[name]
    return [(g, 1 if exp > 0 else -1)] * abs(exp)


def parse_presentation(text: str) -> Presentation:
    """Parse "gens: a,b; rels: a^2, b^3, [a,b]" (commutator sugar included)."""
    parts = text.split(";")
    if len(parts) != 2:
        raise PresentationError("expected 'gens: ...; rels: ...'")
    gens_part, rels_part = (p.strip() for p in parts)
    if not gens_part.startswith("gens:") or not rels_part.startswith("rels:"):
        raise PresentationError("expected 'gens: ...; rels: ...'")
    gens = tuple(g.strip() for g in gens_part[len("gens:"):].split(",") if g.strip())
    if not gens:
        raise PresentationError("no generators")
    index = {g: i for i, g in enumerate(gens)}
    relators = []
    body = rels_part[len("rels:"):].strip()
    if body:
        # commutator factors contain commas; split on top-level commas only
        pieces, depth, cur = [], 0, ""
        for ch in body:
            if ch == "[":
                depth += 1
            elif ch == "]":
                depth -= 1
            if ch == "," and depth == 0:
                pieces.append(cur)
                cur = ""
            else:
                cur += ch
        pieces.append(cur)
        for piece in pieces:
            word: list[tuple[int, int]] = []
            for tok in piece.split():
                word.extend(_parse_factor(tok, index))
            if word:
                relators.append(tuple(word))
    return Presentation(gens, tuple(relators))


# ---------------------------------------------------------------------------
# Todd-Coxeter


def _coset_table(pres: Presentation, max_cosets: int) -> list[list[int]]:
    """HLT enumeration of the cosets of the trivial subgroup.

    Letters 2g and 2g+1 stand for generator g and its inverse.  Entries
    may go stale when cosets merge; reads resolve through union-find.
    Deterministic: cosets are processed in increasing order, relators in
    presentation order, missing images defined in letter order.
    """
    ngens = len(pres.generators)
    width = 2 * ngens
    rels = [tuple(2 * g + (0 if s == 1 else 1) for g, s in rel) for rel in pres.relators]

    table: list[list[int | None]] = [[None] * width]
    parent = [0]
    merge_count = 0

    def find(c: int) -> int:
        while parent[c] != c:
            parent[c] = parent[parent[c]]
            c = parent[c]
        return c

    def inv(x: int) -> int:
        return x ^ 1

    def define(c: int, x: int) -> int:
        if len(table) >= max_cosets:
            raise CosetCapacityError(
                f"exceeded {max_cosets} cosets; raise the cap if the group is finite")
        d = len(table)
        table.append([None] * width)
        parent.append(d)
        table[c][x] = d
        table[d][inv(x)] = c
        return d

    def set_entry(c: int, x: int, d: int):
        merges = []
        if table[c][x] is None:
            table[c][x] = d
        elif find(table[c][x]) != find(d):
            merges.append((find(table[c][x]), find(d)))
        if table[d][inv(x)] is None:
            table[d][inv(x)] = c
        elif find(table[d][inv(x)]) != find(c):
            merges.append((find(table[d][inv(x)]), find(c)))
        for pair in merges:
            merge(*pair)

    def merge(a: int, b: int):
        nonlocal merge_count
        queue = [(a, b)]
        while queue:
            a, b = queue.pop()
            a, b = find(a), find(b)
            if a == b:
                continue
            if a > b:
                a, b = b, a
            parent[b] = a
            merge_count += 1
            for x in range(width):
                e = table[b][x]
                if e is None:
                    continue
                e = find(e)
                cur = table[a][x]
                if cur is None:
                    table[a][x] = e
                    if table[e][inv(x)] is None:
                        table[e][inv(x)] = a
                    elif find(table[e][inv(x)]) != a:
                        queue.append((find(table[e][inv(x)]), a))
                elif find(cur) != e:
                    queue.append((find(cur), e))

    def scan(c: int, rel: tuple[int, ...], fill: bool) -> bool:
        """Trace rel from c, filling gaps if asked; returns True if it closed."""
        i, j = 0, len(rel) - 1
        f = b = c
        while True:
            while i <= j and table[f][rel[i]] is not None:
                f = find(table[f][rel[i]])
                i += 1
            if i > j:
                if f != b:
                    merge(f, b)
                return True
            while j >= i and table[b][inv(rel[j])] is not None:
                b = find(table[b][inv(rel[j])])
                j -= 1
            if j < i:
                merge(f, b)
                return True
            if j == i:
                set_entry(f, rel[i], b)
                return True
            if not fill:
                return False
            f = define(f, rel[i])
            i += 1

    alpha = 0
    while alpha < len(table):
        if find(alpha) != alpha:
            alpha += 1
            continue
        for rel in rels:
            if find(alpha) != alpha:
                break
            scan(alpha, rel, fill=True)
        if find(alpha) == alpha:
            for x in range(width):
                if table[alpha][x] is None:
                    define(alpha, x)
        alpha += 1

    # the table is now complete; coincidences during the main sweep can
    # invalidate scans done earlier, so re-verify until a clean pass
    while True:
        before = merge_count
        for c in range(len(table)):
            if find(c) != c:
                continue
            for rel in rels:
                scan(c, rel, fill=False)
        if merge_count == before:
            break

    live = sorted(c for c in range(len(table)) if find(c) == c)
    renum = {c: i for i, c in enumerate(live)}
    return [[renum[find(table[c][x])] for x in range(width)] for c in live]


def todd_coxeter(pres: Presentation, max_cosets: int = 100_000) -> "MulTableGroup":
    """Multiplication table of the presented group, if it closes under the cap.

    Coset 0 of the trivial subgroup is the identity; every coset is one
    group element, reached from the identity by a unique first-seen word.
    """
    table = _coset_table(pres, max_cosets)
    n = len(table)
    width = 2 * len(pres.generators)
    # representative word (as letters) for each element, via BFS from 0
    words: list[list[int] | None] = [None] * n
    words[0] = []
    order = [0]
    for c in order:
        for x in range(width):
            d = table[c][x]
            if words[d] is None:
                words[d] = words[c] + [x]
                order.append(d)
    if any(w is None for w in words):
        raise PresentationError("coset graph is not connected")

    def follow(c: int, word: list[int]) -> int:
        for x in word:
            c = table[c][x]
        return c

    mul = tuple(tuple(follow(i, words[j]) for j in range(n)) for i in range(n))
    return MulTableGroup(mul)


# ---------------------------------------------------------------------------
# table groups


@dataclass(frozen=True)
class MulTableGroup:
    """Finite group as a full multiplication table over indices 0..n-1."""

    table: tuple[tuple[int, ...], ...]
    identity: int = field(init=False, default=0)

    def __post_init__(self):
        n = len(self.table)
        if n == 0 or n > 64:
            raise UnsupportedSizeError(f"order {n} outside supported range 1..64")
        rng = range(n)
        for row in self.table:
            if len(row) != n or any(e not in rng for e in row):
                raise InvalidTableError("table is not square over element indices")
        for row in self.table:
            if len(set(row)) != n:
                raise InvalidTableError("a row repeats an element (not a bijection)")
        for j in rng:
            if len({self.table[i][j] for i in rng}) != n:
                raise InvalidTableError("a column repeats an element (not a bijection)")
        ident = next((e for e in rng
                      if all(self.table[e][x] == x and self.table[x][e] == x for x in rng)),
                     None)
        if ident is None:
            raise InvalidTableError("no two-sided identity element")
        object.__setattr__(self, "identity", ident)
        for i in rng:
            if all(self.table[i][j] != ident for j in rng):
                raise InvalidTableError(f"element {i} has no inverse")
        for a in rng:
            for b in rng:
                for c in rng:
                    if self.table[self.table[a][b]][c] != self.table[a][self.table[b][c]]:
                        raise InvalidTableError(f"not associative at ({a},{b},{c})")

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inverse(self, a: int) -> int:
        return next(b for b in range(self.order) if self.table[a][b] == self.identity)

    def element_order(self, a: int) -> int:
        n, x = 1, a
        while x != self.identity:
            x = self.table[x][a]
            n += 1
        return n

    def order_profile(self) -> tuple[int, ...]:
        return tuple(sorted(self.element_order(a) for a in range(self.order)))

    def is_abelian(self) -> bool:
        t = self.table
        return all(t[a][b] == t[b][a] for a in range(self.order) for b in range(self.order))

    def center(self) -> frozenset[int]:
        t = self.table
        return frozenset(a for a in range(self.order)
                         if all(t[a][b] == t[b][a] for b in range(self.order)))

    def closure(self, seed) -> frozenset[int]:
        out = {self.identity}
        frontier = list(set(seed) | out)
        out.update(frontier)
        while frontier:
            nxt = []
            for a in frontier:
                for b in list(out):
                    for c in (self.table[a][b], self.table[b][a]):
                        if c not in out:
                            out.add(c)
                            nxt.append(c)
            frontier = nxt
        return frozenset(out)

    def is_subgroup(self, elems) -> bool:
        s = set(elems)
        if self.identity not in s:
            return False
        return all(self.table[a][b] in s for a in s for b in s)

    def is_normal(self, elems) -> bool:
        if not self.is_subgroup(elems):
            return False
        s = set(elems)
        for g in range(self.order):
            gi = self.inverse(g)
            for a in s:
                if self.table[self.table[g][a]][gi] not in s:
                    return False
        return True


def cyclic(n: int) -> MulTableGroup:
    if n < 1 or n > 64:
        raise UnsupportedSizeError(f"order {n} outside supported range 1..64")
    return MulTableGroup(tuple(tuple((i + j) % n for j in range(n)) for i in range(n)))


def klein() -> MulTableGroup:
    """Z2 x Z2 with elements as bit pairs 0..3 under XOR."""
    return MulTableGroup(tuple(tuple(i ^ j for j in range(4)) for i in range(4)))


def dihedral(order: int) -> MulTableGroup:
    """Dihedral group of the given (even) order: rotations r^i, reflections r^i s."""
    if order < 2 or order % 2 or order > 64:
        raise UnsupportedSizeError(f"no dihedral group of order {order} here")
    n = order // 2
    # element 2i = r^i, element 2i+1 = r^i s; s r s = r^-1

    def mul(x, y):
        i, fx = divmod(x, 2)
        j, fy = divmod(y, 2)
        if fx == 0:
            return 2 * ((i + j) % n) + fy
        return 2 * ((i - j) % n) + (fy ^ 1)

    return MulTableGroup(tuple(tuple(mul(x, y) for y in range(order)) for x in range(order)))


def quaternion(order: int) -> MulTableGroup:
    """The quaternion group {+-1, +-i, +-j, +-k}; only order 8 exists here."""
    if order != 8:
        raise UnsupportedSizeError("only the order-8 quaternion group is provided")
    # indices: unit 0..3 for 1,i,j,k; +4 for the negatives
    basis = {(0, 0): (0, 1), (1, 1): (0, -1), (2, 2): (0, -1), (3, 3): (0, -1),
             (1, 2): (3, 1), (2, 1): (3, -1), (2, 3): (1, 1), (3, 2): (1, -1),
             (3, 1): (2, 1), (1, 3): (2, -1)}

    def mul(x, y):
        ux, sx = x % 4, -1 if x >= 4 else 1
        uy, sy = y % 4, -1 if y >= 4 else 1
        if ux == 0:
            u, s = uy, 1
        elif uy == 0:
            u, s = ux, 1
        else:
            u, s = basis[(ux, uy)]
        sign = sx * sy * s
        return u + (0 if sign == 1 else 4)

    return MulTableGroup(tuple(tuple(mul(x, y) for y in range(8)) for x in range(8)))


def direct_product(g: MulTableGroup, h: MulTableGroup) -> MulTableGroup:
    """Componentwise product on pairs; pair (a, b) gets index a*|H| + b."""
    return semidirect_product(g, h, {b: tuple(range(g.order)) for b in range(h.order)})


def semidirect_product(n: MulTableGroup, h: MulTableGroup,
                       action: dict[int, tuple[int, ...]]) -> MulTableGroup:
    """Split extension of n by h: (a, x)(b, y) = (a * action[x](b), x y).

    action maps each element of h to a permutation of n's indices; it must
    send each to an automorphism and be a homomorphism into Aut(n).
    """
    if n.order * h.order > 64:
        raise UnsupportedSizeError("product order exceeds 64")
    if set(action) != set(range(h.order)):
        raise InvalidActionError("action must cover every element of the acting group")
    for x, perm in action.items():
        if sorted(perm) != list(range(n.order)):
            raise InvalidActionError(f"image of element {x} is not a permutation")
        for a in range(n.order):
            for b in range(n.order):
                if perm[n.table[a][b]] != n.table[perm[a]][perm[b]]:
                    raise InvalidActionError(f"image of element {x} is not an automorphism")
    for x in range(h.order):
        for y in range(h.order):
            composed = tuple(action[x][action[y][a]] for a in range(n.order))
            if composed != action[h.table[x][y]]:
                raise InvalidActionError("action is not a homomorphism into Aut(n)")

    def idx(a, x):
        return a * h.order + x

    size = n.order * h.order
    table = [[0] * size for _ in range(size)]
    for a in range(n.order):
        for x in range(h.order):
            for b in range(n.order):
                for y in range(h.order):
                    table[idx(a, x)][idx(b, y)] = idx(n.table[a][action[x][b]], h.table[x][y])
    return MulTableGroup(tuple(tuple(row) for row in table))


def quotient(g: MulTableGroup, normal) -> MulTableGroup:
    """Quotient by a normal subgroup, cosets indexed by smallest member."""
    if not g.is_normal(normal):
        raise InvalidSubgroupError("subset is not a normal subgroup")
    nset = frozenset(normal)
    coset_of = {}
    reps = []
    for a in range(g.order):
        if a in coset_of:
            continue
        members = sorted(g.table[a][x] for x in nset)
        rep = len(reps)
        reps.append(members[0])
        for m in members:
            coset_of[m] = rep
    k = len(reps)
    table = tuple(tuple(coset_of[g.table[reps[i]][reps[j]]] for j in range(k))
                  for i in range(k))
    return MulTableGroup(table)


# ---------------------------------------------------------------------------
# isomorphism


def _generating_set(g: MulTableGroup) -> list[int]:
    gens: list[int] = []
    span = g.closure(gens)
    for a in range(g.order):
        if a not in span:
            gens.append(a)
            span = g.closure(gens)
            if len(span) == g.order:
                break
    return gens


def is_isomorphic(g: MulTableGroup, h: MulTableGroup) -> tuple[bool, tuple[int, ...] | None]:
    """Isomorphism test with witness: (True, mapping) or (False, None).

    mapping[i] is the image in h of element i of g.  Backtracks over
    images of a generating set, pruned by element orders.
    """
    if g.order != h.order:
        return False, None
    if g.order_profile() != h.order_profile():
        return False, None

    gens = _generating_set(g)
    h_orders = [h.element_order(a) for a in range(h.order)]

    def extend(images: list[int]) -> tuple[int, ...] | None:
        # grow the partial map from the chosen generator images by closure
        phi: dict[int, int] = {g.identity: h.identity}
        frontier = [g.identity]
        pairs = list(zip(gens, images))
        for a, b in pairs:
            if g.element_order(a) != h_orders[b]:
                return None
        while frontier:
            x = frontier.pop()
            for a, b in pairs:
                y = g.table[x][a]
                fy = h.table[phi[x]][b]
                if y in phi:
                    if phi[y] != fy:
                        return None
                else:
                    phi[y] = fy
                    frontier.append(y)
        if len(phi) != g.order or len(set(phi.values())) != g.order:
            return None
        out = tuple(phi[i] for i in range(g.order))
        for a in range(g.order):
            for b in range(g.order):
                if out[g.table[a][b]] != h.table[out[a]][out[b]]:
                    return None
        return out

    def search(i: int, images: list[int]) -> tuple[int, ...] | None:
        if i == len(gens):
            return extend(images)
        want = g.element_order(gens[i])
        for b in range(h.order):
            if h_orders[b] == want:
                result = search(i + 1, images + [b])
                if result is not None:
                    return result
        return None

    witness = search(0, [])
    return (witness is not None), witness


# ---------------------------------------------------------------------------
# subgroups and complements


def all_subgroups(g: MulTableGroup) -> set[frozenset[int]]:
    found = {frozenset({g.identity})}
    frontier = [frozenset({g.identity})]
    while frontier:
        nxt = []
        for sub in frontier:
            for a in range(g.order):
                if a in sub:
                    continue
                bigger = g.closure(sub | {a})
                if bigger not in found:
                    found.add(bigger)
                    nxt.append(bigger)
        frontier = nxt
    return found


def has_complement(g: MulTableGroup, normal) -> bool:
    """Is there a subgroup meeting the normal subgroup trivially with full span?

    Equivalent to the quotient extension splitting.  Exhaustive over the
    subgroup lattice; fine for the orders (<= 64) this library handles.
    """
    nset = frozenset(normal)
    if not g.is_normal(nset):
        raise InvalidSubgroupError("subset is not a normal subgroup")
    want = g.order // len(nset)
    for sub in all_subgroups(g):
        if len(sub) == want and sub & nset == {g.identity}:
            products = {g.table[a][b] for a in nset for b in sub}
            if len(products) == g.order:
                return True
    return False


# ---------------------------------------------------------------------------
# the order-16 group for the even-dimensional classification


D8_PRESENTATION = parse_presentation(
    "gens: a,b,u; rels: a^2, b^2, u^2, [a,b], a u b^-1 u^-1")

E_EVEN_PRESENTATION = parse_presentation(
    "gens: a,b,u,r; rels: a^2, b^2, u^2, r^2, [a,b], [a,r], [b,r], [u,r], "
    "a u b^-1 u^-1")

# element indices inside build_E_even(), fixed by the product conventions:
# ((klein ⋊ swap) x reversal): inner pair (k, u) has index k*2+u, outer
# pair (inner, r) has index inner*2+r
E_EVEN_GENS = {"delta1": 4, "delta2": 8, "u": 2, "r": 1}


def build_E_even() -> MulTableGroup:
    """The order-16 group ((Z2 x Z2) ⋊ swap) x Z2.

    The Klein kernel is generated by the two one-sided reflections delta1
    and delta2, u swaps them, and r (reversing both factors at once) is
    central.  Isomorphic to dihedral(8) x cyclic(2).
    """
    kern = klein()
    swap = (0, 2, 1, 3)  # exchanges the two bit generators of klein()
    inner = semidirect_product(kern, cyclic(2), {0: (0, 1, 2, 3), 1: swap})
    return direct_product(inner, cyclic(2))


def abelianized(pres: Presentation) -> Presentation:
    """Add all pairwise commutators to a presentation."""
    extra = []
    n = len(pres.generators)
    for i in range(n):
        for j in range(i + 1, n):
            extra.append(((i, 1), (j, 1), (i, -1), (j, -1)))
    return Presentation(pres.generators, pres.relators + tuple(extra))
