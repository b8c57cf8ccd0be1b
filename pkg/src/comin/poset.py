"""Minuscule posets, their order ideals and linear-extension counts.

The poset of a cominuscule G/P_alpha is the set of positive roots with
nonzero alpha-coefficient under the root order.  Order ideals index the
Schubert basis: the ideal of size k is the inversion set of a minimal coset
representative of length k, i.e. a Schubert variety of dimension k.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterator

from .catalog import SpaceDescriptor, describe
from .root_data import RootCoords, RootSystem


@dataclass(frozen=True)
class SchubertClass:
    """An order ideal, stored as a bitmask over the poset's element order."""

    space_id: str
    mask: int
    poset: "MinusculePoset" = field(compare=False, hash=False, repr=False)

    @property
    def dim(self) -> int:
        return self.mask.bit_count()

    @property
    def codim(self) -> int:
        return self.poset.size - self.dim

    def elements(self) -> list[int]:
        return [k for k in range(self.poset.size) if self.mask >> k & 1]

    @property
    def bitstring(self) -> str:
        return "".join("1" if self.mask >> k & 1 else "0" for k in range(self.poset.size))

    def __repr__(self) -> str:
        return f"X[{self.bitstring or '-'}]"


class MinusculePoset:
    def __init__(self, space: SpaceDescriptor):
        self.space = space
        rs = space.root_system()
        self.rs: RootSystem = rs
        self.node = space.root_type[2]
        k = self.node - 1
        roots = [r for r in rs.positive_roots if r[k] > 0]
        # height first, so the element order is a linear extension
        roots.sort(key=lambda r: (sum(r), tuple(-c for c in r)))
        self.root_labels: tuple[RootCoords, ...] = tuple(roots)
        self.size = len(roots)
        index = {r: i for i, r in enumerate(roots)}
        self._index = index
        lower = [0] * self.size
        upper = [0] * self.size
        for i, r in enumerate(roots):
            for j in range(rs.rank):
                below = list(r)
                below[j] -= 1
                b = index.get(tuple(below))
                if b is not None:
                    lower[i] |= 1 << b
                    upper[b] |= 1 << i
        self.lower_covers: tuple[int, ...] = tuple(lower)
        self.upper_covers: tuple[int, ...] = tuple(upper)

    @property
    def space_id(self) -> str:
        return self.space.canonical_id

    @property
    def full_mask(self) -> int:
        return (1 << self.size) - 1

    def cls(self, mask: int) -> SchubertClass:
        if not self.is_ideal(mask):
            raise ValueError(f"{mask:b} is not an order ideal of the {self.space_id} poset")
        return SchubertClass(self.space_id, mask, self)

    def from_bitstring(self, bits: str) -> SchubertClass:
        bits = bits.strip()
        if len(bits) != self.size or set(bits) - {"0", "1"}:
            raise ValueError(f"expected a bitstring of length {self.size}, got {bits!r}")
        return self.cls(sum(1 << k for k, ch in enumerate(bits) if ch == "1"))

    def from_roots(self, roots) -> SchubertClass:
        return self.cls(sum(1 << self._index[r] for r in roots))

    def is_ideal(self, mask: int) -> bool:
        if mask >> self.size:
            return False
        for k in range(self.size):
            if mask >> k & 1 and self.lower_covers[k] & ~mask:
                return False
        return True

    def leq(self, a: int, b: int) -> bool:
        """Root order: b - a is a non-negative combination of simple roots."""
        return all(x <= y for x, y in zip(self.root_labels[a], self.root_labels[b]))

    def maximal_elements(self, mask: int) -> list[int]:
        return [k for k in range(self.size) if mask >> k & 1 and not self.upper_covers[k] & mask]

    @property
    def fundamental(self) -> SchubertClass:
        return SchubertClass(self.space_id, self.full_mask, self)

    @property
    def point(self) -> SchubertClass:
        return SchubertClass(self.space_id, 0, self)

    @cached_property
    def chevalley_weights(self) -> tuple[int, ...]:
        """<omega_alpha, x^vee> for each element x."""
        k = self.node - 1
        return tuple(self.rs.coroot_coords[r][k] for r in self.root_labels)

    @cached_property
    def involution(self) -> tuple[int, ...]:
        """Order-reversing involution x -> w_{0,P}(x) of the poset."""
        rs = self.rs
        k = self.node - 1
        # reduced word of the longest element of the Levi subgroup
        weight = [0 if i == k else 1 for i in range(rs.rank)]
        word = []
        while True:
            step = next((i for i in range(rs.rank) if i != k and weight[i] > 0), None)
            if step is None:
                break
            weight = list(rs.reflect_weight(weight, step))
            word.append(step)
        image = []
        for r in self.root_labels:
            x = r
            for i in reversed(word):
                x = rs.reflect_root(x, i)
            image.append(self._index[x])
        return tuple(image)

    @cached_property
    def _ideal_masks(self) -> list[int]:
        seen = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for mask in frontier:
                for k in range(self.size):
                    if not mask >> k & 1 and self.lower_covers[k] & ~mask == 0:
                        new = mask | 1 << k
                        if new not in seen:
                            seen.add(new)
                            nxt.append(new)
            frontier = nxt
        return sorted(seen, key=lambda m: (m.bit_count(), m))

    def __repr__(self) -> str:
        return f"MinusculePoset({self.space_id}, {self.size} elements)"


@lru_cache(maxsize=None)
def _poset(canonical_id: str) -> MinusculePoset:
    return MinusculePoset(describe(canonical_id))


def minuscule_poset(s: SpaceDescriptor | str) -> MinusculePoset:
    return _poset(describe(s).canonical_id)


def order_ideals(p: MinusculePoset) -> list[SchubertClass]:
    """All order ideals, sorted by (size, bitmask)."""
    return [SchubertClass(p.space_id, m, p) for m in p._ideal_masks]


def _extension_count(p: MinusculePoset, mask: int, weights: tuple[int, ...] | None) -> int:
    memo: dict[int, int] = {0: 1}

    def count(m: int) -> int:
        if m in memo:
            return memo[m]
        total = 0
        for x in p.maximal_elements(m):
            sub = count(m & ~(1 << x))
            total += sub * weights[x] if weights else sub
        memo[m] = total
        return total

    # iterate bottom-up over sub-ideals to keep recursion shallow
    for sub in p._ideal_masks:
        if sub & ~mask == 0 and sub.bit_count() < mask.bit_count():
            count(sub)
    return count(mask)


def linear_extensions_count(c: SchubertClass) -> int:
    """Number of linear extensions of the ideal, as an induced subposet."""
    return _extension_count(c.poset, c.mask, None)


def weighted_extensions_count(c: SchubertClass) -> int:
    """Linear extensions weighted by the Chevalley multiplicities <omega, x^vee>."""
    return _extension_count(c.poset, c.mask, c.poset.chevalley_weights)


def dual(c: SchubertClass) -> SchubertClass:
    """Poincare-dual ideal: complement of the image under the poset involution."""
    p = c.poset
    image = 0
    for k in range(p.size):
        if c.mask >> k & 1:
            image |= 1 << p.involution[k]
    return SchubertClass(c.space_id, p.full_mask & ~image, p)


def rank_generating_function(p: MinusculePoset) -> list[int]:
    """Betti numbers: coefficient k counts ideals of size k."""
    counts = [0] * (p.size + 1)
    for m in p._ideal_masks:
        counts[m.bit_count()] += 1
    return counts


def iter_sub_ideals(c: SchubertClass) -> Iterator[SchubertClass]:
    for m in c.poset._ideal_masks:
        if m & ~c.mask == 0:
            yield SchubertClass(c.space_id, m, c.poset)


# -- Grassmannian partition notation ---------------------------------------------
#
# For Gr(i,N) the element alpha_a + ... + alpha_{b-1} (a <= i < b) sits in row
# i - a and column b - 1 - i of an i x (N - i) box, so an ideal is a Young
# diagram.  sigma_lambda denotes the codimension-|lambda| class whose dual
# ideal has shape lambda.


def _cell(p: MinusculePoset, k: int) -> tuple[int, int]:
    root = p.root_labels[k]
    support = [j for j, c in enumerate(root) if c]
    a, b = support[0] + 1, support[-1] + 2
    return p.node - a, b - 1 - p.node


def _require_grassmannian(p: MinusculePoset) -> None:
    if p.space.family != "Grassmannian":
        raise ValueError(f"partition notation only applies to Grassmannians, not {p.space_id}")


def shape_of(c: SchubertClass) -> tuple[int, ...]:
    """Row lengths of the ideal viewed as a Young diagram."""
    _require_grassmannian(c.poset)
    rows = [0] * c.poset.node
    for k in c.elements():
        rows[_cell(c.poset, k)[0]] += 1
    return tuple(x for x in rows if x)


def partition_of(c: SchubertClass) -> tuple[int, ...]:
    """lambda with [X_c] = sigma_lambda."""
    return shape_of(dual(c))


def from_partition(p: MinusculePoset, lam) -> SchubertClass:
    _require_grassmannian(p)
    lam = tuple(int(x) for x in lam if int(x))
    rows, cols = p.node, p.space.params[1] - p.node
    if len(lam) > rows or (lam and lam[0] > cols) or any(x < y for x, y in zip(lam, lam[1:])):
        raise ValueError(f"{lam} is not a partition in the {rows} x {cols} box")
    mask = 0
    for k in range(p.size):
        r, col = _cell(p, k)
        if r < len(lam) and col < lam[r]:
            mask |= 1 << k
    return dual(p.cls(mask))
