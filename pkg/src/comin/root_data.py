"""Root systems of types A-D, E6 and E7 with exact arithmetic.

Simple roots live in the usual orthonormal ambient models (Bourbaki's
conventions); E6 and E7 are cut out of the E8 lattice, so their ambient
coordinates are half-integers and are kept as ``Fraction``.  Positive roots
are stored in simple-root coordinates, which are always integers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Sequence

Vector = tuple[Fraction, ...]
RootCoords = tuple[int, ...]

TYPE_LABELS = ("A", "B", "C", "D", "E6", "E7")

# nodes whose coefficient in the highest root is 1, Bourbaki numbering
_HALF = Fraction(1, 2)


class RootDataError(ValueError):
    """Raised for type/rank pairs or nodes outside the supported range."""


def _unit(dim: int, i: int, scale: int = 1) -> list[Fraction]:
    v = [Fraction(0)] * dim
    v[i] = Fraction(scale)
    return v


def _simple_roots(type_label: str, rank: int) -> list[list[Fraction]]:
    n = rank
    if type_label == "A":
        roots = []
        for i in range(n):
            v = _unit(n + 1, i)
            v[i + 1] = Fraction(-1)
            roots.append(v)
        return roots
    if type_label in ("B", "C", "D"):
        roots = []
        for i in range(n - 1):
            v = _unit(n, i)
            v[i + 1] = Fraction(-1)
            roots.append(v)
        if type_label == "B":
            roots.append(_unit(n, n - 1))
        elif type_label == "C":
            roots.append(_unit(n, n - 1, 2))
        else:
            v = _unit(n, n - 2)
            v[n - 1] = Fraction(1)
            roots.append(v)
        return roots
    # E8 lattice realization; E6 and E7 use the first 6 and 7 simple roots.
    a1 = [_HALF, -_HALF, -_HALF, -_HALF, -_HALF, -_HALF, -_HALF, _HALF]
    a2 = _unit(8, 0)
    a2[1] = Fraction(1)
    roots = [a1, a2]
    for i in range(6):
        v = _unit(8, i + 1)
        v[i] = Fraction(-1)
        roots.append(v)
    return roots[:rank]


def _dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def _check_admissible(type_label: str, rank: int) -> None:
    if type_label not in TYPE_LABELS:
        raise RootDataError(
            f"unsupported root system type {type_label!r}; expected one of {', '.join(TYPE_LABELS)}"
        )
    minimum = {"A": 1, "B": 2, "C": 2, "D": 3}
    if type_label in minimum:
        if rank < minimum[type_label]:
            raise RootDataError(
                f"{type_label}_{rank} is not a simple root system "
                f"({type_label}_n requires n >= {minimum[type_label]})"
            )
    else:
        expected = int(type_label[1])
        if rank != expected:
            raise RootDataError(f"{type_label} has rank {expected}, got {rank}")


@dataclass(frozen=True)
class RootSystem:
    type_label: str
    rank: int
    simple_roots: tuple[Vector, ...]
    cartan_matrix: tuple[tuple[int, ...], ...]
    positive_roots: tuple[RootCoords, ...]
    fundamental_weights: tuple[Vector, ...]
    gram: tuple[tuple[Fraction, ...], ...] = field(repr=False)

    @property
    def name(self) -> str:
        return self.type_label if self.type_label.startswith("E") else f"{self.type_label}{self.rank}"

    def ambient(self, coords: Sequence[int | Fraction]) -> Vector:
        """Ambient vector of an element given in simple-root coordinates."""
        dim = len(self.simple_roots[0])
        out = [Fraction(0)] * dim
        for c, root in zip(coords, self.simple_roots):
            if c:
                for k in range(dim):
                    out[k] += c * root[k]
        return tuple(out)

    def inner(self, x: Sequence[int], y: Sequence[int]) -> Fraction:
        """Inner product of two elements in simple-root coordinates."""
        total = Fraction(0)
        for i, xi in enumerate(x):
            if xi:
                row = self.gram[i]
                for j, yj in enumerate(y):
                    if yj:
                        total += xi * yj * row[j]
        return total

    def root_pairing(self, x: Sequence[int], y: Sequence[int]) -> int:
        """<x, y^vee> for x in the root lattice and y a root, both in root coordinates."""
        value = 2 * self.inner(x, y) / self.inner(y, y)
        if value.denominator != 1:
            raise ArithmeticError(f"non-integral pairing <{x}, {y}^vee> = {value}")
        return int(value)

    @cached_property
    def coroot_coords(self) -> dict[RootCoords, RootCoords]:
        """Positive root -> its coroot in simple-coroot coordinates."""
        table = {}
        for root in self.positive_roots:
            norm = self.inner(root, root)
            coords = []
            for k, c in enumerate(root):
                value = Fraction(c) * self.gram[k][k] / norm
                assert value.denominator == 1
                coords.append(int(value))
            table[root] = tuple(coords)
        return table

    @cached_property
    def positive_root_set(self) -> frozenset[RootCoords]:
        return frozenset(self.positive_roots)

    @cached_property
    def highest_root(self) -> RootCoords:
        return max(self.positive_roots, key=sum)

    @cached_property
    def root_as_weight(self) -> dict[RootCoords, tuple[int, ...]]:
        """Positive root -> fundamental-weight coordinates (Cartan row combination)."""
        n = self.rank
        A = self.cartan_matrix
        return {
            root: tuple(sum(root[i] * A[i][j] for i in range(n)) for j in range(n))
            for root in self.positive_roots
        }

    def weight_pairing(self, weight: Sequence[int], root: RootCoords) -> int:
        """<lambda, root^vee> for lambda in fundamental-weight coordinates."""
        return sum(c * w for c, w in zip(self.coroot_coords[root], weight))

    def reflect_root(self, x: Sequence[int], j: int) -> RootCoords:
        """s_j applied to an element of the root lattice (root coordinates)."""
        c = sum(x[i] * self.cartan_matrix[i][j] for i in range(self.rank))
        out = list(x)
        out[j] -= c
        return tuple(out)

    def reflect_weight(self, weight: Sequence[int], j: int) -> tuple[int, ...]:
        """s_j applied to a weight in fundamental-weight coordinates."""
        c = weight[j]
        if c == 0:
            return tuple(weight)
        row = self.cartan_matrix[j]
        return tuple(w - c * a for w, a in zip(weight, row))

    def is_cominuscule_node(self, node: int) -> bool:
        return self.highest_root[node - 1] == 1

    def cominuscule_nodes(self) -> list[int]:
        return [k + 1 for k, c in enumerate(self.highest_root) if c == 1]

    def neighbours(self, node: int) -> list[int]:
        i = node - 1
        return [j + 1 for j in range(self.rank) if j != i and self.cartan_matrix[i][j] != 0]

    def levi_positive_roots(self, removed: Sequence[int]) -> list[RootCoords]:
        """Positive roots with zero coefficient on every removed node (1-based)."""
        idx = [k - 1 for k in removed]
        return [r for r in self.positive_roots if all(r[k] == 0 for k in idx)]

    def dim_quotient(self, removed: Sequence[int]) -> int:
        """dim G/P where P is the standard parabolic with the given nodes removed."""
        return len(self.positive_roots) - len(self.levi_positive_roots(removed))


def _positive_roots(rank: int, cartan: Sequence[Sequence[int]]) -> list[RootCoords]:
    simple = [tuple(1 if k == i else 0 for k in range(rank)) for i in range(rank)]
    roots = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for j in range(rank):
                pairing = sum(beta[i] * cartan[i][j] for i in range(rank))
                # p = length of the alpha_j-string below beta
                p = 0
                down = list(beta)
                while True:
                    down[j] -= 1
                    if tuple(down) in roots:
                        p += 1
                    else:
                        break
                if p - pairing > 0:
                    up = list(beta)
                    up[j] += 1
                    up = tuple(up)
                    if up not in roots:
                        roots.add(up)
                        nxt.append(up)
        layer = nxt
    return sorted(roots, key=lambda r: (sum(r), tuple(-c for c in r)))


def _invert(matrix: Sequence[Sequence[int]]) -> list[list[Fraction]]:
    n = len(matrix)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


@lru_cache(maxsize=None)
def build_root_system(type_label: str, rank: int | None = None) -> RootSystem:
    """Construct the root system of the given type; E6/E7 imply their rank."""
    type_label = type_label.upper()
    if type_label in ("E6", "E7") and rank is None:
        rank = int(type_label[1])
    if rank is None:
        raise RootDataError(f"rank required for type {type_label}")
    _check_admissible(type_label, rank)
    simple = _simple_roots(type_label, rank)
    gram = tuple(tuple(_dot(a, b) for b in simple) for a in simple)
    cartan = tuple(
        tuple(int(2 * gram[i][j] / gram[j][j]) for j in range(rank)) for i in range(rank)
    )
    positive = _positive_roots(rank, cartan)
    # omega_i = sum_k (A^{-1})_{ik} alpha_k with A_{kj} = <alpha_k, alpha_j^vee>
    inv = _invert(cartan)
    weights = []
    for i in range(rank):
        dim = len(simple[0])
        v = [Fraction(0)] * dim
        for k in range(rank):
            if inv[i][k]:
                for c in range(dim):
                    v[c] += inv[i][k] * simple[k][c]
        weights.append(tuple(v))
    return RootSystem(
        type_label=type_label,
        rank=rank,
        simple_roots=tuple(tuple(r) for r in simple),
        cartan_matrix=cartan,
        positive_roots=tuple(positive),
        fundamental_weights=tuple(weights),
        gram=gram,
    )


@dataclass(frozen=True)
class Weight:
    coordinates: Vector

    @classmethod
    def fundamental(cls, rs: RootSystem, i: int) -> "Weight":
        return cls(rs.fundamental_weights[i - 1])

    @classmethod
    def of_root(cls, rs: RootSystem, coords: Sequence[int]) -> "Weight":
        return cls(rs.ambient(coords))

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a + b for a, b in zip(self.coordinates, other.coordinates)))

    def __rmul__(self, k: int) -> "Weight":
        return Weight(tuple(k * a for a in self.coordinates))


def pairing(w: Weight, coroot_index: int, rs: RootSystem) -> int:
    """Cartan pairing <w, alpha_j^vee> with a 1-based simple coroot index."""
    alpha = rs.simple_roots[coroot_index - 1]
    value = 2 * _dot(w.coordinates, alpha) / _dot(alpha, alpha)
    if value.denominator != 1:
        raise ArithmeticError(f"weight is not in the weight lattice: pairing {value}")
    return int(value)


def index_of(rs: RootSystem, marked_node: int) -> int:
    """Fano index of G/P for a cominuscule node: sum of <beta, alpha^vee> over the unipotent radical."""
    if not 1 <= marked_node <= rs.rank:
        raise RootDataError(f"node {marked_node} out of range for {rs.name}")
    if not rs.is_cominuscule_node(marked_node):
        raise RootDataError(
            f"node {marked_node} of {rs.name} has coefficient "
            f"{rs.highest_root[marked_node - 1]} in the highest root; not cominuscule"
        )
    k = marked_node - 1
    alpha = tuple(int(i == k) for i in range(rs.rank))
    return sum(rs.root_pairing(beta, alpha) for beta in rs.positive_roots if beta[k] > 0)


def weyl_group_order(type_label: str, rank: int) -> int:
    from math import factorial

    if type_label == "A":
        return factorial(rank + 1)
    if type_label in ("B", "C"):
        return 2**rank * factorial(rank)
    if type_label == "D":
        return 2 ** (rank - 1) * factorial(rank)
    return {"E6": 51840, "E7": 2903040, "E8": 696729600}[type_label]
