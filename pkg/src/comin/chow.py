"""Chow ring of a cominuscule G/P in the Schubert basis.

Basis classes are the ``SchubertClass`` ideals of the minuscule poset,
indexed by dimension.  Products come from the localization engine in
``schubert``; the hyperplane class acts through the Chevalley formula.
"""

from __future__ import annotations

from functools import cached_property, lru_cache
from typing import Iterable, Mapping

from .catalog import SpaceDescriptor, describe
from .poset import MinusculePoset, SchubertClass, dual, minuscule_poset, order_ideals
from .schubert import FlagVariety


class ChowElement:
    """Finitely supported integer combination of Schubert classes of one space."""

    __slots__ = ("ring", "coefficients")

    def __init__(self, ring: "ChowRing", coefficients: Mapping[SchubertClass, int] | None = None):
        self.ring = ring
        self.coefficients: dict[SchubertClass, int] = {}
        for c, v in (coefficients or {}).items():
            if c.space_id != ring.space_id:
                raise ValueError(f"class {c!r} of {c.space_id} used in the ring of {ring.space_id}")
            if v:
                self.coefficients[c] = self.coefficients.get(c, 0) + v
        self.coefficients = {c: v for c, v in self.coefficients.items() if v}

    def _check(self, other: "ChowElement") -> None:
        if not isinstance(other, ChowElement):
            raise TypeError(f"cannot combine ChowElement with {type(other).__name__}")
        if other.ring.space_id != self.ring.space_id:
            raise ValueError(f"mixed spaces: {self.ring.space_id} and {other.ring.space_id}")

    def __add__(self, other: "ChowElement") -> "ChowElement":
        self._check(other)
        out = dict(self.coefficients)
        for c, v in other.coefficients.items():
            out[c] = out.get(c, 0) + v
        return ChowElement(self.ring, out)

    def __neg__(self) -> "ChowElement":
        return ChowElement(self.ring, {c: -v for c, v in self.coefficients.items()})

    def __sub__(self, other: "ChowElement") -> "ChowElement":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return ChowElement(self.ring, {c: other * v for c, v in self.coefficients.items()})
        return multiply(self, other)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, ChowElement):
            return NotImplemented
        return self.ring.space_id == other.ring.space_id and self.coefficients == other.coefficients

    def __getitem__(self, c: SchubertClass) -> int:
        return self.coefficients.get(c, 0)

    def __bool__(self) -> bool:
        return bool(self.coefficients)

    def __repr__(self) -> str:
        if not self.coefficients:
            return "0"
        terms = sorted(self.coefficients.items(), key=lambda kv: (kv[0].dim, kv[0].mask))
        return " + ".join(f"{v}*{c!r}" for c, v in terms)


class ChowRing:
    def __init__(self, space: SpaceDescriptor):
        self.space = space
        self.space_id = space.canonical_id
        self.poset: MinusculePoset = minuscule_poset(space)
        rs = space.root_system()
        self.flag = FlagVariety(rs, [space.root_type[2]])
        self.basis: list[SchubertClass] = order_ideals(self.poset)
        self.position = {c: k for k, c in enumerate(self.basis)}
        by_mask = {c.mask: c for c in self.basis}
        # orbit element u <-> ideal N(u); [X_I] = xi^v with N(v) = dual(I)
        self._ideal_of_element: list[SchubertClass] = []
        for e in self.flag.elements:
            mask = 0
            for root in e.inversions:
                mask |= 1 << self.poset._index[root]
            if mask not in by_mask:
                raise AssertionError(f"inversion set of {e.word} is not an order ideal")
            self._ideal_of_element.append(by_mask[mask])
        if len(set(self._ideal_of_element)) != len(self.basis):
            raise AssertionError("W^P does not biject onto the order ideals")
        element_of_ideal = {c: k for k, c in enumerate(self._ideal_of_element)}
        self._xi_of_class = [element_of_ideal[dual(c)] for c in self.basis]
        self._class_of_xi = [0] * len(self.basis)
        for k, x in enumerate(self._xi_of_class):
            self._class_of_xi[x] = k

    # -- basis helpers ----------------------------------------------------------

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def fundamental(self) -> SchubertClass:
        return self.poset.fundamental

    @property
    def point(self) -> SchubertClass:
        return self.poset.point

    @cached_property
    def hyperplane(self) -> SchubertClass:
        (h,) = [c for c in self.basis if c.dim == self.dim - 1]
        return h

    def element(self, coefficients: Mapping[SchubertClass, int] | None = None) -> ChowElement:
        return ChowElement(self, coefficients)

    def one(self) -> ChowElement:
        return ChowElement(self, {self.fundamental: 1})

    def basis_of_dim(self, d: int) -> list[SchubertClass]:
        return [c for c in self.basis if c.dim == d]

    def xi_index(self, c: SchubertClass) -> int:
        """Orbit index of the codimension-indexed class equal to [X_c]."""
        return self._xi_of_class[self.position[c]]

    def class_of_xi(self, u: int) -> SchubertClass:
        return self.basis[self._class_of_xi[u]]

    def inversion_ideal(self, u: int) -> SchubertClass:
        return self._ideal_of_element[u]

    # -- products ---------------------------------------------------------------

    def lr_index(self, i: int, j: int) -> dict[int, int]:
        """Structure constants on basis positions: basis[i] * basis[j]."""
        prod = self.flag.product(self._xi_of_class[i], self._xi_of_class[j])
        return {self._class_of_xi[x]: c for x, c in prod.items()}

    def chevalley_index(self, i: int) -> dict[int, int]:
        u = self._xi_of_class[i]
        return {self._class_of_xi[v]: coeffs[0] for v, coeffs in self.flag.covers[u]}

    def fundamental_degree(self) -> int:
        return degree(self.fundamental)

    def pairing_matrix(self) -> list[list[int]]:
        """P[i][j] = coefficient of the point class in basis[i] * basis[j]."""
        n = len(self.basis)
        pt = self.position[self.point]
        return [[self.lr_index(i, j).get(pt, 0) for j in range(n)] for i in range(n)]


@lru_cache(maxsize=None)
def _ring(canonical_id: str) -> ChowRing:
    return ChowRing(describe(canonical_id))


def chow_ring(space: SpaceDescriptor | str) -> ChowRing:
    return _ring(describe(space).canonical_id)


def _ring_of(c: SchubertClass) -> ChowRing:
    return _ring(c.space_id)


def as_element(x: SchubertClass | ChowElement) -> ChowElement:
    if isinstance(x, ChowElement):
        return x
    return ChowElement(_ring_of(x), {x: 1})


def chevalley_H(e: ChowElement | SchubertClass) -> ChowElement:
    """H * e, with H the hyperplane class of the minimal embedding."""
    e = as_element(e)
    ring = e.ring
    out: dict[SchubertClass, int] = {}
    for c, v in e.coefficients.items():
        for k, m in ring.chevalley_index(ring.position[c]).items():
            cls = ring.basis[k]
            out[cls] = out.get(cls, 0) + v * m
    return ChowElement(ring, out)


def degree(c: SchubertClass) -> int:
    """Coefficient of the point class in H^{dim c} * [X_c]."""
    e = as_element(c)
    for _ in range(c.dim):
        e = chevalley_H(e)
    return e[e.ring.point]


def lr_coefficients(sigma: SchubertClass, tau: SchubertClass) -> dict[SchubertClass, int]:
    if sigma.space_id != tau.space_id:
        raise ValueError(f"classes of different spaces: {sigma.space_id}, {tau.space_id}")
    ring = _ring_of(sigma)
    prod = ring.lr_index(ring.position[sigma], ring.position[tau])
    return {ring.basis[k]: v for k, v in prod.items()}


def multiply(a: ChowElement | SchubertClass, b: ChowElement | SchubertClass) -> ChowElement:
    a, b = as_element(a), as_element(b)
    if a.ring.space_id != b.ring.space_id:
        raise ValueError(f"mixed spaces: {a.ring.space_id} and {b.ring.space_id}")
    ring = a.ring
    out: dict[SchubertClass, int] = {}
    for c1, v1 in a.coefficients.items():
        i = ring.position[c1]
        for c2, v2 in b.coefficients.items():
            for k, m in ring.lr_index(i, ring.position[c2]).items():
                cls = ring.basis[k]
                out[cls] = out.get(cls, 0) + v1 * v2 * m
    return ChowElement(ring, out)


def power(e: ChowElement, k: int) -> ChowElement:
    out = e.ring.one()
    for _ in range(k):
        out = out * e
    return out


def hyperplane_power_degree(classes: Iterable[SchubertClass]) -> dict[SchubertClass, int]:
    return {c: degree(c) for c in classes}
