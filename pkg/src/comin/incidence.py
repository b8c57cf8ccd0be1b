"""Line-incidence matrix: the Kunneth coefficients of the class of collinear pairs.

With C the locus of pairs (x, y) joined by a line, [C] = sum a^{st} [X_s] x [X_t].
Pairing against Poincare-dual classes shows that a^{st} is the number of lines
meeting general translates of X_{dual s} and X_{dual t}, a two-point degree-one
Gromov-Witten invariant.  By the divisor axiom it equals the coefficient of
[X_t] in the q-linear part of H * [X_{dual s}] in quantum cohomology, which the
quantum Chevalley formula gives directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .catalog import SpaceDescriptor, describe
from .chow import ChowElement, ChowRing, chow_ring
from .poset import SchubertClass, dual


@dataclass(frozen=True)
class IncidenceMatrix:
    space: SpaceDescriptor
    basis: tuple[SchubertClass, ...]
    entries: dict  # (i, j) basis positions -> positive int

    def __getitem__(self, key: tuple[SchubertClass, SchubertClass]) -> int:
        ring = chow_ring(self.space)
        s, t = key
        return self.entries.get((ring.position[s], ring.position[t]), 0)

    def row(self, s: SchubertClass) -> dict[SchubertClass, int]:
        i = chow_ring(self.space).position[s]
        return {self.basis[j]: v for (a, j), v in self.entries.items() if a == i}

    def nonzero(self) -> list[tuple[SchubertClass, SchubertClass, int]]:
        return [(self.basis[i], self.basis[j], v) for (i, j), v in sorted(self.entries.items())]

    def as_dense(self) -> list[list[int]]:
        n = len(self.basis)
        return [[self.entries.get((i, j), 0) for j in range(n)] for i in range(n)]


def _quantum_targets(ring: ChowRing) -> list[list[int]]:
    return ring.flag.quantum_covers(ring.space.index)


def quantum_chevalley_q_part(sigma: SchubertClass) -> ChowElement:
    """Coefficient of q in H * [X_sigma] (small quantum product)."""
    ring = chow_ring(sigma.space_id)
    u = ring.xi_index(sigma)
    out: dict[SchubertClass, int] = {}
    for w in _quantum_targets(ring)[u]:
        c = ring.class_of_xi(w)
        out[c] = out.get(c, 0) + 1
    return ring.element(out)


@lru_cache(maxsize=None)
def _incidence(canonical_id: str) -> IncidenceMatrix:
    ring = chow_ring(canonical_id)
    entries: dict[tuple[int, int], int] = {}
    for i, s in enumerate(ring.basis):
        for t, v in quantum_chevalley_q_part(dual(s)).coefficients.items():
            entries[(i, ring.position[t])] = v
    return IncidenceMatrix(ring.space, tuple(ring.basis), entries)


def incidence_matrix(s: SpaceDescriptor | str) -> IncidenceMatrix:
    return _incidence(describe(s).canonical_id)


def cone_class(s: SpaceDescriptor | str) -> SchubertClass:
    """[C_x]: the class swept by lines through a point, read off the fundamental row."""
    s = describe(s)
    ring = chow_ring(s)
    if s.is_projective_space:
        return ring.fundamental
    row = incidence_matrix(s).row(ring.fundamental)
    (c,) = row
    return c


def check_invariants(m: IncidenceMatrix) -> list[str]:
    """Return a list of violated invariants (empty when all hold)."""
    problems = []
    s = m.space
    target = s.dim + s.vmrt.dim_V + 1
    for (i, j), v in m.entries.items():
        if m.entries.get((j, i)) != v:
            problems.append(f"asymmetric at {m.basis[i]!r},{m.basis[j]!r}")
        if m.basis[i].dim + m.basis[j].dim != target:
            problems.append(f"entry off the dimension {target} antidiagonal at {m.basis[i]!r},{m.basis[j]!r}")
        if v <= 0:
            problems.append(f"non-positive entry {v}")
    ring = chow_ring(s)
    row = m.row(ring.fundamental)
    if list(row.values()) != [1]:
        problems.append(f"fundamental row is {row}, expected a single 1")
    return problems
