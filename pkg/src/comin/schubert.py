"""Schubert calculus on G/P_J through the W-orbit of a dominant weight.

Elements of W^J (minimal coset representatives) are identified with the orbit
of ``omega_J = sum_{j in J} omega_j``; a weight is stored in
fundamental-weight coordinates.  Classes here are *codimension* indexed:
``xi^u`` is the class of the opposite Schubert variety of codimension
``length(u)``.

Structure constants are obtained by equivariant localization evaluated at a
fixed integral torus point.  The equivariant constants of total degree zero
are exactly the ordinary ones, so the specialization loses nothing, and every
intermediate quantity is an integer (values of integral polynomials), which is
asserted at each division.
"""

from __future__ import annotations

import threading
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .root_data import RootCoords, RootSystem

WeightCoords = tuple[int, ...]


@dataclass(frozen=True)
class OrbitElement:
    index: int
    weight: WeightCoords
    length: int
    word: tuple[int, ...]  # 0-based simple reflections, applied left to right to omega_J
    shifts: tuple[RootCoords, ...]  # omega_j - u(omega_j) for j in J, root coordinates
    inversions: frozenset[RootCoords]  # N(u) = {beta > 0 : u(beta) < 0}


class FlagVariety:
    """G/P_J for a set J of (1-based) nodes of a root system."""

    def __init__(self, rs: RootSystem, nodes: Iterable[int]):
        self.rs = rs
        self.nodes = tuple(sorted(set(nodes)))
        if not self.nodes:
            raise ValueError("at least one node is required")
        self._lock = threading.Lock()
        self._products: dict[tuple[int, int], dict[int, int]] = {}
        self._build_orbit()

    # -- orbit -----------------------------------------------------------------

    def _build_orbit(self) -> None:
        rs = self.rs
        n = rs.rank
        J = [j - 1 for j in self.nodes]
        start = tuple(1 if k in J else 0 for k in range(n))
        zero = tuple(0 for _ in range(n))
        elements = [OrbitElement(0, start, 0, (), tuple(zero for _ in J), frozenset())]
        position = {start: 0}
        queue = deque([0])
        A = rs.cartan_matrix
        while queue:
            e = elements[queue.popleft()]
            for i in range(n):
                if e.weight[i] <= 0:
                    continue
                new_weight = rs.reflect_weight(e.weight, i)
                if new_weight in position:
                    continue
                shifts = []
                for jj, j in enumerate(J):
                    d = e.shifts[jj]
                    # <u omega_j, alpha_i^vee> = delta_ij - <d, alpha_i^vee>
                    coeff = int(i == j) - sum(d[k] * A[k][i] for k in range(n))
                    d = list(d)
                    d[i] += coeff
                    shifts.append(tuple(d))
                # new inversion u^{-1}(alpha_i), u^{-1} = s_{w1} ... s_{wk}
                root = tuple(int(k == i) for k in range(n))
                for j in reversed(e.word):
                    root = rs.reflect_root(root, j)
                assert root in rs.positive_root_set
                el = OrbitElement(
                    len(elements),
                    new_weight,
                    e.length + 1,
                    e.word + (i,),
                    tuple(shifts),
                    e.inversions | {root},
                )
                position[new_weight] = el.index
                elements.append(el)
                queue.append(el.index)
        self.elements: list[OrbitElement] = elements
        self.position: dict[WeightCoords, int] = position
        self.dim = max(e.length for e in elements)
        self.by_length: list[list[int]] = [[] for _ in range(self.dim + 1)]
        for e in elements:
            self.by_length[e.length].append(e.index)

    def __len__(self) -> int:
        return len(self.elements)

    def apply_word(self, word: Sequence[int], weight: Sequence[int]) -> WeightCoords:
        w = tuple(weight)
        for i in word:
            w = self.rs.reflect_weight(w, i)
        return w

    def element_weight(self, u: int, nodes: Sequence[int]) -> WeightCoords:
        """u(omega_K) for another node set K, using u's reduced word."""
        n = self.rs.rank
        start = tuple(1 if k + 1 in nodes else 0 for k in range(n))
        return self.apply_word(self.elements[u].word, start)

    @cached_property
    def top(self) -> int:
        """Index of the class of a point (codimension dim)."""
        (idx,) = self.by_length[self.dim]
        return idx

    # -- Chevalley data --------------------------------------------------------

    def _reflection_targets(self, u: int) -> list[tuple[int, RootCoords, int]]:
        """(target, gamma', <lambda, gamma'^vee>) with gamma' = +-gamma and positive pairing."""
        rs = self.rs
        lam = self.elements[u].weight
        out = []
        for gamma in rs.positive_roots:
            c = rs.weight_pairing(lam, gamma)
            if c == 0:
                continue
            gw = rs.root_as_weight[gamma]
            mu = tuple(l - c * g for l, g in zip(lam, gw))
            v = self.position.get(mu)
            if v is None:
                raise AssertionError("orbit not closed under reflections")
            signed = gamma if c > 0 else tuple(-x for x in gamma)
            out.append((v, signed, abs(c)))
        return out

    @cached_property
    def covers(self) -> list[list[tuple[int, tuple[int, ...]]]]:
        """covers[u] = [(v, (c_j for j in J))] over Bruhat covers v of u in W^J.

        c_j = <omega_j, beta^vee> is the equivariant Chevalley coefficient of
        the divisor xi^{s_j} (the Chevalley formula with beta = u^{-1} gamma).
        """
        rs = self.rs
        n = rs.rank
        table = []
        for e in self.elements:
            row = []
            for v, signed, _ in self._reflection_targets(e.index):
                if self.elements[v].length != e.length + 1:
                    continue
                sign = 1 if sum(signed) > 0 else -1
                gamma = signed if sign > 0 else tuple(-x for x in signed)
                coeffs = []
                for jj, j in enumerate(self.nodes):
                    d = e.shifts[jj]
                    u_omega = tuple(
                        int(k == j - 1) - sum(d[i] * rs.cartan_matrix[i][k] for i in range(n))
                        for k in range(n)
                    )
                    coeffs.append(sign * rs.weight_pairing(u_omega, gamma))
                assert all(c >= 0 for c in coeffs) and any(coeffs)
                row.append((v, tuple(coeffs)))
            table.append(sorted(row))
        return table

    def quantum_covers(self, index: int) -> list[list[int]]:
        """Targets of the degree-one term of the quantum Chevalley formula.

        Only meaningful for a maximal parabolic (one node).  For u the targets
        are s_gamma(lambda_u) with <lambda_u, gamma^vee> = 1 and
        length(target) = length(u) + 1 - index.
        """
        if len(self.nodes) != 1:
            raise ValueError("quantum Chevalley rule implemented for maximal parabolics only")
        table = []
        for e in self.elements:
            row = []
            for v, _, c in self._reflection_targets(e.index):
                if c == 1 and self.elements[v].length == e.length + 1 - index:
                    row.append(v)
            table.append(sorted(row))
        return table

    # -- localization ----------------------------------------------------------

    @cached_property
    def torus_point(self) -> tuple[int, ...]:
        # base-B digits: any root-lattice vector with coefficients below B/2
        # in absolute value evaluates to a nonzero integer
        bound = 1
        for e in self.elements:
            for d in e.shifts:
                bound = max(bound, max(abs(x) for x in d))
        base = 2 * bound + 1
        return tuple(base**k for k in range(self.rs.rank))

    def _evaluate(self, coords: Sequence[int]) -> int:
        return sum(c * t for c, t in zip(coords, self.torus_point))

    @cached_property
    def localization(self) -> list[dict[int, int]]:
        """loc[w][v] = xi^v restricted to the fixed point w (nonzero entries only)."""
        rs = self.rs
        covers = self.covers
        shifts_at = [[self._evaluate(d) for d in e.shifts] for e in self.elements]
        table: list[dict[int, int]] = []
        for w in self.elements:
            col: dict[int, int] = {}
            diag = 1
            for gamma in rs.positive_roots:
                if rs.weight_pairing(w.weight, gamma) < 0:
                    diag *= self._evaluate(gamma)
            col[w.index] = diag
            for length in range(w.length - 1, -1, -1):
                for v in self.by_length[length]:
                    jj = next(
                        k for k in range(len(self.nodes)) if shifts_at[w.index][k] != shifts_at[v][k]
                    )
                    denom = shifts_at[w.index][jj] - shifts_at[v][jj]
                    num = 0
                    for target, coeffs in covers[v]:
                        val = col.get(target)
                        if val and coeffs[jj]:
                            num += coeffs[jj] * val
                    if num:
                        q, r = divmod(num, denom)
                        if r:
                            raise ArithmeticError("non-integral localization value")
                        col[v] = q
            table.append(col)
        return table

    def product(self, u: int, v: int) -> dict[int, int]:
        """Ordinary structure constants: xi^u * xi^v = sum c_w xi^w."""
        key = (u, v) if u <= v else (v, u)
        cached = self._products.get(key)
        if cached is not None:
            return cached
        result = self._compute_product(*key)
        with self._lock:
            self._products.setdefault(key, result)
        return result

    def _compute_product(self, u: int, v: int) -> dict[int, int]:
        loc = self.localization
        target = self.elements[u].length + self.elements[v].length
        if target > self.dim:
            return {}
        start = max(self.elements[u].length, self.elements[v].length)
        coeffs: dict[int, int] = {}
        result: dict[int, int] = {}
        for length in range(start, target + 1):
            for x in self.by_length[length]:
                col = loc[x]
                a = col.get(u)
                b = col.get(v)
                value = a * b if a and b else 0
                for w, c in coeffs.items():
                    lw = col.get(w)
                    if lw:
                        value -= c * lw
                if not value:
                    continue
                q, r = divmod(value, col[x])
                if r:
                    raise ArithmeticError("non-integral equivariant structure constant")
                if length == target:
                    result[x] = q
                else:
                    coeffs[x] = q
        for x, c in result.items():
            if c < 0:
                raise ArithmeticError(f"negative structure constant {c}")
        return result

    # -- maps between flag varieties -------------------------------------------

    def pullback_index(self, u: int, coarse: "FlagVariety") -> int:
        """Index in self of pi^* xi^u for u a class of a coarser G/P_K (K subset of J)."""
        weight = coarse.element_weight(u, self.nodes)
        return self.position[weight]

    def pushforward(self, u: int, coarse: "FlagVariety") -> int | None:
        """pi_* xi^u in the coarser G/P_K: index of the image class or None if it vanishes."""
        weight = self.element_weight(u, coarse.nodes)
        image = coarse.position[weight]
        if self.dim - self.elements[u].length == coarse.dim - coarse.elements[image].length:
            return image
        return None
