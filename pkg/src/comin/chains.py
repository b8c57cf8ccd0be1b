"""Chain intersection numbers delta_X(i) for i-chains of lines.

[C^i] is built recursively: append one copy of C on the right and contract
the junction with the Littlewood-Richardson coefficients.  delta_X(i) is then
the sum over interior labels of multinomial * a^{xi rho_1 ... rho_{i-1} xi} *
prod deg X_rho.

The production evaluator never materialises the tensor.  It carries, for each
possible last label, the exponential generating function of the interior
slots; every slot contributes deg(rho) t^{dim rho} / (dim rho)!.  We store
n! * [t^n] so that everything stays integral.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial
from typing import Callable

from .catalog import SpaceDescriptor, describe
from .chow import ChowRing, chow_ring
from .incidence import IncidenceMatrix, incidence_matrix
from .poset import SchubertClass


class ChainError(ValueError):
    pass


def multinomial(d: int, parts: list[int]) -> int:
    if any(b < 0 for b in parts) or d < 0:
        raise ValueError("multinomial arguments must be non-negative")
    if sum(parts) != d:
        raise ValueError(f"parts sum to {sum(parts)}, expected {d}")
    out = factorial(d)
    for b in parts:
        out //= factorial(b)
    return out


def chain_excess(s: SpaceDescriptor, i: int) -> int:
    """d_i = i (dim V + 1) - dim X."""
    return i * (s.vmrt.dim_V + 1) - s.dim


def _check_level(s: SpaceDescriptor, i: int) -> int:
    if i < 1:
        raise ChainError(f"chain length must be positive, got i = {i}")
    d = chain_excess(s, i)
    if d < 0:
        m = s.vmrt.dim_V
        raise ChainError(
            f"d_{i} = {i}*({m}+1) - {s.dim} = {d} < 0: "
            f"chains of length {i} do not dominate X x X for {s.canonical_id}"
        )
    return d


# -- full tensors ------------------------------------------------------------------


@dataclass
class ChainTensor:
    """[C^i] as sparse coefficients over (i+1)-tuples of basis positions."""

    space: SpaceDescriptor
    level: int
    coefficients: dict[tuple[int, ...], int]

    def classes(self, key: tuple[int, ...]) -> tuple[SchubertClass, ...]:
        basis = chow_ring(self.space).basis
        return tuple(basis[k] for k in key)

    def expected_dim(self) -> int:
        return self.level * (self.space.vmrt.dim_V + 1) + self.space.dim


def level_one(a: IncidenceMatrix, first: int | None = None) -> ChainTensor:
    """The incidence matrix as a level-1 tensor, optionally fixing the first label."""
    coeffs = {k: v for k, v in a.entries.items() if first is None or k[0] == first}
    return ChainTensor(a.space, 1, coeffs)


def extend_chain(t: ChainTensor, a: IncidenceMatrix) -> ChainTensor:
    if t.space.canonical_id != a.space.canonical_id:
        raise ValueError(f"space mismatch: {t.space.canonical_id} vs {a.space.canonical_id}")
    ring = chow_ring(t.space)
    by_row: dict[int, list[tuple[int, int]]] = {}
    for (sg, rp), v in a.entries.items():
        by_row.setdefault(sg, []).append((rp, v))
    out: dict[tuple[int, ...], int] = {}
    for key, c in t.coefficients.items():
        tau = key[-1]
        for sg, row in by_row.items():
            for rho, mu in ring.lr_index(tau, sg).items():
                for rp, v in row:
                    new = key[:-1] + (rho, rp)
                    out[new] = out.get(new, 0) + c * mu * v
    return ChainTensor(t.space, t.level + 1, {k: v for k, v in out.items() if v})


def chain_tensor(s: SpaceDescriptor | str, i: int, first: int | None = None) -> ChainTensor:
    s = describe(s)
    a = incidence_matrix(s)
    t = level_one(a, first)
    for _ in range(i - 1):
        t = extend_chain(t, a)
    return t


def _degrees(ring: ChowRing) -> list[int]:
    from .chow import degree

    return [degree(c) for c in ring.basis]


def delta_naive(s: SpaceDescriptor | str, i: int) -> int:
    """Direct tuple sum over the materialised tensor.  Exponential in i."""
    s = describe(s)
    d = _check_level(s, i)
    ring = chow_ring(s)
    xi = ring.position[ring.fundamental]
    degs = _degrees(ring)
    t = chain_tensor(s, i, first=xi)
    total = 0
    for key, c in t.coefficients.items():
        if key[-1] != xi:
            continue
        interior = key[1:-1]
        dims = [ring.basis[k].dim for k in interior]
        if sum(dims) != d:
            continue
        term = multinomial(d, dims) * c
        for k in interior:
            term *= degs[k]
        total += term
    return total


# -- transfer matrix ---------------------------------------------------------------


@dataclass(frozen=True)
class TransferMatrix:
    """T[tau][rho'] = (K, b): appending one line multiplies by K t^b / b!."""

    space: SpaceDescriptor
    rows: tuple[tuple[tuple[int, int, int], ...], ...]  # rows[tau] = ((rho', K, b), ...)

    @property
    def nnz(self) -> int:
        return sum(len(r) for r in self.rows)


@lru_cache(maxsize=None)
def _transfer(canonical_id: str) -> TransferMatrix:
    ring = chow_ring(canonical_id)
    a = incidence_matrix(canonical_id)
    degs = _degrees(ring)
    N = ring.dim
    by_row: dict[int, list[tuple[int, int]]] = {}
    for (sg, rp), v in a.entries.items():
        by_row.setdefault(sg, []).append((rp, v))
    rows = []
    for tau in range(len(ring.basis)):
        acc: dict[int, list[int]] = {}
        for sg, row in by_row.items():
            b = ring.basis[tau].dim + ring.basis[sg].dim - N
            if b < 0:
                continue
            weight = sum(mu * degs[rho] for rho, mu in ring.lr_index(tau, sg).items())
            if not weight:
                continue
            for rp, v in row:
                entry = acc.setdefault(rp, [0, b])
                assert entry[1] == b
                entry[0] += weight * v
        rows.append(tuple((rp, K, b) for rp, (K, b) in sorted(acc.items()) if K))
    return TransferMatrix(ring.space, tuple(rows))


def transfer_matrix(s: SpaceDescriptor | str) -> TransferMatrix:
    return _transfer(describe(s).canonical_id)


def cost_model(s: SpaceDescriptor | str, i: int) -> dict:
    """Upper bound on big-integer multiply-adds for delta_i via the transfer method."""
    s = describe(s)
    T = transfer_matrix(s)
    d = max(chain_excess(s, i), 0)
    return {
        "basis_size": len(T.rows),
        "transfer_nonzeros": T.nnz,
        "steps": max(i - 1, 0),
        "truncation_degree": d,
        "multiply_adds_bound": T.nnz * max(i - 1, 0),
    }


Vector = list[dict[int, int]]


def transfer_vectors(
    s: SpaceDescriptor | str,
    i: int,
    truncate: int | None = None,
    on_step: Callable[[int, Vector], None] | None = None,
) -> Vector:
    """v_i[rho] = {n: n! [t^n]} for chains xi ... rho of i lines."""
    s = describe(s)
    ring = chow_ring(s)
    a = incidence_matrix(s)
    T = transfer_matrix(s)
    xi = ring.position[ring.fundamental]
    size = len(ring.basis)
    v: Vector = [dict() for _ in range(size)]
    for (sg, rp), c in a.entries.items():
        if sg == xi:
            v[rp][0] = c
    if on_step:
        on_step(1, v)
    for level in range(2, i + 1):
        w: Vector = [dict() for _ in range(size)]
        for tau in range(size):
            if not v[tau]:
                continue
            for rp, K, b in T.rows[tau]:
                target = w[rp]
                for n, c in v[tau].items():
                    m = n + b
                    if truncate is not None and m > truncate:
                        continue
                    target[m] = target.get(m, 0) + c * K * comb(m, b)
        v = [{n: c for n, c in x.items() if c} for x in w]
        if on_step:
            on_step(level, v)
    return v


def delta_i(s: SpaceDescriptor | str, i: int, on_step=None) -> int:
    """delta_X(i) by the transfer method, truncating at degree d_i."""
    s = describe(s)
    d = _check_level(s, i)
    ring = chow_ring(s)
    xi = ring.position[ring.fundamental]
    v = transfer_vectors(s, i, truncate=d, on_step=on_step)
    return v[xi].get(d, 0)


def level_degree(s: SpaceDescriptor, level: int, rho: SchubertClass) -> int:
    """The only degree a level-k vector entry at rho can carry."""
    return level * (s.vmrt.dim_V + 1) - rho.dim
