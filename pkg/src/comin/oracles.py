"""Independent reference computations used by the test-suite and selftest.

Nothing here is on a production path.  Each oracle reaches its answer by a
route that shares as little code as possible with the main engine.
"""

from __future__ import annotations

from math import comb, factorial

from .catalog import SpaceDescriptor, describe
from .schubert import FlagVariety


# -- posets by brute force -------------------------------------------------------


def brute_force_ideals(size: int, lower_covers) -> list[int]:
    """All down-closed subsets, by checking every subset."""
    out = []
    for mask in range(1 << size):
        if all(not (mask >> k & 1) or (lower_covers[k] & ~mask) == 0 for k in range(size)):
            out.append(mask)
    return out


def brute_force_extensions(size: int, lower_covers, mask: int) -> int:
    """Linear extensions of an ideal by depth-first enumeration."""

    def go(placed: int) -> int:
        if placed == mask:
            return 1
        total = 0
        for k in range(size):
            if mask >> k & 1 and not placed >> k & 1 and (lower_covers[k] & ~placed) == 0:
                total += go(placed | 1 << k)
        return total

    return go(0)


def grassmannian_degree(k: int, n: int) -> int:
    """Hook length formula for the k x (n-k) rectangle."""
    cells = k * (n - k)
    hooks = 1
    for r in range(k):
        for c in range(n - k):
            hooks *= (k - r - 1) + (n - k - c - 1) + 1
    return factorial(cells) // hooks


# -- partition Littlewood-Richardson rule ----------------------------------------


def _is_lattice(word: list[int]) -> bool:
    counts: dict[int, int] = {}
    for x in word:
        counts[x] = counts.get(x, 0) + 1
        if x > 1 and counts[x] > counts.get(x - 1, 0):
            return False
    return True


def lr_partition(lam: tuple[int, ...], mu: tuple[int, ...], nu: tuple[int, ...]) -> int:
    """c^nu_{lam,mu}: LR tableaux of shape nu/lam and content mu."""
    lam = tuple(lam) + (0,) * (len(nu) - len(lam))
    if len(lam) > len(nu) or any(a > b for a, b in zip(lam, nu)):
        return 0
    if sum(nu) != sum(lam) + sum(mu):
        return 0
    cells = [(r, c) for r in range(len(nu)) for c in range(lam[r], nu[r])]
    rows = len(nu)
    count = 0
    filling: dict[tuple[int, int], int] = {}
    remaining = {i + 1: m for i, m in enumerate(mu) if m}

    def fits(r: int, c: int, x: int) -> bool:
        left = filling.get((r, c - 1))
        if left is not None and left > x:
            return False
        up = filling.get((r - 1, c))
        if up is not None and up >= x:
            return False
        return True

    # fill row by row, left to right; reading word is right-to-left, top-to-bottom
    def go(k: int) -> None:
        nonlocal count
        if k == len(cells):
            word = []
            for r in range(rows):
                word.extend(filling[(r, c)] for c in range(nu[r] - 1, lam[r] - 1, -1))
            if _is_lattice(word):
                count += 1
            return
        r, c = cells[k]
        for x in list(remaining):
            if remaining[x] and fits(r, c, x):
                remaining[x] -= 1
                filling[(r, c)] = x
                go(k + 1)
                del filling[(r, c)]
                remaining[x] += 1

    go(0)
    return count


def partitions_in_box(k: int, w: int) -> list[tuple[int, ...]]:
    out = []

    def go(prefix: tuple[int, ...], cap: int) -> None:
        if len(prefix) == k:
            out.append(tuple(x for x in prefix if x))
            return
        for x in range(cap, -1, -1):
            go(prefix + (x,), x)

    go((), w)
    return out


# -- classical line counts ---------------------------------------------------------


def classical_line_incidence(s: SpaceDescriptor | str) -> dict[tuple[int, int], int]:
    """a[(u, v)] = number of lines meeting general translates of xi^u and xi^v.

    Indices are orbit indices of the flag variety of s.  Lines through points
    of X form the correspondence X <- G/P_{a, nbrs} -> G/P_{nbrs}; the count is
    the degree of the product of the two transported classes on the space of
    lines.  Uses ordinary Schubert calculus on the auxiliary flag varieties only.
    """
    s = describe(s)
    rs = s.root_system()
    node = s.root_type[2]
    nbrs = rs.neighbours(node)
    X = FlagVariety(rs, [node])
    out: dict[tuple[int, int], int] = {}
    if not nbrs:
        # P^1: the only line is X itself
        out[(X.top, X.top)] = 1
        return out
    lines = FlagVariety(rs, nbrs)
    pointed = FlagVariety(rs, [node] + nbrs)
    transported = {}
    for u in range(len(X)):
        up = pointed.pullback_index(u, X)
        transported[u] = pointed.pushforward(up, lines)
    for u, a in transported.items():
        for v, b in transported.items():
            if a is None or b is None:
                continue
            c = lines.product(a, b).get(lines.top, 0)
            if c:
                out[(u, v)] = c
    return out


def segre_degree(a: int, b: int) -> int:
    return comb(a + b, a)


def multinomial_by_expansion(d: int, parts: list[int]) -> int:
    """Coefficient of prod x_j^{b_j} in (x_1 + ... + x_k)^d by repeated binomials."""
    if sum(parts) != d:
        return 0
    total = 1
    left = d
    for b in parts:
        total *= comb(left, b)
        left -= b
    return total
