"""Registry of cominuscule varieties, their line-tangent varieties and chain lengths."""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterator

from .root_data import RootDataError, build_root_system, index_of


class CatalogError(ValueError):
    pass


FAMILIES = (
    "Grassmannian",
    "OddQuadric",
    "LagrangianGrass",
    "OrthogonalGrass",
    "EvenQuadric",
    "CayleyPlane",
    "Freudenthal",
)

NAMING_HELP = (
    "valid spaces: Gr(i,N) with 1<=i<N, P(n) for Gr(1,n+1), Q(m) with m>=3, "
    "LG(n) with n>=1, OG(n) with n>=3, E6 (Cayley plane), E7 (Freudenthal variety), "
    "or a root spelling such as A,3,2"
)


@dataclass(frozen=True)
class VmrtDescriptor:
    kind: str  # "Segre", "Veronese" or "Cominuscule"
    params: tuple[int, ...]
    dim_V: int
    embedding_weight: str
    space: "SpaceDescriptor | None" = None

    @property
    def degree(self) -> int:
        """Degree in the projectivised tangent space; cominuscule kinds defer to the chow ring."""
        if self.kind == "Segre":
            a, b = self.params
            return comb(a + b, a)
        if self.kind == "Veronese":
            return 2 ** self.params[0]
        from .chow import chow_ring

        return chow_ring(self.space).fundamental_degree()

    @property
    def is_projective_space(self) -> bool:
        return self.kind == "Segre" and min(self.params) == 0

    @property
    def label(self) -> str:
        if self.kind == "Segre":
            a, b = self.params
            if a == 0 or b == 0:
                return f"P^{a + b}"
            return f"Segre(P^{a} x P^{b})"
        if self.kind == "Veronese":
            return f"Veronese(P^{self.params[0]}, O(2))"
        return self.space.canonical_id

    def to_record(self) -> dict:
        record = {
            "kind": self.kind,
            "params": list(self.params),
            "dim_V": self.dim_V,
            "embedding_weight": self.embedding_weight,
        }
        if self.space is not None:
            record["space"] = self.space.canonical_id
        return record


@dataclass(frozen=True)
class SpaceDescriptor:
    family: str
    params: tuple[int, ...]
    root_type: tuple[str, int, int]
    dim: int
    index: int
    r: int

    @property
    def canonical_id(self) -> str:
        f, p = self.family, self.params
        if f == "Grassmannian":
            return f"Gr({p[0]},{p[1]})"
        if f in ("OddQuadric", "EvenQuadric"):
            return f"Q({p[0]})"
        if f == "LagrangianGrass":
            return f"LG({p[0]})"
        if f == "OrthogonalGrass":
            return f"OG({p[0]})"
        return "E6" if f == "CayleyPlane" else "E7"

    @property
    def is_projective_space(self) -> bool:
        return self.family == "Grassmannian" and self.params[0] in (1, self.params[1] - 1)

    @property
    def vmrt(self) -> VmrtDescriptor:
        return _vmrt(self)

    def root_system(self):
        t, n, _ = self.root_type
        return build_root_system(t, n)

    def to_record(self) -> dict:
        return {
            "family": self.family,
            "root_type": list(self.root_type),
            "dim": self.dim,
            "index": self.index,
            "r": self.r,
            "vmrt": self.vmrt.to_record(),
        }

    def __str__(self) -> str:
        return self.canonical_id


# -- Table values ---------------------------------------------------------------


def _table_values(family: str, params: tuple[int, ...]) -> tuple[tuple[str, int, int], int, int, int]:
    """(root_type, dim, index, r) straight from the classification tables."""
    if family == "Grassmannian":
        i, N = params
        n = N - 1
        return ("A", n, i), i * (n + 1 - i), n + 1, min(i, n + 1 - i)
    if family == "OddQuadric":
        n = (params[0] + 1) // 2
        return ("B", n, 1), 2 * n - 1, 2 * n - 1, 2
    if family == "LagrangianGrass":
        n = params[0]
        return ("C", n, n), n * (n + 1) // 2, n + 1, n
    if family == "OrthogonalGrass":
        n = params[0]
        return ("D", n, n), n * (n - 1) // 2, 2 * n - 2, n // 2
    if family == "EvenQuadric":
        n = (params[0] + 2) // 2
        return ("D", n, 1), 2 * n - 2, 2 * n - 2, 2
    if family == "CayleyPlane":
        return ("E6", 6, 6), 16, 12, 2
    if family == "Freudenthal":
        return ("E7", 7, 7), 27, 18, 3
    raise CatalogError(f"unknown family {family!r}; {NAMING_HELP}")


def _normalize(family: str, params: tuple[int, ...]) -> tuple[str, tuple[int, ...]]:
    if family == "Grassmannian":
        i, N = params
        if not (N >= 2 and 1 <= i <= N - 1):
            raise CatalogError(f"Gr({i},{N}) needs 1 <= i < N")
        return family, (i, N)
    if family in ("OddQuadric", "EvenQuadric", "Quadric"):
        (m,) = params
        if m <= 2:
            raise CatalogError(
                f"Q({m}) is outside the classification "
                "(Q(2) is P^1 x P^1, type D_2 is not simple; Q(1) is a conic)"
            )
        if m == 3:
            return "LagrangianGrass", (2,)
        if m == 4:
            return "Grassmannian", (2, 4)
        return ("OddQuadric" if m % 2 else "EvenQuadric"), (m,)
    if family == "LagrangianGrass":
        (n,) = params
        if n < 1:
            raise CatalogError("LG(n) needs n >= 1")
        if n == 1:
            return "Grassmannian", (1, 2)
        return family, (n,)
    if family == "OrthogonalGrass":
        (n,) = params
        if n <= 2:
            raise CatalogError(f"OG({n}) is outside the classification (type D_{n} is not simple)")
        if n == 3:
            return "Grassmannian", (1, 4)
        return family, (n,)
    if family in ("CayleyPlane", "Freudenthal"):
        return family, ()
    raise CatalogError(f"unknown family {family!r}; {NAMING_HELP}")


def _from_root(type_label: str, rank: int, node: int) -> tuple[str, tuple[int, ...]]:
    try:
        rs = build_root_system(type_label, rank)
    except RootDataError as exc:
        raise CatalogError(str(exc)) from exc
    if not 1 <= node <= rs.rank:
        raise CatalogError(f"node {node} out of range for {rs.name}")
    if not rs.is_cominuscule_node(node):
        raise CatalogError(
            f"node {node} of {rs.name} is not cominuscule "
            f"(coefficient {rs.highest_root[node - 1]} in the highest root)"
        )
    t, n = rs.type_label, rs.rank
    if t == "A":
        return "Grassmannian", (node, n + 1)
    if t == "B":
        return "Quadric", (2 * n - 1,)
    if t == "C":
        return "LagrangianGrass", (n,)
    if t == "D":
        if node == 1:
            return "Quadric", (2 * n - 2,)
        return "OrthogonalGrass", (n,)
    return ("CayleyPlane" if t == "E6" else "Freudenthal"), ()


_NAME_PATTERNS = [
    (re.compile(r"^gr\((\d+),(\d+)\)$"), "Grassmannian"),
    (re.compile(r"^p\^?\(?(\d+)\)?$"), "Projective"),
    (re.compile(r"^q\^?\(?(\d+)\)?$"), "Quadric"),
    (re.compile(r"^lg\((\d+)(?:,(\d+))?\)$"), "LagrangianGrass"),
    (re.compile(r"^og\((\d+)(?:,(\d+))?\)$"), "OrthogonalGrass"),
]

_ALIASES = {
    "e6": "CayleyPlane",
    "cayleyplane": "CayleyPlane",
    "e7": "Freudenthal",
    "freudenthal": "Freudenthal",
}


def parse_space(text: str) -> tuple[str, tuple[int, ...]]:
    """Parse a space name into (family, params) before normalization."""
    key = re.sub(r"\s+", "", text).lower()
    if key in _ALIASES:
        return _ALIASES[key], ()
    root = re.match(r"^([a-e]\d?),(\d+)(?:,(\d+))?$", key)
    if root:
        t = root.group(1).upper()
        if root.group(3) is None:
            if t in ("E6", "E7"):
                return _from_root(t, int(t[1]), int(root.group(2)))
            raise CatalogError(f"root spelling needs type,rank,node: {text!r}")
        return _from_root(t, int(root.group(2)), int(root.group(3)))
    for pattern, family in _NAME_PATTERNS:
        m = pattern.match(key)
        if m:
            nums = tuple(int(g) for g in m.groups() if g is not None)
            if family == "Projective":
                if nums[0] < 1:
                    raise CatalogError("P(n) needs n >= 1")
                return "Grassmannian", (1, nums[0] + 1)
            if family in ("LagrangianGrass", "OrthogonalGrass"):
                if len(nums) == 2 and nums[1] != 2 * nums[0]:
                    raise CatalogError(f"expected the form {family[0]}G(n,2n), got {text!r}")
                nums = nums[:1]
            return family, nums
    raise CatalogError(f"unknown space {text!r}; {NAMING_HELP}")


@lru_cache(maxsize=None)
def _describe(family: str, params: tuple[int, ...]) -> SpaceDescriptor:
    family, params = _normalize(family, params)
    root_type, dim, index, r = _table_values(family, params)
    rs = build_root_system(root_type[0], root_type[1])
    node = root_type[2]
    computed_dim = rs.dim_quotient([node])
    computed_index = index_of(rs, node)
    if (computed_dim, computed_index) != (dim, index):
        raise AssertionError(
            f"{family}{params}: table (dim, index) = {(dim, index)} "
            f"but root data gives {(computed_dim, computed_index)}"
        )
    return SpaceDescriptor(family, params, root_type, dim, index, r)


def describe(space: "str | tuple | SpaceDescriptor") -> SpaceDescriptor:
    """Resolve a space name, (family, params) pair, or (type, rank, node) triple."""
    if isinstance(space, SpaceDescriptor):
        return space
    if isinstance(space, str):
        family, params = parse_space(space)
    elif len(space) == 3 and isinstance(space[0], str) and space[0].upper() in ("A", "B", "C", "D", "E6", "E7"):
        family, params = _from_root(space[0].upper(), int(space[1]), int(space[2]))
    else:
        family, params = space[0], tuple(space[1])
    return _describe(family, tuple(params))


def _vmrt(s: SpaceDescriptor) -> VmrtDescriptor:
    f, p = s.family, s.params
    if f == "Grassmannian":
        i, N = p
        return VmrtDescriptor("Segre", (i - 1, N - 1 - i), N - 2, "O(1,1)")
    if f == "LagrangianGrass":
        n = p[0]
        return VmrtDescriptor("Veronese", (n - 1, 2), n - 1, "O(2)")
    if f in ("OddQuadric", "EvenQuadric"):
        inner = describe(("Quadric", (p[0] - 2,)))
    elif f == "OrthogonalGrass":
        inner = describe(("Grassmannian", (2, p[0])))
    elif f == "CayleyPlane":
        inner = describe(("OrthogonalGrass", (5,)))
    else:
        inner = describe(("CayleyPlane", ()))
    return VmrtDescriptor("Cominuscule", (), inner.dim, "O(1)", inner)


def vmrt_tower(s: SpaceDescriptor) -> list[VmrtDescriptor]:
    """s -> V(s) -> V(V(s)) -> ... ending at the first Segre or Veronese kind."""
    tower = []
    v = s.vmrt
    while True:
        tower.append(v)
        if v.kind != "Cominuscule":
            return tower
        v = v.space.vmrt


def pointed_lines_dim(s: SpaceDescriptor) -> int:
    """dim G/P_{I(alpha)}, the space of lines with a marked point."""
    rs = s.root_system()
    node = s.root_type[2]
    return rs.dim_quotient([node] + rs.neighbours(node))


def levi_vmrt_dim(s: SpaceDescriptor) -> int:
    """dim of L^ss / (P_{I(alpha)} cap L^ss), computed from the Levi's roots."""
    rs = s.root_system()
    node = s.root_type[2]
    levi = rs.levi_positive_roots([node])
    nbrs = [k - 1 for k in rs.neighbours(node)]
    return sum(1 for r in levi if any(r[k] for k in nbrs))


def double_coset_count(s: SpaceDescriptor) -> int:
    """Number of P-P double cosets in G, i.e. W_P-orbits on W/W_P."""
    from .schubert import FlagVariety

    rs = s.root_system()
    node = s.root_type[2]
    flag = FlagVariety(rs, [node])
    parent = list(range(len(flag)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in flag.elements:
        for i in range(rs.rank):
            if i == node - 1:
                continue
            other = flag.position[rs.reflect_weight(e.weight, i)]
            a, b = find(e.index), find(other)
            if a != b:
                parent[a] = b
    return len({find(x) for x in range(len(parent))})


def catalog_entries(max_rank: int = 8, include_exceptional: bool = True) -> Iterator[SpaceDescriptor]:
    """Every distinct catalog entry with root-system rank at most ``max_rank``."""
    seen = set()
    for t in ("A", "B", "C", "D"):
        lo = {"A": 1, "B": 2, "C": 2, "D": 3}[t]
        for n in range(lo, max_rank + 1):
            rs = build_root_system(t, n)
            for node in rs.cominuscule_nodes():
                s = describe((t, n, node))
                if s.canonical_id not in seen:
                    seen.add(s.canonical_id)
                    yield s
    if include_exceptional:
        for name in ("E6", "E7"):
            yield describe(name)


def minimal_rank_examples() -> list[SpaceDescriptor]:
    """One representative per family at the smallest rank where it is not folded away."""
    return [describe(x) for x in ("Gr(2,4)", "Q(5)", "LG(2)", "OG(4)", "Q(6)", "E6", "E7")]
