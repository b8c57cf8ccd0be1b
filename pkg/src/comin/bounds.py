"""Characteristic lower bounds for d-rigidity of cominuscule varieties."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .catalog import SpaceDescriptor, describe


def very_ample_twist(d: int) -> int:
    if d < 1:
        raise ValueError(f"d must be positive, got {d}")
    return d * (d + 1) // 2


def smoothness_bound(e: int, m: int) -> int:
    """e (e-1)^m: bound on the length of the singular scheme of a degree-e variety."""
    if e < 1 or m < 0:
        raise ValueError(f"need e >= 1 and m >= 0, got e={e}, m={m}")
    return e * (e - 1) ** m


@dataclass
class BoundReport:
    space: SpaceDescriptor
    d: int
    case: int
    components: dict  # name -> int, or None for a skipped delta
    e: int
    m: int
    chain_length: int
    child: "BoundReport | None" = None
    notes: list[str] = field(default_factory=list)

    @property
    def bound(self) -> int:
        return max(v for v in self.components.values() if v is not None)

    @property
    def binding(self) -> str:
        b = self.bound
        return next(k for k, v in self.components.items() if v == b)

    @property
    def effective_bound(self) -> int:
        """Largest bound along the recursive tower (p must exceed all of them)."""
        below = self.child.effective_bound if self.child else 0
        return max(self.bound, below)

    def depth(self) -> int:
        return 1 + (self.child.depth() if self.child else 0)

    def to_record(self) -> dict:
        rec = {
            "space": self.space.canonical_id,
            "d": str(self.d),
            "case": self.case,
            "e": str(self.e),
            "m": self.m,
            "chain_length": self.chain_length,
            "components": {k: (None if v is None else str(v)) for k, v in self.components.items()},
            "bound": str(self.bound),
            "binding": self.binding,
            "effective_bound": str(self.effective_bound),
            "notes": list(self.notes),
            "child": self.child.to_record() if self.child else None,
        }
        return rec


def _delta(s: SpaceDescriptor, i: int):
    from .chains import delta_i

    return delta_i(s, i)


def char_bound(
    s: SpaceDescriptor | str,
    d: int,
    skip_delta: bool = False,
    chain_length: int | None = None,
) -> BoundReport:
    s = describe(s)
    t, n, node = s.root_type
    tw = very_ample_twist(d)
    length = s.dim if chain_length is None else chain_length
    notes = []
    child = None
    if t == "A":
        case = 1
        m = n - 1
        e = tw ** (n - 1) * comb(n - 1, node - 1)
        index_term = n + 1
    elif t == "C":
        case = 2
        m = n - 1
        e = (d * (d + 1)) ** (n - 1)
        index_term = n + 1
    else:
        case = 3
        v = s.vmrt
        m = v.dim_V
        e = tw**m * v.degree
        index_term = s.index
        if v.space is not None and not v.space.is_projective_space:
            child = char_bound(v.space, tw, skip_delta=skip_delta)
            notes.append(f"also requires {v.space.canonical_id} to be {tw}-rigid, i.e. p > {child.effective_bound}")
        else:
            notes.append(f"V = {v.label} is rigid in every characteristic")
    if skip_delta:
        delta_term = None
        notes.append("delta term skipped")
    else:
        delta_term = _delta(s, length)
    components = {
        "smoothness_term": smoothness_bound(e, m),
        "index_term": index_term,
        "delta_term": delta_term,
    }
    return BoundReport(s, d, case, components, e, m, length, child, notes)
