"""Quick invariant suite, runnable from the command line."""

from __future__ import annotations

import json
import tempfile
import time
from itertools import product
from typing import Callable

from .bounds import char_bound
from .cache import ResultCache
from .catalog import catalog_entries, describe, minimal_rank_examples
from .chains import chain_excess, delta_i, delta_naive
from .chow import chow_ring, degree
from .incidence import check_invariants, incidence_matrix
from .oracles import classical_line_incidence
from .poset import dual, minuscule_poset, order_ideals, weighted_extensions_count
from .root_data import build_root_system, index_of


def _small(max_dim: int):
    return [s for s in catalog_entries(8) if s.dim <= max_dim]


def check_classification() -> str:
    n = 0
    for s in catalog_entries(8):
        rs = build_root_system(s.root_type[0], s.root_type[1])
        node = s.root_type[2]
        assert rs.dim_quotient([node]) == s.dim, s
        assert index_of(rs, node) == s.index, s
        n += 1
    return f"{n} spaces"


def check_degrees(max_dim: int = 10) -> str:
    n = 0
    for s in _small(max_dim):
        for c in chow_ring(s).basis:
            assert degree(c) == weighted_extensions_count(c), (s, c)
            n += 1
    return f"{n} classes"


def check_ring(max_dim: int = 6) -> str:
    triples = 0
    for s in _small(max_dim):
        R = chow_ring(s)
        for a, b, c in product(R.basis, repeat=3):
            assert (R.element({a: 1}) * b) * c == R.element({a: 1}) * (R.element({b: 1}) * c), (s, a, b, c)
            triples += 1
    for s in _small(10):
        R = chow_ring(s)
        pt = R.point
        for a in R.basis:
            row = {b for b in R.basis if R.lr_index(R.position[a], R.position[b]).get(R.position[pt])}
            assert row == {dual(a)}, (s, a)
    return f"{triples} triples"


def check_incidence(max_dim: int = 10) -> str:
    n = 0
    for s in _small(max_dim):
        m = incidence_matrix(s)
        assert not check_invariants(m), (s, check_invariants(m))
        if s.dim <= 6:
            R = chow_ring(s)
            mine = {(R.xi_index(dual(a)), R.xi_index(dual(b))): v for a, b, v in m.nonzero()}
            assert mine == classical_line_incidence(s), s
        n += 1
    return f"{n} spaces"


def check_chains(max_dim: int = 6) -> str:
    n = 0
    for s in _small(max_dim):
        i = 1
        while chain_excess(s, i) <= 8:
            if chain_excess(s, i) >= 0:
                assert delta_i(s, i) == delta_naive(s, i), (s, i)
                if i >= s.r:
                    assert delta_i(s, i) >= 1, (s, i)
                n += 1
            i += 1
    assert delta_i("Gr(2,4)", 2) == 2
    return f"{n} (space, i) pairs"


def check_bounds() -> str:
    r = char_bound("Gr(2,4)", 1)
    assert r.components["smoothness_term"] == 2 and r.components["index_term"] == 4
    for s in minimal_rank_examples():
        if s.canonical_id == "E7":
            continue
        values = [char_bound(s, d).effective_bound for d in range(1, 4)]
        assert values == sorted(values), s
    return "ok"


def check_e6() -> str:
    s = describe("E6")
    R = chow_ring(s)
    assert R.fundamental_degree() == 78
    assert not check_invariants(incidence_matrix(s))
    assert len(order_ideals(minuscule_poset(s))) == 27
    return "deg 78"


def check_e7() -> str:
    assert chow_ring("E7").fundamental_degree() == 13110
    return "deg 13110"


def check_cache() -> str:
    with tempfile.TemporaryDirectory() as tmp:
        c = ResultCache(tmp)
        first = c.get_or_compute("Gr(2,4)", "probe", {"x": 1}, lambda: {"v": "2"})
        path = c.path_for(c.key("Gr(2,4)", "probe", {"x": 1}))
        entry = json.loads(path.read_text())
        entry["payload"]["v"] = "3"
        path.write_text(json.dumps(entry))
        again = c.get_or_compute("Gr(2,4)", "probe", {"x": 1}, lambda: {"v": "2"})
        assert c.last_status == "miss" and again == first
    return "corrupt entry recomputed"


GROUPS: list[tuple[str, Callable[[], str]]] = [
    ("classification", check_classification),
    ("degrees", check_degrees),
    ("ring axioms", check_ring),
    ("incidence", check_incidence),
    ("chains", check_chains),
    ("bounds", check_bounds),
    ("E6 spot checks", check_e6),
    ("cache", check_cache),
]


def run(include_e7: bool = False, out=print) -> bool:
    groups = list(GROUPS)
    if include_e7:
        groups.append(("E7 degree", check_e7))
    ok = True
    for name, fn in groups:
        t = time.perf_counter()
        try:
            detail = fn()
            status = "PASS"
        except Exception as exc:  # report every group, then fail
            detail = f"{type(exc).__name__}: {exc}"
            status = "FAIL"
            ok = False
        out(f"{status}  {name:<16} {detail}  ({time.perf_counter() - t:.2f}s)")
    return ok
