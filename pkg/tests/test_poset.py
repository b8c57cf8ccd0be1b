import pytest
from hypothesis import given, settings, strategies as st

from comin.catalog import describe
from comin.oracles import brute_force_extensions, brute_force_ideals, grassmannian_degree
from comin.poset import (
    dual,
    from_partition,
    iter_sub_ideals,
    linear_extensions_count,
    minuscule_poset,
    order_ideals,
    partition_of,
    rank_generating_function,
    weighted_extensions_count,
)
from comin.root_data import weyl_group_order

from conftest import spaces_up_to

SMALL = spaces_up_to(10)


def test_shapes():
    assert minuscule_poset("Gr(2,4)").size == 4
    assert minuscule_poset("Q(3)").size == 3
    assert minuscule_poset("E6").size == 16
    q3 = minuscule_poset("Q(3)")
    # a chain: every element but the first has exactly one lower cover
    assert [bin(c).count("1") for c in q3.lower_covers] == [0, 1, 1]


def test_ideal_counts():
    assert len(order_ideals(minuscule_poset("Gr(2,4)"))) == 6
    assert len(order_ideals(minuscule_poset("E7"))) == 56


@pytest.mark.parametrize("s", SMALL, ids=lambda s: s.canonical_id)
def test_ideals_against_brute_force(s):
    p = minuscule_poset(s)
    if p.size > 16:
        pytest.skip("too many subsets")
    assert sorted(c.mask for c in order_ideals(p)) == brute_force_ideals(p.size, p.lower_covers)


@pytest.mark.parametrize("s", spaces_up_to(27), ids=lambda s: s.canonical_id)
def test_ideal_count_is_weyl_index(s):
    t, n, node = s.root_type
    p = minuscule_poset(s)
    levi = {  # Weyl group order of the Levi factor, from the removed node
        "A": lambda: weyl_group_order("A", node - 1) * weyl_group_order("A", n - node),
        "B": lambda: weyl_group_order("B", n - 1) if n > 2 else 2,
        "C": lambda: weyl_group_order("A", n - 1),
        "D": lambda: weyl_group_order("D", n - 1) if node == 1 else weyl_group_order("A", n - 1),
        "E6": lambda: weyl_group_order("D", 5),
        "E7": lambda: weyl_group_order("E6", 6),
    }[t]()
    assert len(order_ideals(p)) * levi == weyl_group_order(t, n)


def test_extension_examples():
    g = minuscule_poset("Gr(2,4)")
    assert linear_extensions_count(g.fundamental) == 2
    assert linear_extensions_count(minuscule_poset("E6").fundamental) == 78
    assert linear_extensions_count(minuscule_poset("Gr(2,5)").fundamental) == 5
    assert linear_extensions_count(minuscule_poset("Gr(3,6)").fundamental) == 42
    q = minuscule_poset("Q(7)")
    assert all(linear_extensions_count(c) == 1 for c in order_ideals(q))


@pytest.mark.parametrize("k,n", [(2, 4), (2, 5), (3, 6), (2, 7), (3, 7), (4, 8)])
def test_grassmannian_degree_hook_formula(k, n):
    p = minuscule_poset(f"Gr({k},{n})")
    assert linear_extensions_count(p.fundamental) == grassmannian_degree(k, n)


@pytest.mark.parametrize("s", spaces_up_to(8), ids=lambda s: s.canonical_id)
def test_extensions_against_enumeration(s):
    p = minuscule_poset(s)
    for c in order_ideals(p):
        assert linear_extensions_count(c) == brute_force_extensions(p.size, p.lower_covers, c.mask)


def test_weighted_extensions_lagrangian():
    # the quadric Q^3 = LG(2) has degree 2, the Lagrangian LG(3) degree 16
    assert weighted_extensions_count(minuscule_poset("LG(2)").fundamental) == 2
    assert weighted_extensions_count(minuscule_poset("LG(3)").fundamental) == 16
    assert 2 in minuscule_poset("LG(3)").chevalley_weights


@pytest.mark.parametrize("s", spaces_up_to(27), ids=lambda s: s.canonical_id)
def test_betti_numbers_palindromic(s):
    b = rank_generating_function(minuscule_poset(s))
    assert b == b[::-1]
    assert b[0] == b[-1] == 1


@pytest.mark.parametrize("s", spaces_up_to(27), ids=lambda s: s.canonical_id)
def test_dual_is_an_involution(s):
    p = minuscule_poset(s)
    ideals = order_ideals(p)
    duals = [dual(c) for c in ideals]
    assert sorted(d.mask for d in duals) == sorted(c.mask for c in ideals)
    for c, d in zip(ideals, duals):
        assert p.is_ideal(d.mask)
        assert d.dim == p.size - c.dim
        assert dual(d) == c


def test_dual_examples():
    p = minuscule_poset("Gr(2,4)")
    assert dual(p.point) == p.fundamental
    middle = [c for c in order_ideals(p) if c.dim == 2]
    assert len(middle) == 2
    # on the 2x2 grid both middle ideals are self-dual
    assert all(dual(c) == c for c in middle)


def test_bitstring_roundtrip_and_rejection():
    p = minuscule_poset("Gr(2,4)")
    for c in order_ideals(p):
        assert p.from_bitstring(c.bitstring) == c
    with pytest.raises(ValueError):
        p.from_bitstring("0100")  # not down-closed
    with pytest.raises(ValueError):
        p.from_bitstring("01")


def test_partition_notation():
    p = minuscule_poset("Gr(2,5)")
    assert partition_of(p.fundamental) == ()
    assert partition_of(p.point) == (3, 3)
    for c in order_ideals(p):
        assert from_partition(p, partition_of(c)) == c
        assert sum(partition_of(c)) == c.codim
    with pytest.raises(ValueError):
        from_partition(p, (4,))
    with pytest.raises(ValueError):
        from_partition(minuscule_poset("Q(5)"), (1,))


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(["Gr(3,6)", "E6", "OG(5)", "LG(4)", "Q(9)"]), st.data())
def test_sub_ideals_are_ideals(name, data):
    p = minuscule_poset(name)
    c = data.draw(st.sampled_from(order_ideals(p)))
    subs = list(iter_sub_ideals(c))
    assert all(p.is_ideal(x.mask) and x.mask & ~c.mask == 0 for x in subs)
    assert c in subs and p.point in subs
    # extensions of c split according to the removed maximal element
    total = sum(linear_extensions_count(p.cls(c.mask & ~(1 << x))) for x in p.maximal_elements(c.mask))
    assert total == (linear_extensions_count(c) if c.mask else 0)


def test_element_order_is_linear_extension():
    for name in ("E7", "OG(6)", "Gr(3,7)"):
        p = minuscule_poset(name)
        for k in range(p.size):
            assert p.lower_covers[k] < (1 << k)
            for j in range(k):
                assert not p.leq(k, j) or k == j


def test_descriptor_accepted():
    assert minuscule_poset(describe("E6")) is minuscule_poset("E6")
