from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from comin.root_data import (
    RootDataError,
    Weight,
    build_root_system,
    index_of,
    pairing,
    weyl_group_order,
)

SYSTEMS = [("A", n) for n in range(1, 9)] + [("B", n) for n in range(2, 9)] + \
    [("C", n) for n in range(2, 9)] + [("D", n) for n in range(3, 9)] + [("E6", 6), ("E7", 7)]

EXPECTED_COUNTS = {"A": lambda n: n * (n + 1) // 2, "B": lambda n: n * n, "C": lambda n: n * n,
                   "D": lambda n: n * (n - 1), "E6": lambda n: 36, "E7": lambda n: 63}


@pytest.mark.parametrize("t,n", SYSTEMS)
def test_cartan_and_root_counts(t, n):
    rs = build_root_system(t, n)
    A = rs.cartan_matrix
    for i in range(n):
        assert A[i][i] == 2
        for j in range(n):
            if i != j:
                assert A[i][j] <= 0
                assert (A[i][j] == 0) == (A[j][i] == 0)
    assert len(rs.positive_roots) == EXPECTED_COUNTS[t](n)


@pytest.mark.parametrize("t,n", SYSTEMS)
def test_fundamental_weights_are_dual_to_coroots(t, n):
    rs = build_root_system(t, n)
    for i in range(1, n + 1):
        w = Weight.fundamental(rs, i)
        for j in range(1, n + 1):
            assert pairing(w, j, rs) == (1 if i == j else 0)


def test_small_examples():
    a3 = build_root_system("A", 3)
    assert len(a3.positive_roots) == 6
    assert len(build_root_system("E7", 7).positive_roots) == 63
    assert pairing(Weight.fundamental(a3, 1), 1, a3) == 1
    assert pairing(Weight.fundamental(a3, 1), 2, a3) == 0
    theta = Weight.of_root(a3, a3.highest_root)
    # theta = omega_1 + omega_3 for A3
    assert [pairing(theta, j, a3) for j in (1, 2, 3)] == [1, 0, 1]


@pytest.mark.parametrize("t,n", [("D", 2), ("B", 1), ("E6", 5), ("F", 4), ("A", 0)])
def test_rejects_unsupported(t, n):
    with pytest.raises(RootDataError):
        build_root_system(t, n)


def test_index_examples():
    for n in range(1, 8):
        rs = build_root_system("A", n)
        for i in range(1, n + 1):
            assert index_of(rs, i) == n + 1
    assert index_of(build_root_system("E7", 7), 7) == 18
    for n in range(3, 8):
        assert index_of(build_root_system("D", n), 1) == 2 * n - 2
    with pytest.raises(RootDataError):
        index_of(build_root_system("E7", 7), 1)


@pytest.mark.parametrize("t,n", SYSTEMS)
def test_cominuscule_criterion(t, n):
    rs = build_root_system(t, n)
    theta = rs.highest_root
    for node in range(1, n + 1):
        assert rs.is_cominuscule_node(node) == (theta[node - 1] == 1)
        if not rs.is_cominuscule_node(node):
            assert theta[node - 1] >= 2


@pytest.mark.parametrize("t,n", [("A", 4), ("B", 3), ("C", 3), ("D", 4), ("E6", 6)])
def test_weyl_order_from_orbit(t, n):
    from comin.schubert import FlagVariety

    rs = build_root_system(t, n)
    # the orbit of a regular weight is a free W-orbit
    assert len(FlagVariety(rs, range(1, n + 1))) == weyl_group_order(t, n)


def combine(rs, coeffs):
    w = 0 * Weight.fundamental(rs, 1)
    for i, c in enumerate(coeffs):
        w = w + c * Weight.fundamental(rs, i + 1)
    return w


@given(st.sampled_from(SYSTEMS), st.data())
def test_pairing_is_bilinear(system, data):
    t, n = system
    rs = build_root_system(t, n)
    ints = st.integers(-5, 5)
    a = [data.draw(ints) for _ in range(n)]
    b = [data.draw(ints) for _ in range(n)]
    k = data.draw(ints)
    wa, wb = combine(rs, a), combine(rs, b)
    j = data.draw(st.integers(1, n))
    assert pairing(wa + k * wb, j, rs) == pairing(wa, j, rs) + k * pairing(wb, j, rs)


@pytest.mark.parametrize("t,n", SYSTEMS)
def test_root_pairing_matches_ambient_inner_product(t, n):
    rs = build_root_system(t, n)
    for x in rs.positive_roots[:10]:
        for y in rs.positive_roots[-10:]:
            expected = 2 * rs.inner(x, y) / rs.inner(y, y)
            assert Fraction(rs.root_pairing(x, y)) == expected
