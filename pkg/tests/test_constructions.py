import math
import warnings
from math import comb

import pytest

from connected_turan.constructions import (
    FamilyParams,
    UndefinedBranchWarning,
    a_x,
    almost_regular,
    broom_case,
    broom_ex_c,
    complete_bipartite,
    f1,
    f1_edges,
    f1_edges_alt,
    f1_split,
    f2,
    f2_edges,
    f2_edges_alt,
    f2_split,
    f3,
    f3_edges,
    f3_edges_alt,
    f3_split,
    g_broom_edges,
    g_family,
    g_family_edges,
    kopylov_ex_c_path,
    lower_bound_hosts,
    p_family,
    p_family_edges,
    s_family,
    s_family_edges,
    s_section5,
    two_connected_bound,
    union_cliques,
    woodall_ex_long_cycle,
    x_sqrt2,
)
from connected_turan.errors import ParameterError
from connected_turan.graph import blocks, edge_count, is_connected


def _family_x_values(k):
    """(x, a) pairs with a defined a_x and a >= x."""
    out = []
    for x in range(1, k):
        try:
            a = a_x(k, x)
        except ParameterError:
            continue
        if a >= x:
            out.append((x, a))
    return out


# ------------------------------------------------------------------ examples

def test_g_family_examples():
    assert edge_count(g_family(10, 6, 2)) == 18
    for k in range(4, 12):
        assert edge_count(g_family(k, k, 1)) == comb(k - 2, 2) + (k - 1)
    with pytest.raises(ParameterError):
        g_family(5, 6, 2)
    with pytest.raises(ParameterError):
        g_family(10, 6, 0)


def test_a_x_examples():
    assert a_x(20, 14) == 17
    assert a_x(20, 9) == 9
    assert a_x(21, 9) == 9
    with pytest.raises(ParameterError):
        a_x(20, 10)
    with pytest.raises(ParameterError):
        a_x(20, 20)


def test_a_x_branches_never_overlap():
    for k in range(4, 400):
        assert not (2 * ((k - 2) // 2) > k)


def test_s_family_examples():
    assert edge_count(s_family(50, 14, 17)) == 205
    g = s_family(100, 9, 9)
    assert edge_count(g) == 407
    assert g.degree(99) == 11
    assert sorted(len(b) for b in blocks(g)).count(9) == 11
    s5 = s_section5(100, 2)
    assert edge_count(s5) == 351
    assert s5 == s_family(100, 9, 11)


def test_p_family_examples():
    assert edge_count(p_family(36, 14, 17)) == 191
    g = p_family(37, 14, 17)
    # 191 plus one spine edge to the 1-vertex leftover path
    assert edge_count(g) == 192
    assert g.degree(36) == 1


def test_f_family_examples():
    assert edge_count(f1(9, 5)) == 15
    assert edge_count(f2(10, 6)) == 19
    assert edge_count(f3(6, 6)) == 9
    assert sorted(len(b) for b in blocks(f3(6, 6))) == [2, 5]
    with pytest.raises(ParameterError):
        f3(10, 7)


def test_almost_regular_examples():
    c7 = almost_regular(7, 2)
    assert edge_count(c7) == 7 and set(c7.degrees()) == {2}
    g = almost_regular(5, 3)
    assert edge_count(g) == 7 and sorted(g.degrees(), reverse=True) == [3, 3, 3, 3, 2]
    h = almost_regular(10, 4)
    assert edge_count(h) == 20 and set(h.degrees()) == {4}
    with pytest.raises(ParameterError):
        almost_regular(4, 4)
    with pytest.raises(ParameterError):
        almost_regular(6, 1)


def test_bipartite_and_union_examples():
    assert edge_count(complete_bipartite(3, 7)) == 21
    u = union_cliques(12, 5)
    assert edge_count(u) == 18 == 12 * 3 // 2
    assert not is_connected(u)
    with pytest.raises(ParameterError):
        union_cliques(10, 5)


def test_formula_examples():
    assert kopylov_ex_c_path(10, 10) == 30
    assert kopylov_ex_c_path(7, 5) == 7
    with pytest.raises(ParameterError):
        kopylov_ex_c_path(9, 10)
    assert woodall_ex_long_cycle(7, 4) == 9
    assert woodall_ex_long_cycle(5, 5) == 7
    assert two_connected_bound(8, 5) == 13
    assert two_connected_bound(20, 6) == 38
    for k in range(10, 20):
        assert kopylov_ex_c_path(k, k) == comb(k - 2, 2) + 2


def test_broom_formula_examples():
    assert broom_ex_c(100, 16, 7) == 450
    assert broom_ex_c(20, 10, 8) == 55
    with pytest.warns(UndefinedBranchWarning):
        v = broom_ex_c(50, 11, 7)
    assert v == max(g_broom_edges(50, 7), f2_edges(50, 7))
    with pytest.raises(ParameterError):
        broom_ex_c(100, 8, 7)
    with pytest.raises(ParameterError):
        broom_ex_c(100, 12, 5)


def test_broom_case_map():
    assert broom_case(16, 7) == "regular"
    assert broom_case(10, 8) == "long"
    assert broom_case(12, 7) == "f1"
    assert broom_case(14, 8) == "f1"
    assert broom_case(13, 8) == "f2f3"


# ----------------------------------------------------------- identity sweeps

def test_woodall_attained_by_f1():
    for n in range(4, 31):
        for k in range(3, n):
            assert f1_edges(n, k) == woodall_ex_long_cycle(n, k) == edge_count(f1(n, k))


def test_f_family_identities_sweep():
    for d in range(4, 11):
        for n in range(d + 1, 61):
            g1 = f1(n, d)
            assert edge_count(g1) == f1_edges(n, d) == f1_edges_alt(n, d)
            p, q = f1_split(n, d)
            expect = [d - 1] * p + ([q + 1] if q else [])
            assert sorted(len(b) for b in blocks(g1)) == sorted(expect)

            g2 = f2(n, d)
            assert edge_count(g2) == f2_edges(n, d) == f2_edges_alt(n, d)
            p, q = f2_split(n, d)
            expect = [d - 1] + [d - 2] * (p - 1) + ([q + 1] if q else [])
            assert sorted(len(b) for b in blocks(g2)) == sorted(expect)

            if d % 2 == 0:
                g3 = f3(n, d)
                assert edge_count(g3) == f3_edges(n, d) == f3_edges_alt(n, d)
                p, q = f3_split(n, d)
                if p >= q:
                    expect = [d - 1] * q + [d - 2] * (p - q)
                    assert edge_count(g3) == (d - 2) * (n - 1) // 2
                else:
                    expect = [d - 1] * p + [q - p + 1]
                    assert edge_count(g3) == p * (d - 2) ** 2 // 2 + comb(q - p + 1, 2)
                bs = blocks(g3)
                assert sorted(len(b) for b in bs) == sorted(expect)
                for b in bs:
                    if len(b) == d - 1:
                        # K_{d-1} minus a perfect matching of the block without the shared vertex
                        inner = g3.induced(b)
                        assert edge_count(inner) == comb(d - 1, 2) - (d - 2) // 2


def test_g_family_identities_sweep():
    for k in range(2, 25):
        for s in range(1, k // 2 + 1):
            for n in range(k, 201, 7 if k > 8 else 1):
                g = g_family(n, k, s)
                assert edge_count(g) == g_family_edges(n, k, s) == comb(k - 2 * s, 2) + s * (n - s) + comb(s, 2)
                assert is_connected(g)


def test_g_family_broom_form():
    for d in range(4, 11):
        h = (d - 1) // 2
        for n in range(d + 1, 41):
            expect = h * (n - math.ceil((d + 1) / 2)) + comb(math.ceil((d + 1) / 2), 2)
            assert edge_count(g_family(n, d, h)) == g_broom_edges(n, d) == expect


def test_two_connected_bound_is_max_of_g_families():
    for n in range(5, 41):
        for k in range(5, n + 1):
            best = max(edge_count(g_family(n, k, 2)), edge_count(g_family(n, k, (k - 1) // 2)))
            assert two_connected_bound(n, k) == best


def _s_structural(n, x, a):
    comps = (n - 1) // a
    left = n - 1 - a * comps
    return comps * comb(x, 2) + comps * (a - x) + max(left - 1, 0) + comps + (1 if left else 0)


def _p_structural(n, x, a):
    comps = n // (a + 1)
    left = n - (a + 1) * comps
    spine = comps - 1 + (1 if left else 0)
    return comps * comb(x, 2) + comps * (a - x + 1) + max(left - 1, 0) + spine


def test_s_and_p_identities_sweep():
    for k in range(4, 25):
        for x, a in _family_x_values(k):
            for n in range(a + 1, 201, 3):
                s = s_family(n, x, a)
                assert edge_count(s) == s_family_edges(n, x, a) == _s_structural(n, x, a)
                assert is_connected(s) and s.n == n
                p = p_family(n, x, a)
                assert edge_count(p) == p_family_edges(n, x, a) == _p_structural(n, x, a)
                assert is_connected(p) and p.n == n


def test_p_family_outside_cliques_degree_at_most_three():
    for k in range(4, 25):
        for x, a in _family_x_values(k):
            if x < 2:
                continue
            for n in range(a + 1, 120, 5):
                g = p_family(n, x, a)
                comps = n // (a + 1)
                for v in range(n):
                    in_clique = v < comps * (a + 1) and v % (a + 1) < x
                    if not in_clique:
                        assert g.degree(v) <= 3


def test_s_family_hub():
    g = s_family(50, 14, 17)
    assert g.degree(49) == 3
    comps = 49 // 17
    for c in range(comps):
        # hub attaches to the far end of each tail
        assert g.has_edge(49, c * 17 + 16)


def test_almost_regular_sweep():
    for n in range(3, 60):
        for r in range(2, min(n, 13)):
            g = almost_regular(n, r)
            degs = g.degrees()
            assert is_connected(g)
            assert edge_count(g) == r * n // 2
            if r * n % 2 == 0:
                assert set(degs) == {r}
            else:
                assert sorted(degs) == [r - 1] + [r] * (n - 1)


def test_lower_bound_hosts_attain_broom_formula():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", UndefinedBranchWarning)
        for k in range(8, 20):
            for d in range(6, k - 1):
                for n in (k, k + 1, 2 * k + 3, 60, 101, 40 * k):
                    hosts = lower_bound_hosts(n, k, d)
                    value = broom_ex_c(n, k, d)
                    # some free host has exactly the formula's edge count
                    assert value in [edge_count(h) for _, h in hosts]
                    for _, h in hosts:
                        assert h.n == n and is_connected(h)
                    if n >= 40 * k:
                        assert value == max(edge_count(h) for _, h in hosts)


def test_small_n_host_can_beat_the_large_n_formula():
    # the formula is a large-n statement; at n = 19 the regular host is ahead
    assert edge_count(almost_regular(19, 8)) == 76 > broom_ex_c(19, 18, 10) == 75


def test_x_sqrt2_is_exact_floor():
    for k in range(1, 3000):
        x = x_sqrt2(k)
        assert 2 * x * x <= k * k < 2 * (x + 1) ** 2


def test_family_params_round_trip():
    cases = [
        FamilyParams("g", {"n": 10, "k": 6, "s": 2}),
        FamilyParams("s", {"n": 50, "k": 20, "x": 14}),
        FamilyParams("p", {"n": 36, "x": 14, "a": 17}),
        FamilyParams("f1", {"n": 9, "d": 5}),
        FamilyParams("f2", {"n": 10, "d": 6}),
        FamilyParams("f3", {"n": 6, "d": 6}),
        FamilyParams("almost_regular", {"n": 5, "r": 3}),
        FamilyParams("complete_bipartite", {"a": 3, "b": 7}),
        FamilyParams("union_cliques", {"n": 12, "k": 5}),
        FamilyParams("s_section5", {"n": 100, "r": 2}),
    ]
    for fp in cases:
        assert edge_count(fp.build()) == fp.edges()
    with pytest.raises(ParameterError):
        FamilyParams("g", {"n": 10}).build()
    with pytest.raises(ParameterError):
        FamilyParams("nope", {}).build()
