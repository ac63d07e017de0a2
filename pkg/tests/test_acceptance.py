"""Acceptance criteria, one test per criterion.

Each test carries a ``criterion`` marker; the terminal summary prints a
``[PASS]``/``[FAIL]`` line for every one of them.
"""

import time
from fractions import Fraction

import numpy as np
import pytest

from hyperdp.chromcount import (
    boundary_profile,
    chromatic_polynomial,
    count_proper,
    hypertree_poly,
    t_values_acyclic,
    t_values_cycle,
    unicyclic_poly,
)
from hyperdp.cover import (
    GeneralCover,
    apply_gauge,
    canonicalize,
    count_colorings,
    cover_maps,
    extremal_cover,
    natural_cover,
    random_cover,
    random_gauge,
    twist_to_general,
)
from hyperdp.dpfunc import (
    dp_chromatic_number,
    dp_exact,
    dp_upper_bound,
    exact_average,
    monte_carlo_mean,
    strict_less_test,
)
from hyperdp.genlib import graph_cycle, loose_cycle, loose_path, random_hypertree, star_hypertree, unicyclic
from hyperdp.hypercore import HYPERTREE, classify, components, delete_edge, subhypergraph
from hyperdp.verify import connected_catalog, run_all

from conftest import random_hypergraph
from oracles import brute_avoiding, brute_proper

pytestmark = pytest.mark.acceptance

TRIALS = 1000


@pytest.mark.criterion(1, "hypertree counts equal k(k^(r-1)-1)^m")
def test_criterion_01_hypertree_formula():
    start = time.perf_counter()
    checked = 0
    for r in (2, 3, 4):
        for m in range(4):
            trees = [loose_path(r, m)] + [random_hypertree(r, m, seed=s) for s in range(3)]
            for H in trees:
                assert classify(H).classification == HYPERTREE
                for k in range(5):
                    assert count_proper(H, k) == hypertree_poly(r, m, k) == k * (k ** (r - 1) - 1) ** m
                    checked += 1
    assert checked == 3 * 4 * 4 * 5
    assert time.perf_counter() - start < 60


@pytest.mark.criterion(2, "unicyclic counts match the closed form")
def test_criterion_02_unicyclic_formula():
    start = time.perf_counter()
    seen = {}
    for p in (3, 4):
        for m in (0, 1):
            for seed in range(3):
                H = unicyclic(3, m, p, seed=seed)
                for k in (2, 3):
                    base = k**2 - 1
                    want = base ** (m + p) + (-1) ** p * (k - 1) * base**m
                    got = count_proper(H, k)
                    assert got == unicyclic_poly(3, m, p, k) == want
                    seen[(p, m, k)] = got
    assert (seen[(3, 0, 2)], seen[(4, 0, 2)], seen[(3, 1, 2)]) == (26, 82, 78)
    assert brute_proper(unicyclic(3, 1, 3, seed=0), 2) == 78
    assert time.perf_counter() - start < 60


@pytest.mark.criterion(3, "random covers of hypertrees canonicalize to the natural cover")
def test_criterion_03_acyclic_collapse():
    rng = np.random.default_rng(303)
    trees = []
    for m in range(4):
        trees += [loose_path(3, m), star_hypertree(3, m), random_hypertree(3, m, seed=m)]
    for H in trees:
        for k in (2, 3):
            P = count_proper(H, k)
            nat = cover_maps(H, natural_cover(H, k))
            for _ in range(200):
                C = random_cover(H, k, rng)
                can = canonicalize(H, C)
                assert can.free_slots == ()
                assert cover_maps(H, can.cover) == nat
                assert count_colorings(H, C) == P


@pytest.mark.criterion(4, "boundary profiles and t1/t2 closed forms")
def test_criterion_04_profiles():
    T = loose_path(3, 2)
    prof = boundary_profile(T, 1, 2)
    assert prof.constant_split() == (3, 3)
    P, Pm = count_proper(T, 2), count_proper(delete_edge(T, 1), 2)
    assert t_values_acyclic(Pm, P, 2, 3) == (3, 3)

    C = loose_cycle(3, 3)
    prof = boundary_profile(C, 2, 2)
    assert prof.vertices == (4, 0, 5)
    assert prof.constant_split() is None
    assert prof.first_pair_split() == (5, 4)
    P, Pm = count_proper(C, 2), count_proper(delete_edge(C, 2), 2)
    assert t_values_cycle(Pm, P, 2, 3) == (Fraction(5), Fraction(4))
    for t, c in prof.counts.items():
        assert c == (5 if t[0] == t[1] else 4)


@pytest.mark.criterion(5, "odd loose cycle: P_DP = P, witness gauge-equivalent to natural")
def test_criterion_05_odd_cycle():
    start = time.perf_counter()
    H = loose_cycle(3, 3)
    for k, want in ((2, 26), (3, 510)):
        res = dp_exact(H, k)
        assert res.value == want == count_proper(H, k)
        can = canonicalize(H, res.witness)
        assert cover_maps(H, can.cover) == cover_maps(H, natural_cover(H, k))
        assert cover_maps(H, apply_gauge(H, res.witness, can.gauge)) == cover_maps(H, natural_cover(H, k))
    assert time.perf_counter() - start < 60


@pytest.mark.criterion(6, "even loose cycle: P_DP < P, attained by the shifted extremal cover")
def test_criterion_06_even_cycle():
    start = time.perf_counter()
    H = loose_cycle(3, 4)
    for k, want, P in ((2, 80, 82), (3, (3**2 - 1) ** 4 - 1, 4098)):
        res = dp_exact(H, k)
        assert res.value == want < P == count_proper(H, k)
        for e in range(H.m):
            assert count_colorings(H, extremal_cover(H, e, k, "shifted")) == want
    assert time.perf_counter() - start < 120


@pytest.mark.criterion(7, "bound attained exactly iff hypertree")
def test_criterion_07_dichotomy():
    catalog = connected_catalog()
    assert len(catalog) >= 10
    kinds = set()
    for name, H in catalog:
        rep = classify(H)
        assert rep.connected and rep.uniform_r in (2, 3), name
        kinds.add(rep.classification == HYPERTREE)
        for k in (2, 3):
            attained = dp_exact(H, k).value == dp_upper_bound(H, k)
            assert attained == (rep.classification == HYPERTREE), (name, k)
    assert kinds == {True, False}


@pytest.mark.criterion(8, "exact average equals the bound; Monte Carlo within 2%")
def test_criterion_08_expectation():
    H = loose_cycle(3, 3)
    bound = dp_upper_bound(H, 2)
    assert exact_average(H, 2) == bound == 27
    dp = dp_exact(H, 2).value
    mc = monte_carlo_mean(H, 2, 10_000, seed=8)
    assert abs(mc.mean - bound) / bound < Fraction(2, 100)
    assert mc.minimum >= dp
    mc3 = monte_carlo_mean(H, 3, 10_000, seed=8)
    assert abs(mc3.mean - dp_upper_bound(H, 3)) / dp_upper_bound(H, 3) < Fraction(2, 100)
    assert mc3.minimum >= dp_exact(H, 3).value


@pytest.mark.criterion(9, "strict-inequality test on the loose 4-cycle and hypertrees")
def test_criterion_09_strict_less():
    res = strict_less_test(loose_cycle(3, 4), 3, 2)
    assert res.holds and res.lhs == 108 and res.rhs == Fraction(4, 3) * 82
    assert res.dp_value == dp_exact(loose_cycle(3, 4), 2).value == 80 < res.P
    for H in (loose_path(3, 2), loose_path(3, 3), random_hypertree(3, 3, seed=9)):
        for e in range(H.m):
            for k in (2, 3):
                t = strict_less_test(H, e, k)
                assert not t.holds and t.lhs == t.rhs


@pytest.mark.criterion(10, "graph sanity: C4 and C5")
def test_criterion_10_graphs():
    assert dp_exact(graph_cycle(4), 2).value == 0
    assert dp_chromatic_number(graph_cycle(4), 4) == 3
    assert dp_exact(graph_cycle(5), 3).value == 30 == count_proper(graph_cycle(5), 3)


def _instances(seed, n_max=5, m_max=4):
    rng = np.random.default_rng(seed)
    for _ in range(TRIALS):
        yield rng, random_hypergraph(rng, n_max=n_max, m_max=m_max), int(rng.integers(1, 4))


@pytest.mark.criterion(11, "property suites (gauge, monotonicity, P_DP <= P, multiplicativity, interpolation)")
def test_criterion_11_properties():
    # gauge invariance of counts
    for rng, H, k in _instances(1101):
        C = random_cover(H, k, rng)
        assert count_colorings(H, apply_gauge(H, C, random_gauge(H, k, rng))) == count_colorings(H, C)

    # adding a map never increases the count
    for rng, H, k in _instances(1102, n_max=4, m_max=3):
        maps = list(twist_to_general(H, random_cover(H, k, rng)).maps)
        rng.shuffle(maps)
        cut = int(rng.integers(0, len(maps) + 1))
        fewer, more = GeneralCover(k, tuple(maps[:cut])), GeneralCover(k, tuple(maps))
        lo, hi = count_colorings(H, more), count_colorings(H, fewer)
        assert lo <= hi
        assert hi == brute_avoiding(H, k, [dict(p.items) for p in maps[:cut]])

    # P_DP <= P
    for _, H, k in _instances(1103):
        assert dp_exact(H, k).value <= count_proper(H, k)

    # multiplicative over components, both P and P_DP
    for _, H, k in _instances(1104, n_max=6):
        prod_p = prod_dp = 1
        for verts, eids in components(H):
            sub, _ = subhypergraph(H, verts, eids)
            prod_p *= count_proper(sub, k)
            prod_dp *= dp_exact(sub, k).value
        assert count_proper(H, k) == prod_p
        assert dp_exact(H, k).value == prod_dp

    # interpolated polynomial at three points beyond the sample range
    for _, H, _ in _instances(1105):
        poly = chromatic_polynomial(H)
        for k in (H.n + 1, H.n + 2, H.n + 3):
            assert poly(k) == count_proper(H, k)


def test_builtin_claim_suite_passes():
    results = run_all()
    assert all(r.passed for r in results), [r.to_json() for r in results if not r.passed]
