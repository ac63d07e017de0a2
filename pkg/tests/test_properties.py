import json

from hypothesis import given, settings
from hypothesis import strategies as st

from hyperdp.chromcount import count_proper
from hyperdp.cover import (
    TwistCover,
    apply_gauge,
    canonicalize,
    count_colorings,
    general_to_twist,
    random_cover,
    random_gauge,
    twist_to_general,
)
from hyperdp.dpfunc import dp_exact, dp_upper_bound
from hyperdp.errors import InvalidHypergraph
from hyperdp.hypercore import Hypergraph, classify, parse_hypergraph

from oracles import brute_avoiding, brute_proper


@st.composite
def hypergraphs(draw, n_max=5, m_max=4, uniform=None):
    n = draw(st.integers(2, n_max))
    size = st.just(uniform) if uniform else st.integers(2, min(3, n))
    raw = draw(st.lists(st.tuples(size, st.randoms(use_true_random=False)), max_size=m_max))
    edges = []
    for r, rnd in raw:
        if r <= n:
            edges.append(tuple(sorted(rnd.sample(range(n), r))))
    try:
        return Hypergraph(n, tuple(edges))
    except InvalidHypergraph:
        return Hypergraph(n, ())


seeds = st.integers(0, 2**32 - 1)
settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@given(hypergraphs(), st.integers(0, 3))
def test_count_proper_against_oracle(H, k):
    assert count_proper(H, k) == brute_proper(H, k)


@given(hypergraphs(), st.integers(1, 3), seeds)
def test_twist_count_against_oracle(H, k, seed):
    C = random_cover(H, k, seed)
    maps = [dict(p.items) for p in twist_to_general(H, C).maps]
    assert count_colorings(H, C) == brute_avoiding(H, k, maps)


@given(hypergraphs(), st.integers(1, 3), seeds, seeds)
def test_gauge_invariance(H, k, s1, s2):
    C = random_cover(H, k, s1)
    assert count_colorings(H, apply_gauge(H, C, random_gauge(H, k, s2))) == count_colorings(H, C)


@given(hypergraphs(), st.integers(1, 3), seeds)
def test_canonical_form(H, k, seed):
    C = random_cover(H, k, seed)
    can = canonicalize(H, C)
    assert len(can.free_slots) == classify(H).incidence_rank
    assert count_colorings(H, can.cover) == count_colorings(H, C)
    assert canonicalize(H, can.cover).cover == can.cover


@given(hypergraphs(), st.integers(1, 3), seeds)
def test_round_trip_json(H, k, seed):
    C = random_cover(H, k, seed)
    assert TwistCover.from_json(H, json.loads(json.dumps(C.to_json()))) == C
    assert general_to_twist(H, twist_to_general(H, C)) == C
    assert parse_hypergraph(json.dumps(H.to_json())) == H


@given(hypergraphs(uniform=3, n_max=6), st.integers(1, 3))
def test_dp_sandwich(H, k):
    dp = dp_exact(H, k).value
    assert dp <= dp_upper_bound(H, k)
    assert dp <= count_proper(H, k)
