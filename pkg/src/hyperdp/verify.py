"""Built-in claim checks, run by ``hyperdp verify``.

Every claim is re-derived by exhaustive enumeration on small instances and
compared against the closed forms it is supposed to match.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

import numpy as np

from . import genlib
from .chromcount import (
    boundary_profile,
    count_proper,
    hypertree_poly,
    t_values_acyclic,
    t_values_cycle,
    unicyclic_poly,
)
from .cover import (
    apply_gauge,
    canonicalize,
    count_colorings,
    cover_maps,
    extremal_cover,
    identity,
    natural_cover,
    random_cover,
    random_gauge,
)
from .dpfunc import (
    dp_chromatic_number,
    dp_closed,
    dp_exact,
    dp_exact_by_components,
    dp_upper_bound,
    exact_average,
    monte_carlo_mean,
    strict_less_test,
)
from .hypercore import HYPERTREE, Hypergraph, classify, delete_edge


@dataclass(frozen=True)
class ClaimResult:
    name: str
    passed: bool
    detail: str
    seconds: float

    def to_json(self) -> dict:
        # timing is left out so reports stay byte-identical across runs
        return {"claim": self.name, "passed": self.passed, "detail": self.detail}


def theta_graph() -> Hypergraph:
    """Two graph cycles sharing the path 0-1-2 (cycle rank 2)."""
    return Hypergraph(5, ((0, 1), (1, 2), (2, 3), (3, 0), (2, 4), (4, 0)))


def theta_3uniform() -> Hypergraph:
    """Loose 3-cycle with a second 2-edge path between vertices 1 and 3."""
    return Hypergraph(9, ((0, 1, 2), (2, 3, 4), (4, 5, 0), (1, 6, 7), (3, 7, 8)))


def connected_catalog() -> list[tuple[str, Hypergraph]]:
    """Connected uniform instances on both sides of the hypertree dichotomy."""
    return [
        ("graph path m=3", genlib.loose_path(2, 3)),
        ("graph star m=3", genlib.star_hypertree(2, 3)),
        ("single 3-edge", genlib.loose_path(3, 1)),
        ("loose 3-path m=2", genlib.loose_path(3, 2)),
        ("random 3-hypertree m=3", genlib.random_hypertree(3, 3, seed=11)),
        ("graph triangle", genlib.graph_cycle(3)),
        ("graph C4", genlib.graph_cycle(4)),
        ("graph theta", theta_graph()),
        ("graph K4", Hypergraph(4, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)))),
        ("loose 3-cycle", genlib.loose_cycle(3, 3)),
        ("loose 4-cycle", genlib.loose_cycle(3, 4)),
        ("3-cycle + pendant", genlib.unicyclic(3, 1, 3, seed=7)),
        ("3-uniform theta", theta_3uniform()),
        ("non-linear pair", Hypergraph(4, ((0, 1, 2), (0, 1, 3)))),
    ]


def _hypertree_formula() -> str:
    checked = 0
    for r in (2, 3, 4):
        for m in range(4):
            for H in (genlib.loose_path(r, m), genlib.star_hypertree(r, m), genlib.random_hypertree(r, m, seed=r * 10 + m)):
                for k in range(5):
                    got, want = count_proper(H, k), hypertree_poly(r, m, k)
                    assert got == want, f"r={r} m={m} k={k}: {got} != {want}"
                    checked += 1
    return f"{checked} counts match"


def _unicyclic_formula() -> str:
    out = []
    for p in (3, 4):
        for m in (0, 1):
            H = genlib.unicyclic(3, m, p, seed=p + m)
            for k in (2, 3):
                got, want = count_proper(H, k), unicyclic_poly(3, m, p, k)
                assert got == want, f"p={p} m={m} k={k}: {got} != {want}"
                out.append(got)
    return f"values {out}"


def _acyclic_collapse(samples: int = 200) -> str:
    rng = np.random.default_rng(2024)
    for m in range(4):
        H = genlib.random_hypertree(3, m, seed=m)
        for k in (2, 3):
            P = count_proper(H, k)
            nat = cover_maps(H, natural_cover(H, k))
            for _ in range(samples):
                C = random_cover(H, k, rng)
                can = canonicalize(H, C)
                assert not can.free_slots and cover_maps(H, can.cover) == nat
                assert count_colorings(H, C) == P
    return f"{4 * 2 * samples} random covers collapse to the natural cover"


def _profiles() -> str:
    H = genlib.loose_path(3, 2)
    for e in range(H.m):
        for k in (2, 3):
            prof = boundary_profile(H, e, k)
            split = prof.constant_split()
            P, Pm = count_proper(H, k), count_proper(delete_edge(H, e), k)
            assert split is not None and split == t_values_acyclic(Pm, P, k, 3)
    assert boundary_profile(H, 1, 2).constant_split() == (3, 3)
    C = genlib.loose_cycle(3, 3)
    for e in classify(C).cycle_edges:
        for k in (2, 3):
            split = boundary_profile(C, e, k).first_pair_split()
            P, Pm = count_proper(C, k), count_proper(delete_edge(C, e), k)
            assert split is not None and split == t_values_cycle(Pm, P, k, 3)
    assert boundary_profile(C, 2, 2).first_pair_split() == (5, 4)
    return "hypertree t=(3,3), loose 3-cycle t=(5,4) at k=2"


def _odd_cycle() -> str:
    H = genlib.loose_cycle(3, 3)
    vals = []
    for k in (2, 3):
        res = dp_exact(H, k)
        assert res.value == count_proper(H, k)
        assert all(p == identity(k) for _, _, p in canonicalize(H, res.witness).free_slots)
        vals.append(res.value)
    assert vals == [26, 510]
    return f"P_DP = P = {vals}"


def _even_cycle() -> str:
    H = genlib.loose_cycle(3, 4)
    got = {}
    for k, want, P in ((2, 80, 82), (3, 4095, 4098)):
        res = dp_exact(H, k)
        assert res.value == want and count_proper(H, k) == P
        assert count_colorings(H, extremal_cover(H, 0, k, "shifted")) == want
        got[k] = res.value
    return f"P_DP = {got}"


def _bound_dichotomy() -> str:
    rows = []
    for name, H in connected_catalog():
        tree = classify(H).classification == HYPERTREE
        for k in (2, 3):
            attained = dp_exact(H, k).value == dp_upper_bound(H, k)
            assert attained == tree, f"{name} at k={k}"
        rows.append(name)
    return f"{len(rows)} instances"


def _expectation() -> str:
    H = genlib.loose_cycle(3, 3)
    bound = dp_upper_bound(H, 2)
    assert bound == 27 and exact_average(H, 2) == bound
    mc = monte_carlo_mean(H, 2, 10_000, seed=1)
    assert abs(mc.mean - bound) <= Fraction(2, 100) * bound
    assert mc.minimum >= dp_exact(H, 2).value
    return f"exact mean {bound}, sampled {float(mc.mean):.3f}"


def _strict_criterion() -> str:
    C4 = genlib.loose_cycle(3, 4)
    res = strict_less_test(C4, 0, 2)
    assert res.holds and res.dp_value < res.P
    T = genlib.loose_path(3, 2)
    for e in range(T.m):
        res = strict_less_test(T, e, 2)
        assert not res.holds and res.lhs == res.rhs
    return "holds on the loose 4-cycle, equality on hypertrees"


def _graph_sanity() -> str:
    C4, C5 = genlib.graph_cycle(4), genlib.graph_cycle(5)
    assert dp_exact(C4, 2).value == 0
    assert dp_chromatic_number(C4, 5) == 3
    assert dp_exact(C5, 3).value == 30 == count_proper(C5, 3)
    return "C4: P_DP(2)=0, chi_DP=3; C5: P_DP(3)=30"


def _random_consistency(trials: int = 200) -> str:
    rng = np.random.default_rng(99)
    cat = [H for _, H in connected_catalog()]
    for _ in range(trials):
        H = cat[int(rng.integers(len(cat)))]
        k = int(rng.integers(2, 4))
        C = random_cover(H, k, rng)
        assert count_colorings(H, C) == count_colorings(H, apply_gauge(H, C, random_gauge(H, k, rng)))
    for H in cat[:10]:
        for k in (2, 3):
            dp = dp_exact(H, k).value
            assert dp <= count_proper(H, k)
            closed = dp_closed(H, k)
            if closed is not None:
                assert closed[0] == dp
    two = Hypergraph(9, ((0, 1, 2), (3, 4, 5), (5, 6, 7)))
    assert dp_exact(two, 2).value == dp_exact_by_components(two, 2).value
    return f"{trials} gauge checks, closed forms agree"


CLAIMS: list[tuple[str, Callable[[], str]]] = [
    ("hypertree_chromatic_formula", _hypertree_formula),
    ("unicyclic_chromatic_formula", _unicyclic_formula),
    ("acyclic_covers_collapse", _acyclic_collapse),
    ("boundary_profiles", _profiles),
    ("odd_cycle_dp_equals_p", _odd_cycle),
    ("even_cycle_dp_formula", _even_cycle),
    ("bound_attained_iff_hypertree", _bound_dichotomy),
    ("expectation_bound", _expectation),
    ("strict_inequality_criterion", _strict_criterion),
    ("graph_sanity", _graph_sanity),
    ("random_consistency", _random_consistency),
]


def run_all(only: Optional[list[str]] = None) -> list[ClaimResult]:
    results = []
    for name, fn in CLAIMS:
        if only and name not in only:
            continue
        start = time.perf_counter()
        try:
            detail, ok = fn(), True
        except AssertionError as exc:
            detail, ok = f"failed: {exc}", False
        results.append(ClaimResult(name, ok, detail, time.perf_counter() - start))
    return results
