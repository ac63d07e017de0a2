"""DP color function: exact minimum over all k-fold covers, closed forms,
the expectation bound and the exploration helpers built on them.

Why the exhaustive search only looks at free slots
---------------------------------------------------
1. Adding a map to a cover can only remove F-colorings, and every cover
   extends to a full one (``complete_cover``).  The minimum over all covers
   is therefore attained by a full cover.
2. A full cover is a ``TwistCover``.  Recoloring vertices (a gauge
   transformation) is a bijection on colorings, so it preserves counts.
3. ``canonicalize`` uses that freedom along a breadth-first spanning tree of
   the incidence graph.  On a hypergraph without cycles every permutation
   becomes the identity, i.e. every cover is equivalent to the natural
   cover; in general only the free-slot permutations remain.

So ``P_DP(H, k)`` is the minimum over the ``(k!)^s`` assignments of
permutations to the ``s`` free slots, and that is what ``dp_exact`` scans.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import factorial
from typing import Iterable, Optional, Sequence

import numpy as np

from ._enum import CHUNK_ROWS, check_budget, coloring_block, ranges
from .chromcount import count_proper, hypertree_poly, unicyclic_poly
from .cover import (
    Frame,
    TwistCover,
    all_permutations,
    class_representatives,
    count_colorings,
    frame,
    natural_cover,
    random_cover,
    slot_cover,
)
from .errors import DomainError, NotUniform, VerificationFailure
from .hypercore import HYPERTREE, UNICYCLIC, Hypergraph, classify, components, delete_edge, subhypergraph


def _ratio(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class DpResult:
    value: int
    witness: Optional[TwistCover]
    covers_examined: int
    free_slot_count: int

    def to_json(self) -> dict:
        return {
            "value": str(self.value),
            "witness": None if self.witness is None else self.witness.to_json(),
            "covers_examined": self.covers_examined,
            "free_slots": self.free_slot_count,
        }


def dp_upper_bound(H: Hypergraph, k: int) -> Fraction:
    """Average F-coloring count of a uniformly random full cover.

    Each coloring avoids a random map on an r-edge with probability
    ``1 - k^(1-r)``, independently across edges, which gives
    ``k^n (k^(r-1) - 1)^m / k^((r-1) m)``.
    """
    if k < 1:
        raise DomainError(f"k must be at least 1, got {k}")
    if H.m == 0:
        return Fraction(k**H.n)
    r = H.uniform_r
    if r is None:
        raise NotUniform("the bound needs an r-uniform hypergraph")
    return Fraction(k**H.n * (k ** (r - 1) - 1) ** H.m, k ** ((r - 1) * H.m))


def _candidates(k: int, s: int, prune: bool) -> list[tuple[int, ...]]:
    """Free-slot assignments as index tuples into ``all_permutations(k)``, lex order."""
    if prune and s == 1:
        index = {p: i for i, p in enumerate(all_permutations(k))}
        return [(index[p],) for p in class_representatives(k)]
    return list(product(range(factorial(k)), repeat=s))


def slot_counts(
    H: Hypergraph,
    k: int,
    candidates: Optional[Sequence[tuple[int, ...]]] = None,
    fr: Optional[Frame] = None,
    budget: Optional[int] = None,
    workers: int = 1,
) -> tuple[Frame, list[tuple[int, ...]], list[int]]:
    """F-coloring counts of the canonical cover for each free-slot assignment.

    Edges without free slots are checked once per block of colorings; only
    the free-slot edges are re-evaluated per assignment.
    """
    fr = fr or frame(H)
    s = len(fr.free_slots)
    perms = np.array(all_permutations(k), dtype=np.intp)
    cands = list(candidates) if candidates is not None else list(product(range(len(perms)), repeat=s))
    total = k**H.n
    check_budget(len(cands) * total * max(H.m, 1), budget, "dp_exact")

    slot_edges = sorted({j for j, _ in fr.free_slots})
    slot_pos = {j: [i for i, (jj, _) in enumerate(fr.free_slots) if jj == j] for j in slot_edges}
    free_set = set(fr.free_slots)

    def work(span):
        block = coloring_block(H.n, k, *span)
        rows = block.shape[0]
        base_bad = np.zeros(rows, dtype=bool)
        fixed_part = {}
        for j, e in enumerate(H.edges):
            a = fr.anchors[j]
            hit = np.ones(rows, dtype=bool)
            for v in e:
                if v != a and (j, v) not in free_set:
                    hit &= block[:, v] == block[:, a]
            if j in slot_pos:
                fixed_part[j] = hit
            else:
                base_bad |= hit
        # slot_hits[i][q]: rows where slot i, holding permutation q, matches
        slot_hits = [dict() for _ in fr.free_slots]

        def hits(i, q):
            got = slot_hits[i].get(q)
            if got is None:
                j, v = fr.free_slots[i]
                got = perms[q][block[:, fr.anchors[j]]] == block[:, v]
                slot_hits[i][q] = got
            return got

        out = np.empty(len(cands), dtype=np.int64)
        for c, assignment in enumerate(cands):
            bad = base_bad.copy()
            for j in slot_edges:
                hit = fixed_part[j].copy()
                for i in slot_pos[j]:
                    hit &= hits(i, assignment[i])
                bad |= hit
            out[c] = rows - np.count_nonzero(bad)
        return out

    spans = ranges(total, CHUNK_ROWS)
    if workers > 1 and len(spans) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(work, spans))
    else:
        parts = [work(sp) for sp in spans]
    counts = [sum(int(part[c]) for part in parts) for c in range(len(cands))]
    return fr, cands, counts


def dp_exact(
    H: Hypergraph, k: int, budget: Optional[int] = None, prune: bool = False, workers: int = 1
) -> DpResult:
    """Exact ``P_DP(H, k)`` by scanning every free-slot assignment.

    The witness is the lexicographically first minimizing assignment.  With
    ``prune`` and a single free slot only one permutation per conjugacy class
    is tried: a global recoloring by ``sigma`` conjugates the residual
    permutation and leaves everything else at the identity.
    """
    if k < 0:
        raise DomainError(f"k must be nonnegative, got {k}")
    if k == 0:
        return DpResult(0, None, 0, 0)
    if k == 1:
        return DpResult(0 if H.m else 1, natural_cover(H, 1), 1, 0)
    fr = frame(H)
    cands = _candidates(k, len(fr.free_slots), prune)
    fr, cands, counts = slot_counts(H, k, cands, fr, budget, workers)
    best = min(range(len(cands)), key=lambda c: (counts[c], c))
    table = all_permutations(k)
    witness = slot_cover(H, k, fr, [table[q] for q in cands[best]])
    return DpResult(counts[best], witness, len(cands), len(fr.free_slots))


def exact_average(H: Hypergraph, k: int, budget: Optional[int] = None) -> Fraction:
    """Mean F-coloring count over all free-slot assignments (no sampling).

    A uniformly random full cover gauge-fixes to uniformly random,
    independent free-slot permutations, so this equals the mean over all
    full covers.
    """
    if k < 1:
        raise DomainError(f"k must be at least 1, got {k}")
    if k == 1:
        return Fraction(0 if H.m else 1)
    _, cands, counts = slot_counts(H, k, budget=budget)
    return Fraction(sum(counts), len(cands))


def dp_exact_by_components(H: Hypergraph, k: int, budget: Optional[int] = None, prune: bool = False) -> DpResult:
    """Product of per-component minima, with the witnesses stitched together."""
    value, examined, slots = 1, 0, 0
    anchors, mu = {}, {}
    for verts, eids in components(H):
        sub, vmap = subhypergraph(H, verts, eids)
        res = dp_exact(sub, k, budget, prune)
        value *= res.value
        examined += res.covers_examined
        slots += res.free_slot_count
        if res.witness is None:
            continue
        for t, twist in enumerate(res.witness.twists):
            j = eids[t]
            anchors[j] = vmap[twist.anchor]
            for v, p in twist.mu:
                mu[(j, vmap[v])] = p
    witness = None if k == 0 else TwistCover.build(H, k, anchors, mu)
    return DpResult(value, witness, examined, slots)


def dp_closed(H: Hypergraph, k: int) -> Optional[tuple[int, str]]:
    """Closed-form ``P_DP`` for uniform hypertrees and linear unicyclic (r >= 3) inputs."""
    report = classify(H)
    r = report.uniform_r
    if report.classification == HYPERTREE and (r is not None or H.m == 0):
        tag = "hypertree"
    elif report.classification == UNICYCLIC and r is not None and r >= 3:
        tag = "unicyclic-odd" if report.cycle_length % 2 else "unicyclic-even"
    else:
        return None
    if k <= 1:
        return (0 if (k == 0 or H.m) else 1), tag
    if tag == "hypertree":
        return (k if H.m == 0 else hypertree_poly(r, H.m, k)), tag
    p = report.cycle_length
    pendant = H.m - p
    if tag == "unicyclic-odd":
        return unicyclic_poly(r, pendant, p, k), tag
    base = k ** (r - 1) - 1
    return base ** (pendant + p) + (-1) ** (p + 1) * base**pendant, tag


@dataclass(frozen=True)
class StrictLess:
    holds: bool
    lhs: Fraction
    rhs: Fraction
    P: int
    dp_value: Optional[int] = None

    def to_json(self) -> dict:
        out = {"holds": self.holds, "lhs": _ratio(self.lhs), "rhs": _ratio(self.rhs), "P": str(self.P)}
        if self.dp_value is not None:
            out["dp_value"] = str(self.dp_value)
        return out


def strict_less_test(
    H: Hypergraph, e: int, k: int, check: bool = True, budget: Optional[int] = None
) -> StrictLess:
    """Compare ``P(H - e, k)`` with ``k^(r-1) / (k^(r-1) - 1) * P(H, k)``.

    When the left side is smaller, ``P_DP(H, k) < P(H, k)`` must follow; with
    ``check`` that consequence is confirmed by ``dp_exact``.
    """
    r = H.uniform_r
    if r is None:
        raise NotUniform("strict_less_test needs an r-uniform hypergraph")
    if k < 2:
        raise DomainError(f"k must be at least 2, got {k}")
    P = count_proper(H, k, budget)
    lhs = Fraction(count_proper(delete_edge(H, e), k, budget))
    rhs = Fraction(k ** (r - 1), k ** (r - 1) - 1) * P
    holds = lhs < rhs
    dp_value = None
    if check and holds:
        dp_value = dp_exact(H, k, budget).value
        if not dp_value < P:
            raise VerificationFailure(f"hypothesis holds but P_DP = {dp_value} is not below P = {P}")
    return StrictLess(holds, lhs, rhs, P, dp_value)


def dp_chromatic_number(H: Hypergraph, k_max: int, budget: Optional[int] = None) -> Optional[int]:
    """Smallest ``k <= k_max`` for which every k-fold cover admits a coloring."""
    if k_max < 1:
        raise DomainError(f"k_max must be at least 1, got {k_max}")
    for k in range(1, k_max + 1):
        if dp_exact(H, k, budget, prune=True).value > 0:
            return k
    return None


@dataclass(frozen=True)
class MonteCarlo:
    mean: Fraction
    minimum: int
    maximum: int
    trials: int

    def to_json(self) -> dict:
        return {
            "mean": _ratio(self.mean),
            "min": str(self.minimum),
            "max": str(self.maximum),
            "trials": self.trials,
        }


def monte_carlo_mean(H: Hypergraph, k: int, trials: int, seed=0, budget: Optional[int] = None) -> MonteCarlo:
    """Sample mean of F-coloring counts over seeded uniformly random full covers."""
    if trials < 1:
        raise DomainError(f"trials must be positive, got {trials}")
    rng = np.random.default_rng(seed)
    samples = [count_colorings(H, random_cover(H, k, rng), budget) for _ in range(trials)]
    return MonteCarlo(Fraction(sum(samples), trials), min(samples), max(samples), trials)


@dataclass(frozen=True)
class GapRow:
    k: int
    P: int
    P_DP: int
    gap: int
    normalized_gap: Optional[Fraction]

    def csv_fields(self) -> list[str]:
        norm = "" if self.normalized_gap is None else _ratio(self.normalized_gap)
        return [str(self.k), str(self.P), str(self.P_DP), str(self.gap), norm]

    def to_json(self) -> dict:
        return dict(zip(GAP_HEADER, self.csv_fields()))


GAP_HEADER = ["k", "P", "P_DP", "gap", "normalized_gap"]


def gap_profile(H: Hypergraph, k_values: Iterable[int], budget: Optional[int] = None) -> list[GapRow]:
    """``P - P_DP`` per ``k``, normalized by ``k^(n-2)``."""
    rows = []
    for k in k_values:
        P = count_proper(H, k, budget)
        dp = dp_exact(H, k, budget, prune=True).value
        norm = Fraction(P - dp) / Fraction(k) ** (H.n - 2) if k > 0 else None
        rows.append(GapRow(k, P, dp, P - dp, norm))
    return rows
