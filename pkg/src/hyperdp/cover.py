"""k-fold covers of a hypergraph.

Two representations are kept:

``GeneralCover``
    A raw family of partial maps, each total on one edge.  This mirrors the
    set-of-maps definition and may hold fewer than ``k`` maps on an edge.

``TwistCover``
    A full cover (exactly ``k`` pairwise-disjoint maps on every edge) in
    permutation form.  Each edge has an anchor vertex ``a`` and a permutation
    ``mu_v`` of the colors for every other vertex ``v``; its maps are
    ``phi_c = {a: c, v: mu_v[c]}`` for ``c in range(k)``.  A coloring
    violates the edge iff ``f(v) == mu_v[f(a)]`` for every non-anchor ``v``.

A gauge transformation recolors vertex ``v`` through a permutation
``tau_v``.  It maps covers to covers and F-colorings to F'-colorings
bijectively, so it never changes a count.  ``canonicalize`` spends this
freedom along a spanning tree of the incidence graph; what is left over
(the free slots) is exactly the cycle structure of the hypergraph.

Colors and permutations are 0-based internally; JSON uses ``1..k``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Mapping, Optional, Sequence

import numpy as np

from ._enum import count_good
from .errors import (
    DisjointnessViolation,
    DomainError,
    DomainNotAnEdge,
    IndexOutOfRange,
    InvalidCover,
    NotFull,
    TooManyMapsOnEdge,
)
from .hypercore import Hypergraph, attachment_order

Perm = tuple[int, ...]


# permutations ---------------------------------------------------------------

def identity(k: int) -> Perm:
    return tuple(range(k))


def compose(a: Perm, b: Perm) -> Perm:
    """``a o b``: apply ``b`` first."""
    return tuple(a[x] for x in b)


def inverse(a: Perm) -> Perm:
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def is_permutation(a: Sequence[int], k: int) -> bool:
    return len(a) == k and sorted(a) == list(range(k))


def all_permutations(k: int) -> list[Perm]:
    """All of ``S_k`` in lexicographic order."""
    return list(permutations(range(k)))


def cycle_type(a: Perm) -> tuple[int, ...]:
    seen = [False] * len(a)
    lengths = []
    for i in range(len(a)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = a[j]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def class_representatives(k: int) -> list[Perm]:
    """Lexicographically smallest member of each conjugacy class of ``S_k``."""
    reps = {}
    for a in all_permutations(k):
        reps.setdefault(cycle_type(a), a)
    return sorted(reps.values())


# twist covers ---------------------------------------------------------------

@dataclass(frozen=True)
class EdgeTwist:
    anchor: int
    mu: tuple[tuple[int, Perm], ...]  # (vertex, permutation), ascending by vertex

    def perm(self, v: int) -> Perm:
        for w, p in self.mu:
            if w == v:
                return p
        raise KeyError(v)

    def as_dict(self) -> dict[int, Perm]:
        return dict(self.mu)


@dataclass(frozen=True)
class TwistCover:
    k: int
    twists: tuple[EdgeTwist, ...]

    @classmethod
    def build(
        cls,
        H: Hypergraph,
        k: int,
        anchors: Optional[Mapping[int, int]] = None,
        mu: Optional[Mapping[tuple[int, int], Sequence[int]]] = None,
    ) -> "TwistCover":
        """Full cover from sparse data; anything unspecified is the identity.

        ``anchors`` maps edge index to anchor vertex (default: lowest vertex),
        ``mu`` maps ``(edge index, vertex)`` to a permutation.
        """
        anchors = dict(anchors or {})
        mu = dict(mu or {})
        ident = identity(k)
        twists = []
        for j, e in enumerate(H.edges):
            a = anchors.get(j, e[0])
            twists.append(
                EdgeTwist(a, tuple((v, tuple(mu.get((j, v), ident))) for v in e if v != a))
            )
        cover = cls(k, tuple(twists))
        check_twist(H, cover)
        return cover

    def to_json(self) -> dict:
        ident = identity(self.k)
        edges = []
        for j, t in enumerate(self.twists):
            moved = {str(v): [x + 1 for x in p] for v, p in t.mu if p != ident}
            edges.append({"edge": j, "anchor": t.anchor, "mu": moved})
        return {"k": self.k, "edges": edges}

    @classmethod
    def from_json(cls, H: Hypergraph, data: Mapping) -> "TwistCover":
        k = int(data["k"])
        anchors, mu = {}, {}
        for item in data.get("edges", []):
            j = int(item["edge"])
            if not 0 <= j < H.m:
                raise InvalidCover(f"edge index {j} not in [0, {H.m})")
            if "anchor" in item:
                anchors[j] = int(item["anchor"])
            for v, img in item.get("mu", {}).items():
                mu[(j, int(v))] = [int(x) - 1 for x in img]
        return cls.build(H, k, anchors, mu)


def check_twist(H: Hypergraph, C: TwistCover) -> None:
    if C.k < 1:
        raise InvalidCover(f"k must be positive, got {C.k}")
    if len(C.twists) != H.m:
        raise InvalidCover(f"cover has {len(C.twists)} edges, hypergraph has {H.m}")
    for j, (t, e) in enumerate(zip(C.twists, H.edges)):
        if t.anchor not in e:
            raise InvalidCover(f"anchor {t.anchor} is not in edge {j}")
        if tuple(v for v, _ in t.mu) != tuple(v for v in e if v != t.anchor):
            raise InvalidCover(f"edge {j}: permutations must cover the non-anchor vertices")
        for v, p in t.mu:
            if not is_permutation(p, C.k):
                raise InvalidCover(f"edge {j}, vertex {v}: {p} is not a permutation of [k]")


def reanchor(t: EdgeTwist, new_anchor: int, k: int) -> EdgeTwist:
    """Same maps, expressed relative to a different anchor of the edge."""
    if new_anchor == t.anchor:
        return t
    mu = t.as_dict()
    mu[t.anchor] = identity(k)
    back = inverse(mu.pop(new_anchor))
    return EdgeTwist(new_anchor, tuple(sorted((v, compose(p, back)) for v, p in mu.items())))


def natural_cover(H: Hypergraph, k: int) -> TwistCover:
    """Forbid exactly the constant colorings of every edge."""
    if k < 1:
        raise DomainError(f"k must be at least 1, got {k}")
    return TwistCover.build(H, k)


def twist_violation_mask(H: Hypergraph, C: TwistCover, block: np.ndarray, edges: Optional[Iterable[int]] = None):
    bad = np.zeros(block.shape[0], dtype=bool)
    for j in range(H.m) if edges is None else edges:
        bad |= edge_violation(C.twists[j], block)
    return bad


def edge_violation(t: EdgeTwist, block: np.ndarray) -> np.ndarray:
    anchor_colors = block[:, t.anchor]
    hit = np.ones(block.shape[0], dtype=bool)
    for v, p in t.mu:
        hit &= np.asarray(p, dtype=np.intp)[anchor_colors] == block[:, v]
    return hit


# general covers -------------------------------------------------------------

@dataclass(frozen=True)
class PartialMap:
    """A partial coloring, stored as its graph ``((vertex, color), ...)``."""

    items: tuple[tuple[int, int], ...]

    @classmethod
    def of(cls, assignment: Mapping[int, int]) -> "PartialMap":
        return cls(tuple(sorted((int(v), int(c)) for v, c in assignment.items())))

    @classmethod
    def on_edge(cls, H: Hypergraph, j: int, colors: Sequence[int]) -> "PartialMap":
        """Map on edge ``j`` with ``colors`` aligned to its sorted vertices."""
        e = H.edges[j]
        if len(colors) != len(e):
            raise InvalidCover(f"edge {j} has {len(e)} vertices, got {len(colors)} colors")
        return cls(tuple(zip(e, (int(c) for c in colors))))

    @property
    def domain(self) -> tuple[int, ...]:
        return tuple(v for v, _ in self.items)

    def __getitem__(self, v: int) -> int:
        for w, c in self.items:
            if w == v:
                return c
        raise KeyError(v)


@dataclass(frozen=True)
class GeneralCover:
    k: int
    maps: tuple[PartialMap, ...] = ()

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "maps": [{str(v): c + 1 for v, c in phi.items} for phi in self.maps],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "GeneralCover":
        maps = tuple(PartialMap.of({int(v): int(c) - 1 for v, c in m.items()}) for m in data["maps"])
        return cls(int(data["k"]), maps)


def _group_by_edge(H: Hypergraph, F: GeneralCover) -> list[list[PartialMap]]:
    index = {e: j for j, e in enumerate(H.edges)}
    groups: list[list[PartialMap]] = [[] for _ in H.edges]
    for phi in F.maps:
        j = index.get(phi.domain)
        if j is None:
            raise DomainNotAnEdge(f"domain {list(phi.domain)} is not an edge")
        groups[j].append(phi)
    return groups


def validate_general(H: Hypergraph, F: GeneralCover) -> None:
    """Raise unless ``F`` is a k-fold cover of ``H``.

    Every domain must be an edge, each edge carries at most ``k`` maps and
    two maps on the same edge disagree at every vertex of it.
    """
    if F.k < 1:
        raise InvalidCover(f"k must be positive, got {F.k}")
    groups = _group_by_edge(H, F)
    for j, maps in enumerate(groups):
        for phi in maps:
            if any(not 0 <= c < F.k for _, c in phi.items):
                raise InvalidCover(f"map on edge {j} uses a color outside [k]")
        if len(maps) > F.k:
            raise TooManyMapsOnEdge(f"edge {j} carries {len(maps)} maps, k = {F.k}")
        for a in range(len(maps)):
            for b in range(a + 1, len(maps)):
                if any(ca == cb for (_, ca), (_, cb) in zip(maps[a].items, maps[b].items)):
                    raise DisjointnessViolation(f"maps {a} and {b} on edge {j} share a value")


def general_violation_mask(F: GeneralCover, block: np.ndarray) -> np.ndarray:
    bad = np.zeros(block.shape[0], dtype=bool)
    for phi in F.maps:
        hit = np.ones(block.shape[0], dtype=bool)
        for v, c in phi.items:
            hit &= block[:, v] == c
        bad |= hit
    return bad


def complete_cover(H: Hypergraph, F: GeneralCover) -> GeneralCover:
    """Extend ``F`` to exactly ``k`` maps per edge.

    At each vertex the ``t``-th added map takes the ``t``-th smallest color
    not yet used there, so the result is deterministic.
    """
    validate_general(H, F)
    groups = _group_by_edge(H, F)
    out = []
    for e, maps in zip(H.edges, groups):
        out.extend(maps)
        free = {v: [c for c in range(F.k) if c not in {phi[v] for phi in maps}] for v in e}
        for t in range(F.k - len(maps)):
            out.append(PartialMap(tuple((v, free[v][t]) for v in e)))
    return GeneralCover(F.k, tuple(out))


def twist_to_general(H: Hypergraph, C: TwistCover) -> GeneralCover:
    check_twist(H, C)
    maps = []
    for t in C.twists:
        for c in range(C.k):
            maps.append(PartialMap.of({t.anchor: c, **{v: p[c] for v, p in t.mu}}))
    return GeneralCover(C.k, tuple(maps))


def general_to_twist(H: Hypergraph, F: GeneralCover, anchors: Optional[Mapping[int, int]] = None) -> TwistCover:
    """Permutation form of a full cover; anchors default to each edge's lowest vertex."""
    validate_general(H, F)
    groups = _group_by_edge(H, F)
    anchors = anchors or {}
    mu = {}
    for j, (e, maps) in enumerate(zip(H.edges, groups)):
        if len(maps) != F.k:
            raise NotFull(f"edge {j} carries {len(maps)} of {F.k} maps")
        a = anchors.get(j, e[0])
        for v in e:
            if v == a:
                continue
            img = [0] * F.k
            for phi in maps:
                img[phi[a]] = phi[v]
            mu[(j, v)] = img
    return TwistCover.build(H, F.k, {j: anchors.get(j, e[0]) for j, e in enumerate(H.edges)}, mu)


def cover_maps(H: Hypergraph, C) -> list[frozenset]:
    """Per-edge set of maps, for semantic comparison of covers."""
    F = twist_to_general(H, C) if isinstance(C, TwistCover) else C
    groups = _group_by_edge(H, F)
    return [frozenset(g) for g in groups]


def count_colorings(H: Hypergraph, C, budget: Optional[int] = None, workers: int = 1) -> int:
    """Number of F-colorings: total colorings containing no map of the cover."""
    if isinstance(C, TwistCover):
        check_twist(H, C)
        return count_good(
            H.n, C.k, lambda b: twist_violation_mask(H, C, b), H.m, budget, workers, "count_colorings"
        )
    if isinstance(C, GeneralCover):
        validate_general(H, C)
        return count_good(
            H.n, C.k, lambda b: general_violation_mask(C, b), len(C.maps), budget, workers,
            "count_colorings",
        )
    raise TypeError(f"expected TwistCover or GeneralCover, got {type(C).__name__}")


# gauge and canonical form ---------------------------------------------------

def _gauge_list(H: Hypergraph, k: int, tau) -> list[Perm]:
    ident = identity(k)
    if isinstance(tau, Mapping):
        out = [tuple(tau.get(v, ident)) for v in range(H.n)]
    else:
        out = [tuple(p) for p in tau]
    if len(out) != H.n or not all(is_permutation(p, k) for p in out):
        raise DomainError("gauge must give one permutation of [k] per vertex")
    return out


def apply_gauge(H: Hypergraph, C: TwistCover, tau) -> TwistCover:
    """Recolor every vertex ``v`` through ``tau[v]``; anchors are kept.

    In twist coordinates ``mu'_v = tau_v o mu_v o tau_a^-1``.
    """
    check_twist(H, C)
    tau = _gauge_list(H, C.k, tau)
    twists = []
    for t in C.twists:
        back = inverse(tau[t.anchor])
        twists.append(EdgeTwist(t.anchor, tuple((v, compose(tau[v], compose(p, back))) for v, p in t.mu)))
    return TwistCover(C.k, tuple(twists))


@dataclass(frozen=True)
class Frame:
    """Gauge-fixing skeleton of a hypergraph.

    ``edge_order`` is the breadth-first edge order, ``anchors[j]`` the anchor
    used for edge ``j``, ``discovered[j]`` the vertices first reached through
    edge ``j`` and ``free_slots`` the ``(edge, vertex)`` positions where both
    ends were already reached.
    """

    edge_order: tuple[int, ...]
    anchors: tuple[int, ...]
    discovered: tuple[tuple[int, ...], ...]
    free_slots: tuple[tuple[int, int], ...]


def frame(H: Hypergraph) -> Frame:
    """Breadth-first traversal from the lowest unvisited vertex of each component.

    Vertices are expanded in visiting order and their unprocessed edges in
    ascending index.  An edge's anchor is its earliest-visited vertex.
    """
    visit: dict[int, int] = {}
    incident = [[] for _ in range(H.n)]
    for j, e in enumerate(H.edges):
        for v in e:
            incident[v].append(j)
    done = [False] * H.m
    anchors = [0] * H.m
    discovered: list[tuple[int, ...]] = [()] * H.m
    order, slots = [], []
    for root in range(H.n):
        if root in visit:
            continue
        visit[root] = len(visit)
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for j in incident[u]:
                if done[j]:
                    continue
                done[j] = True
                order.append(j)
                e = H.edges[j]
                a = min((v for v in e if v in visit), key=visit.__getitem__)
                anchors[j] = a
                fresh = tuple(v for v in e if v not in visit)
                slots.extend((j, v) for v in e if v != a and v in visit)
                for v in fresh:
                    visit[v] = len(visit)
                    queue.append(v)
                discovered[j] = fresh
    return Frame(tuple(order), tuple(anchors), tuple(discovered), tuple(slots))


@dataclass(frozen=True)
class Canonical:
    cover: TwistCover
    gauge: tuple[Perm, ...]
    free_slots: tuple[tuple[int, int, Perm], ...]  # (edge, vertex, residual permutation)


def canonicalize(H: Hypergraph, C: TwistCover, fr: Optional[Frame] = None) -> Canonical:
    """Gauge-fix ``C`` along the breadth-first frame.

    Each vertex first reached through an edge gets the recoloring that makes
    its permutation the identity.  Only the free-slot permutations survive;
    on a hypergraph without cycles there are none and the result is the
    natural cover.  ``apply_gauge(C, gauge)`` has the same maps as ``cover``.
    """
    check_twist(H, C)
    fr = fr or frame(H)
    k = C.k
    ident = identity(k)
    tau: list[Optional[Perm]] = [None] * H.n
    residual: dict[tuple[int, int], Perm] = {}
    for j in fr.edge_order:
        a = fr.anchors[j]
        if tau[a] is None:
            # component root
            tau[a] = ident
        t = reanchor(C.twists[j], a, k)
        fresh = set(fr.discovered[j])
        back = inverse(tau[a])
        for v, p in t.mu:
            if v in fresh:
                tau[v] = compose(tau[a], inverse(p))
            else:
                residual[(j, v)] = compose(tau[v], compose(p, back))
    gauge = tuple(p if p is not None else ident for p in tau)
    cover = TwistCover.build(H, k, dict(enumerate(fr.anchors)), residual)
    slots = tuple((j, v, residual[(j, v)]) for j, v in fr.free_slots)
    return Canonical(cover, gauge, slots)


def slot_cover(H: Hypergraph, k: int, fr: Frame, perms: Sequence[Perm]) -> TwistCover:
    """Canonical cover with ``perms[i]`` placed in free slot ``i``."""
    return TwistCover.build(H, k, dict(enumerate(fr.anchors)), dict(zip(fr.free_slots, perms)))


# special covers -------------------------------------------------------------

ALIGNED = "aligned"
SHIFTED = "shifted"


def extremal_cover(H: Hypergraph, e: int, k: int, variant: str = SHIFTED, v1: Optional[int] = None) -> TwistCover:
    """Natural cover everywhere except edge ``e``.

    ``aligned`` keeps the constant maps on ``e``.  ``shifted`` uses
    ``phi_i(v1) = i + 1 (mod k)`` and ``phi_i(v) = i`` elsewhere on ``e``.
    ``v1`` defaults to the first vertex of ``attachment_order`` (a cycle
    attachment vertex when ``e`` lies on the cycle of a unicyclic H).
    """
    if not 0 <= e < H.m:
        raise IndexOutOfRange(f"edge index {e} not in [0, {H.m})")
    if k < 2:
        raise DomainError(f"extremal covers need k >= 2, got {k}")
    if variant not in (ALIGNED, SHIFTED):
        raise DomainError(f"variant must be {ALIGNED!r} or {SHIFTED!r}")
    v1 = attachment_order(H, e)[0] if v1 is None else v1
    if v1 not in H.edges[e]:
        raise DomainError(f"vertex {v1} is not in edge {e}")
    mu = {}
    if variant == SHIFTED:
        down = tuple((c - 1) % k for c in range(k))
        mu = {(e, v): down for v in H.edges[e] if v != v1}
    return TwistCover.build(H, k, {e: v1}, mu)


def random_cover(H: Hypergraph, k: int, seed=None) -> TwistCover:
    """Every non-anchor permutation drawn uniformly and independently.

    ``seed`` is anything ``numpy.random.default_rng`` accepts, including a
    ``Generator`` (which is then advanced).
    """
    if k < 1:
        raise DomainError(f"k must be at least 1, got {k}")
    rng = np.random.default_rng(seed)
    twists = []
    for e in H.edges:
        twists.append(EdgeTwist(e[0], tuple((v, tuple(int(x) for x in rng.permutation(k))) for v in e[1:])))
    return TwistCover(k, tuple(twists))


def random_gauge(H: Hypergraph, k: int, seed=None) -> tuple[Perm, ...]:
    rng = np.random.default_rng(seed)
    return tuple(tuple(int(x) for x in rng.permutation(k)) for _ in range(H.n))
