"""Seeded generators for the instance families used throughout the tests."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from typing import Optional

import numpy as np

from .errors import BadParameters
from .hypercore import Hypergraph

FAMILIES = (
    "edgeless",
    "loose_path",
    "star_hypertree",
    "random_hypertree",
    "loose_cycle",
    "unicyclic",
    "graph_cycle",
)


@dataclass(frozen=True)
class GenSpec:
    family: str
    r: Optional[int] = None
    m: Optional[int] = None
    p: Optional[int] = None
    n: Optional[int] = None
    seed: Optional[int] = None

    def to_json(self) -> dict:
        return {key: val for key, val in asdict(self).items() if val is not None}

    @classmethod
    def from_json(cls, data) -> "GenSpec":
        if isinstance(data, str):
            data = json.loads(data)
        unknown = set(data) - {"family", "r", "m", "p", "n", "seed"}
        if unknown:
            raise BadParameters(f"unknown GenSpec fields: {sorted(unknown)}")
        return cls(**data)


def _need(spec: GenSpec, *names):
    vals = []
    for name in names:
        val = getattr(spec, name)
        if val is None:
            raise BadParameters(f"family {spec.family!r} needs parameter {name!r}")
        vals.append(int(val))
    return vals


def _check(r=None, m=None, p=None, n=None):
    if r is not None and r < 2:
        raise BadParameters(f"r must be >= 2, got {r}")
    if m is not None and m < 0:
        raise BadParameters(f"m must be >= 0, got {m}")
    if p is not None and p < 3:
        raise BadParameters(f"p must be >= 3, got {p}")
    if n is not None and n < 1:
        raise BadParameters(f"n must be >= 1, got {n}")


def edgeless(n: int) -> Hypergraph:
    _check(n=n)
    return Hypergraph(n, ())


def loose_path(r: int, m: int) -> Hypergraph:
    """Edges ``{(r-1)i, ..., (r-1)i + r-1}``; consecutive edges share one vertex."""
    _check(r=r, m=m)
    edges = [tuple(range((r - 1) * i, (r - 1) * i + r)) for i in range(m)]
    return Hypergraph((r - 1) * m + 1, tuple(edges))


def star_hypertree(r: int, m: int) -> Hypergraph:
    """``m`` edges all through vertex 0."""
    _check(r=r, m=m)
    edges = [(0,) + tuple(range(1 + (r - 1) * i, 1 + (r - 1) * (i + 1))) for i in range(m)]
    return Hypergraph((r - 1) * m + 1, tuple(edges))


def _glue_pendants(n: int, edges: list, r: int, count: int, rng) -> tuple[int, list]:
    # each new edge meets the existing hypergraph in exactly one vertex
    for _ in range(count):
        at = int(rng.integers(n))
        edges.append((at,) + tuple(range(n, n + r - 1)))
        n += r - 1
    return n, edges


def random_hypertree(r: int, m: int, seed=None) -> Hypergraph:
    _check(r=r, m=m)
    rng = np.random.default_rng(seed)
    n, edges = _glue_pendants(1, [], r, m, rng)
    return Hypergraph(n, tuple(edges))


def loose_cycle(r: int, p: int) -> Hypergraph:
    """``p`` edges of size ``r``, consecutive ones sharing a vertex, closed up."""
    _check(r=r, p=p)
    n = (r - 1) * p
    edges = [tuple(((r - 1) * i + t) % n for t in range(r)) for i in range(p)]
    return Hypergraph(n, tuple(edges))


def unicyclic(r: int, m: int, p: int, seed=None) -> Hypergraph:
    """Loose ``p``-cycle plus ``m`` pendant edges glued at seeded vertices."""
    _check(r=r, m=m, p=p)
    base = loose_cycle(r, p)
    rng = np.random.default_rng(seed)
    n, edges = _glue_pendants(base.n, list(base.edges), r, m, rng)
    return Hypergraph(n, tuple(edges))


def graph_cycle(p: int) -> Hypergraph:
    return loose_cycle(2, p)


def generate(spec: GenSpec) -> Hypergraph:
    fam = spec.family
    if fam == "edgeless":
        (n,) = _need(spec, "n")
        return edgeless(n)
    if fam == "loose_path":
        return loose_path(*_need(spec, "r", "m"))
    if fam == "star_hypertree":
        return star_hypertree(*_need(spec, "r", "m"))
    if fam == "random_hypertree":
        r, m = _need(spec, "r", "m")
        return random_hypertree(r, m, spec.seed)
    if fam == "loose_cycle":
        return loose_cycle(*_need(spec, "r", "p"))
    if fam == "unicyclic":
        r, m, p = _need(spec, "r", "m", "p")
        return unicyclic(r, m, p, spec.seed)
    if fam == "graph_cycle":
        (p,) = _need(spec, "p")
        return graph_cycle(p)
    raise BadParameters(f"unknown family {fam!r}; choose from {', '.join(FAMILIES)}")
