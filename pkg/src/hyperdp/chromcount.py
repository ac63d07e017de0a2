"""Proper colorings: brute-force counts, exact chromatic polynomials,
closed forms for hypertrees and unicyclic hypergraphs, and boundary
profiles (coloring counts of ``H - e`` split by the colors on ``e``).

Colors are 0-based internally; serialized forms use ``1..k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Hashable, Optional, Sequence

import numpy as np

from ._enum import check_budget, count_good, coloring_block, ranges
from .errors import DomainError, IndexOutOfRange, NonIntegralCoefficient
from .hypercore import Hypergraph, attachment_order, delete_edge


def monochromatic_mask(H: Hypergraph, block: np.ndarray) -> np.ndarray:
    """Rows of ``block`` that leave at least one edge of ``H`` monochromatic."""
    bad = np.zeros(block.shape[0], dtype=bool)
    for e in H.edges:
        first = block[:, e[0]]
        mono = np.ones(block.shape[0], dtype=bool)
        for v in e[1:]:
            mono &= block[:, v] == first
        bad |= mono
    return bad


def count_proper(H: Hypergraph, k: int, budget: Optional[int] = None, workers: int = 1) -> int:
    """Number of maps ``V(H) -> [k]`` leaving no edge monochromatic."""
    if k < 0:
        raise DomainError(f"k must be nonnegative, got {k}")
    if k == 0:
        return 0
    if H.m == 0:
        return k**H.n
    return count_good(
        H.n, k, lambda b: monochromatic_mask(H, b), H.m, budget, workers, "count_proper"
    )


@dataclass(frozen=True)
class Polynomial:
    """Integer polynomial; ``coeffs[i]`` is the coefficient of ``k**i``."""

    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, k):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * k + c
        return acc

    def to_json(self) -> list[int]:
        return list(self.coeffs)

    def __str__(self):
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            body = "" if (mag == 1 and i > 0) else str(mag)
            if i >= 1:
                body += "k" if i == 1 else f"k^{i}"
            terms.append(("-" if c < 0 else "+", body))
        if not terms:
            return "0"
        sign, body = terms[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


def chromatic_polynomial(H: Hypergraph, budget: Optional[int] = None, workers: int = 1) -> Polynomial:
    """Exact chromatic polynomial from counts at ``k = 0..n``.

    ``P`` has degree ``n``, so the ``n + 1`` sampled values determine it; the
    interpolation runs in exact rational arithmetic and must come out integral.
    """
    import sympy

    n = H.n
    check_budget(sum(k**n for k in range(n + 1)) * max(H.m, 1), budget, "chromatic_polynomial")
    points = [(k, count_proper(H, k, budget, workers)) for k in range(n + 1)]
    x = sympy.Symbol("k")
    poly = sympy.Poly(sympy.interpolate(points, x), x)
    coeffs = []
    for c in reversed(poly.all_coeffs()):
        if not c.is_integer:
            raise NonIntegralCoefficient(f"interpolated coefficient {c} is not an integer")
        coeffs.append(int(c))
    coeffs += [0] * (n + 1 - len(coeffs))
    if len(coeffs) != n + 1 or coeffs[-1] != 1:
        raise NonIntegralCoefficient(f"expected a monic degree-{n} polynomial, got {coeffs}")
    return Polynomial(tuple(coeffs))


def hypertree_poly(r: int, m: int, k: int) -> int:
    """``k (k^(r-1) - 1)^m``: proper colorings of an r-uniform hypertree with m edges."""
    if r < 2 or m < 0 or k < 0:
        raise DomainError(f"need r >= 2, m >= 0, k >= 0; got r={r}, m={m}, k={k}")
    return k * (k ** (r - 1) - 1) ** m


def unicyclic_poly(r: int, m: int, p: int, k: int) -> int:
    """Proper colorings of a linear r-uniform unicyclic hypergraph.

    ``m`` counts the edges off the cycle and ``p`` the cycle length.
    """
    if r < 3 or p < 3 or m < 0:
        raise DomainError(f"need r >= 3, p >= 3, m >= 0; got r={r}, m={m}, p={p}")
    base = k ** (r - 1) - 1
    return base ** (m + p) + (-1) ** p * (k - 1) * base**m


@dataclass(frozen=True)
class BoundaryProfile:
    """Counts of proper colorings of ``H - e`` by the color tuple on ``e``.

    ``counts[(i_1, ..., i_r)]`` (0-based colors, aligned with ``vertices``)
    is the number of proper colorings of ``H - e`` giving ``vertices[j]``
    color ``i_j``.
    """

    edge: int
    k: int
    vertices: tuple[int, ...]
    counts: dict

    def total(self) -> int:
        return sum(self.counts.values())

    def grouped(self, key: Callable[[tuple], Hashable]) -> dict:
        out: dict = {}
        for t, c in self.counts.items():
            out.setdefault(key(t), set()).add(c)
        return out

    def constant_split(self):
        """``(t_1, t_2)`` when counts depend only on whether the tuple is constant.

        Returns ``None`` if the counts are not constant on those two classes.
        """
        groups = self.grouped(lambda t: len(set(t)) == 1)
        return _two_values(groups.get(True), groups.get(False))

    def first_pair_split(self):
        """``(t_1, t_2)`` when counts depend only on whether ``i_1 == i_2``."""
        groups = self.grouped(lambda t: t[0] == t[1])
        return _two_values(groups.get(True), groups.get(False))

    def to_json(self) -> dict:
        return {
            "edge": self.edge,
            "k": self.k,
            "vertices": list(self.vertices),
            "counts": {
                ",".join(str(c + 1) for c in t): str(v) for t, v in sorted(self.counts.items())
            },
        }


def _two_values(equal, unequal):
    if not equal or len(equal) != 1:
        return None
    if unequal is not None and len(unequal) != 1:
        return None
    t1 = next(iter(equal))
    t2 = next(iter(unequal)) if unequal else None
    return t1, t2


def boundary_profile(
    H: Hypergraph,
    e: int,
    k: int,
    order: Optional[Sequence[int]] = None,
    budget: Optional[int] = None,
) -> BoundaryProfile:
    """Tabulate proper colorings of ``H - e`` by the colors they put on ``e``.

    ``order`` fixes the vertex order inside ``e``; by default a cycle edge of
    a unicyclic hypergraph lists its two cycle-attachment vertices first.
    """
    if not 0 <= e < H.m:
        raise IndexOutOfRange(f"edge index {e} not in [0, {H.m})")
    if k < 1:
        raise DomainError(f"k must be at least 1, got {k}")
    verts = tuple(order) if order is not None else attachment_order(H, e)
    if sorted(verts) != list(H.edges[e]):
        raise DomainError(f"order {verts} is not a permutation of edge {H.edges[e]}")
    rest = delete_edge(H, e)
    r = len(verts)
    total = k**H.n
    check_budget(total * max(rest.m, 1), budget, "boundary_profile")
    weights = np.array([k**i for i in range(r)], dtype=np.int64)
    tally = np.zeros(k**r, dtype=np.int64)
    for lo, hi in ranges(total):
        block = coloring_block(H.n, k, lo, hi)
        good = ~monochromatic_mask(rest, block)
        code = block[good][:, list(verts)] @ weights
        tally += np.bincount(code, minlength=k**r)
    counts = {}
    for code in range(k**r):
        digits = tuple((code // k**i) % k for i in range(r))
        counts[digits] = int(tally[code])
    return BoundaryProfile(e, k, verts, counts)


def t_values_acyclic(P_minus: int, P: int, k: int, r: int):
    """``(t_1, t_2)`` predicted when every vertex of ``e`` is free in ``H - e``."""
    t1 = Fraction(P_minus - P, k)
    t2 = Fraction(P, k * (k ** (r - 1) - 1))
    return t1, t2


def t_values_cycle(P_minus: int, P: int, k: int, r: int):
    """``(t_1, t_2)`` predicted for a cycle edge of a unicyclic hypergraph."""
    t1 = Fraction(P_minus - P, k)
    t2 = Fraction(k ** (r - 2) * P + (1 - k ** (r - 2)) * P_minus, k ** (r - 1) * (k - 1))
    return t1, t2
