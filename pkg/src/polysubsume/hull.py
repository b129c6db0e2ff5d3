"""Convex hull of a simple polygon, its pockets, lid edges and hull chains."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple

from .exact import on_segment
from .polygon import Polygon


@dataclass(frozen=True)
class Hull:
    """Indices of the polygon vertices on the hull boundary, in boundary order.

    Vertices lying on a hull edge without being a corner are included; they
    are convex in the polygon and keep every lid a genuine chord.
    """

    vertices: Tuple[int, ...]
    corners: Tuple[int, ...]


@dataclass(frozen=True)
class Pocket:
    """Component of CH(P) minus P: lid (i, j) plus boundary chain i..j.

    ``lid`` holds polygon indices; the chain is the index range walking the
    polygon from ``lid[0]`` forward to ``lid[1]``.
    """

    lid: Tuple[int, int]
    n_poly: int

    @property
    def chain(self) -> List[int]:
        i, j = self.lid
        if j < i:
            j += self.n_poly
        return [k % self.n_poly for k in range(i, j + 1)]

    def polygon_indices(self) -> List[int]:
        """Counterclockwise pocket cycle as polygon indices: lid, then chain back."""
        ch = self.chain
        return [ch[0]] + ch[:0:-1]

    def polygon(self, p: Polygon) -> Polygon:
        return Polygon([p.vertices[k] for k in self.polygon_indices()])


@dataclass(frozen=True)
class HullChain:
    """Maximal run of polygon edges on the hull between lids (polygon indices)."""

    indices: Tuple[int, ...]


def convex_hull(p: Polygon) -> Hull:
    """Hull by Melkman's deque algorithm over the boundary order, O(n)."""
    corners = sorted(p.coords().melkman())
    n = len(p)
    v = p.vertices
    out = []
    for a, b in zip(corners, corners[1:] + corners[:1]):
        out.append(a)
        k = (a + 1) % n
        while k != b:
            if on_segment(v[a], v[b], v[k]):
                out.append(k)
            k = (k + 1) % n
    return Hull(tuple(out), tuple(corners))


def extract_pockets(p: Polygon, h: Hull) -> Tuple[List[Pocket], List[HullChain]]:
    """Pockets (one per lid) and the complementary hull chains."""
    n = len(p)
    hv = list(h.vertices)
    m = len(hv)
    lids = [(hv[t], hv[(t + 1) % m]) for t in range(m) if (hv[t] + 1) % n != hv[(t + 1) % m]]
    pockets = [Pocket(lid, n) for lid in lids]
    chains: List[HullChain] = []
    if not lids:
        return pockets, [HullChain(tuple(range(n)))]
    for t, (_, start) in enumerate(lids):
        stop = lids[(t + 1) % len(lids)][0]
        idx = [start]
        k = start
        while k != stop:
            k = (k + 1) % n
            idx.append(k)
        chains.append(HullChain(tuple(idx)))
    return pockets, chains
