"""Integer-indexed honeycomb lattice: sites, embedding, and neighbour maps.

The walk graph is the union of two triangular sublattices, tagged ``"A"``
and ``"B"``.  A site is addressed by its tag and an integer pair ``(x, y)``;
the physical embedding places A(x, y) at ``(3x/2, sqrt(3)*y/2)`` and
B(x, y) at ``((3x+1)/2, sqrt(3)*y/2)``, which interleave into a honeycomb.
Every site has exactly three neighbours, one per coin direction, and every
hop swaps the sublattice tag, so the graph is 3-regular and bipartite.

Integer indices are the working representation throughout the package:
they are exact, hashable, and free of floating-point identity issues.  The
half-integer physical coordinates are derived output only.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import sqrt
from typing import Literal

__all__ = [
    "Site",
    "PhysicalPoint",
    "to_physical",
    "shift_target",
    "support_parity_ok",
]

Sublattice = Literal["A", "B"]

SQRT3_HALF = sqrt(3.0) / 2.0

# Neighbour displacements (dx, dy) per coin index 0, 1, 2.  The x-step
# direction depends on the starting sublattice; applying the same coin
# index twice returns to the starting site.
_SHIFT_FROM_A = ((0, 1), (-1, 0), (0, -1))
_SHIFT_FROM_B = ((0, -1), (1, 0), (0, 1))


@dataclass(frozen=True, order=True)
class Site:
    """A lattice vertex: sublattice tag plus integer indices.

    Ordering is lexicographic in (sub, x, y), which is the canonical
    site order used for deterministic accumulation and file output.
    """

    sub: Sublattice
    x: int
    y: int

    def __post_init__(self) -> None:
        if self.sub not in ("A", "B"):
            raise ValueError(f"sublattice tag must be 'A' or 'B', got {self.sub!r}")

    @classmethod
    def a(cls, x: int, y: int) -> "Site":
        return cls("A", x, y)

    @classmethod
    def b(cls, x: int, y: int) -> "Site":
        return cls("B", x, y)


@dataclass(frozen=True)
class PhysicalPoint:
    """Embedded lattice coordinates.

    ``px`` is always an integer multiple of 1/2 and ``py`` an integer
    multiple of sqrt(3)/2.
    """

    px: float
    py: float


def to_physical(site: Site) -> PhysicalPoint:
    """Map a site to its embedded coordinates.

    A(x, y) lands on (3x/2, sqrt(3)*y/2); B(x, y) on ((3x+1)/2, sqrt(3)*y/2).
    The map is injective: the two sublattices occupy disjoint columns.
    """
    if site.sub == "A":
        px = 1.5 * site.x
    else:
        px = 1.5 * site.x + 0.5
    return PhysicalPoint(px, SQRT3_HALF * site.y)


def shift_target(site: Site, coin_index: int) -> Site:
    """Return the neighbour reached from ``site`` along a coin direction.

    Coin index 0, 1, 2 selects one of the three honeycomb edges at the
    site.  From A(x, y): coin 0 -> B(x, y+1), coin 1 -> B(x-1, y),
    coin 2 -> B(x, y-1).  From B(x, y): coin 0 -> A(x, y-1),
    coin 1 -> A(x+1, y), coin 2 -> A(x, y+1).  The move always flips the
    sublattice tag and the parity of x + y, and applying the same coin
    index from the target leads back to ``site``.
    """
    if coin_index not in (0, 1, 2):
        raise ValueError(f"coin_index must be 0, 1 or 2, got {coin_index!r}")
    if site.sub == "A":
        dx, dy = _SHIFT_FROM_A[coin_index]
        return Site("B", site.x + dx, site.y + dy)
    dx, dy = _SHIFT_FROM_B[coin_index]
    return Site("A", site.x + dx, site.y + dy)


def support_parity_ok(site: Site, t: int) -> bool:
    """Whether ``site`` can carry amplitude at step ``t`` of a walk from A(0, 0).

    A walker started at the origin alternates sublattices each step and
    flips the parity of x + y each step, so it is observable only on
    A-sites with x + y even at even times and on B-sites with x + y odd
    at odd times.
    """
    even_site = (site.x + site.y) % 2 == 0
    if t % 2 == 0:
        return site.sub == "A" and even_site
    return site.sub == "B" and not even_site
