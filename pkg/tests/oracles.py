"""Independent reference implementations used to cross-check the package.

Nothing here shares code with the library's computational paths: the
stepper is a plain dict scatter driven by the public neighbour map, graph
distances come from BFS, and the Green-integral oracle is a regularized
two-dimensional Riemann sum (the library integrates a reduced
one-dimensional form instead).
"""

from __future__ import annotations

from collections import deque

import numpy as np

from hexwalk import Site, shift_target


def reference_step(amps: dict, coin_entries: np.ndarray) -> dict:
    """One walk step as a literal per-site scatter into a fresh dict."""
    out: dict = {}
    for site, v in amps.items():
        mixed = coin_entries @ v
        for j in range(3):
            target = shift_target(site, j)
            acc = out.setdefault(target, np.zeros(3, dtype=complex))
            acc[j] += mixed[j]
    return out


def reference_evolve(state_triple, t: int, coin_entries: np.ndarray) -> dict:
    """Evolve a walk from the origin with the dict stepper."""
    amps = {Site.a(0, 0): np.asarray(state_triple, dtype=complex)}
    for _ in range(t):
        amps = reference_step(amps, coin_entries)
    return amps


def graph_distances(max_dist: int) -> dict:
    """BFS graph distances from A(0, 0) out to ``max_dist`` hops."""
    origin = Site.a(0, 0)
    dist = {origin: 0}
    queue = deque([origin])
    while queue:
        site = queue.popleft()
        d = dist[site]
        if d == max_dist:
            continue
        for j in range(3):
            nbr = shift_target(site, j)
            if nbr not in dist:
                dist[nbr] = d + 1
                queue.append(nbr)
    return dist


def g_difference_oracle_table(cases, c: float, s: float, n: int, block: int = 512):
    """Regularized 2D momentum-grid sums for a batch of G(x, y, x1, y1).

    Sums [cos(a x + b y) - cos(a x' + b y')] / D(a, b) over a uniform
    n-by-n grid on [-pi, pi)^2 with D the shared walk denominator
    2 s^2 (1 - cos a cos b) + (1 - c)^2 sin^2 b.  Grid points where D
    vanishes analytically (the zone center and corner) are excluded; the
    even-shift difference numerators vanish there as well, so the excluded
    cells contribute nothing in the limit.  Processed in row blocks of the
    b axis to bound memory at large n.
    """
    cases = [tuple(int(v) for v in case) for case in cases]
    xs = sorted({v for (x, _, x1, _) in cases for v in (x, x - x1)})
    ys = sorted({v for (_, y, _, y1) in cases for v in (y, y - y1)})
    xcol = {v: i for i, v in enumerate(xs)}
    yrow = {v: i for i, v in enumerate(ys)}
    grid = (np.arange(n) - n // 2) * (2.0 * np.pi / n)
    ea = np.exp(1j * np.outer(grid, xs))
    cos_a = np.cos(grid)
    table = np.zeros((len(ys), len(xs)), dtype=complex)
    for start in range(0, n, block):
        gb = grid[start : start + block]
        denom = (
            2.0 * s * s * (1.0 - np.outer(np.cos(gb), cos_a))
            + ((1.0 - c) ** 2) * (np.sin(gb) ** 2)[:, None]
        )
        weight = np.where(denom < 1e-12, 0.0, 1.0 / np.where(denom < 1e-12, 1.0, denom))
        eb = np.exp(1j * np.outer(ys, gb))
        table += eb @ (weight @ ea)
    values = {}
    for (x, y, x1, y1) in cases:
        v = table[yrow[y], xcol[x]] - table[yrow[y - y1], xcol[x - x1]]
        values[(x, y, x1, y1)] = float(np.real(v)) / n**2
    return values


def g_difference_oracle(cases, c: float, s: float, start_n: int = 1024,
                        max_n: int = 8192, tol: float = 1e-7):
    """Refine the grid oracle until successive values settle below ``tol``.

    Returns (values, n) for the first grid size whose results differ from
    the previous refinement by less than ``tol`` everywhere.  Refuses to
    return an unconverged table.
    """
    prev = None
    n = start_n
    while n <= max_n:
        cur = g_difference_oracle_table(cases, c, s, n)
        if prev is not None:
            drift = max(abs(cur[k] - prev[k]) for k in cur)
            if drift < tol:
                return cur, n
        prev = cur
        n *= 2
    raise AssertionError(f"grid oracle did not converge by n = {max_n}")
