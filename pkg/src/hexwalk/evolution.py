"""Exact real-space time evolution of the walk.

One step applies the coin matrix at every occupied site and then scatters
coin component ``j`` of each site to its neighbour along direction ``j``.
Because a walk started at the origin always occupies a single sublattice,
the step alternates between the two scatter tables: A-sites feed B-sites
at even times and vice versa.

Wave functions are sparse: amplitudes are held as parallel arrays of
integer site indices (in canonical (sublattice, x, y) order) and complex
triples.  The scatter is collision-free -- each (site, component) pair of
the next step receives exactly one contribution -- so sums are exactly
reproducible run to run regardless of traversal order.  A dict view of the
same data is available through :attr:`WaveFunction.amplitudes`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .coin import CoinMatrix, CoinState
from .lattice import Site, Sublattice

__all__ = [
    "WaveFunction",
    "Distribution",
    "initial_wavefunction",
    "step",
    "evolve",
    "distribution",
    "return_series",
]

# Site keys are packed as x * KEY_BASE + y, which sorts like (x, y) as
# long as |y| < KEY_BASE / 2; this caps walks at ~2 million steps.
_KEY_BASE = np.int64(1) << np.int64(22)
_KEY_HALF = _KEY_BASE >> np.int64(1)

# Packed-key offsets of the three scatter targets, per starting sublattice.
_OFFSETS_FROM_A = (np.int64(1), -_KEY_BASE, np.int64(-1))
_OFFSETS_FROM_B = (np.int64(-1), _KEY_BASE, np.int64(1))


def _encode(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    return x.astype(np.int64) * _KEY_BASE + y.astype(np.int64)


def _decode(keys: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    y = (keys + _KEY_HALF) % _KEY_BASE - _KEY_HALF
    x = (keys - y) // _KEY_BASE
    return x, y


@dataclass(frozen=True)
class WaveFunction:
    """Sparse walker state at step ``t``.

    All occupied sites share one sublattice tag.  ``xy`` holds the integer
    indices sorted in canonical order and ``values`` the matching complex
    amplitude triples; both arrays are read-only.
    """

    sublattice: Sublattice
    xy: np.ndarray
    values: np.ndarray
    t: int

    def __post_init__(self) -> None:
        xy = np.ascontiguousarray(self.xy, dtype=np.int64)
        values = np.ascontiguousarray(self.values, dtype=np.complex128)
        if xy.ndim != 2 or xy.shape[1] != 2 or values.shape != (xy.shape[0], 3):
            raise ValueError("xy must be (n, 2) and values (n, 3)")
        xy.setflags(write=False)
        values.setflags(write=False)
        object.__setattr__(self, "xy", xy)
        object.__setattr__(self, "values", values)

    def __len__(self) -> int:
        return self.xy.shape[0]

    @cached_property
    def amplitudes(self) -> dict[Site, np.ndarray]:
        """Mapping from occupied sites to their amplitude triples."""
        return {
            Site(self.sublattice, int(x), int(y)): self.values[i]
            for i, (x, y) in enumerate(self.xy)
        }

    def amplitude(self, site: Site) -> np.ndarray:
        """Amplitude triple at ``site`` (zeros if unoccupied)."""
        if site.sub == self.sublattice:
            key = np.int64(site.x) * _KEY_BASE + np.int64(site.y)
            keys = _encode(self.xy[:, 0], self.xy[:, 1])
            i = int(np.searchsorted(keys, key))
            if i < keys.size and keys[i] == key:
                return self.values[i].copy()
        return np.zeros(3, dtype=np.complex128)

    def norm_squared(self) -> float:
        return float(np.sum(np.abs(self.values) ** 2))


@dataclass(frozen=True)
class Distribution:
    """Per-site observation probabilities at step ``t``."""

    sublattice: Sublattice
    xy: np.ndarray
    values: np.ndarray
    t: int

    def __post_init__(self) -> None:
        xy = np.ascontiguousarray(self.xy, dtype=np.int64)
        values = np.ascontiguousarray(self.values, dtype=np.float64)
        xy.setflags(write=False)
        values.setflags(write=False)
        object.__setattr__(self, "xy", xy)
        object.__setattr__(self, "values", values)

    def __len__(self) -> int:
        return self.xy.shape[0]

    @cached_property
    def probs(self) -> dict[Site, float]:
        return {
            Site(self.sublattice, int(x), int(y)): float(self.values[i])
            for i, (x, y) in enumerate(self.xy)
        }

    def probability(self, site: Site) -> float:
        if site.sub == self.sublattice:
            key = np.int64(site.x) * _KEY_BASE + np.int64(site.y)
            keys = _encode(self.xy[:, 0], self.xy[:, 1])
            i = int(np.searchsorted(keys, key))
            if i < keys.size and keys[i] == key:
                return float(self.values[i])
        return 0.0

    def total(self) -> float:
        return float(np.sum(self.values))


def initial_wavefunction(state: CoinState) -> WaveFunction:
    """Place the walker at A(0, 0) with the given coin amplitudes."""
    xy = np.zeros((1, 2), dtype=np.int64)
    values = state.as_array().reshape(1, 3)
    return WaveFunction("A", xy, values, 0)


def step(wf: WaveFunction, coin: CoinMatrix, prune_tol: float = 0.0) -> WaveFunction:
    """Advance the walk by one step: coin at every site, then scatter.

    Component ``j`` of the mixed amplitude at each site moves to the
    neighbour along coin direction ``j``.  The total norm is preserved up
    to the rounding of the coin multiply (well below 1e-12 per step).

    Parameters
    ----------
    wf : WaveFunction
        State to advance.
    coin : CoinMatrix
        Coin to apply.
    prune_tol : float, optional
        If positive, drop result sites whose squared amplitude norm is
        below this threshold.  Pruning leaks at most
        ``n_sites * prune_tol`` of total probability; the default keeps
        every scattered site.
    """
    mixed = wf.values @ coin.entries.T
    keys = _encode(wf.xy[:, 0], wf.xy[:, 1])
    offsets = _OFFSETS_FROM_A if wf.sublattice == "A" else _OFFSETS_FROM_B
    clouds = [keys + off for off in offsets]
    merged = np.unique(np.concatenate(clouds))
    values = np.zeros((merged.size, 3), dtype=np.complex128)
    for j, cloud in enumerate(clouds):
        values[np.searchsorted(merged, cloud), j] = mixed[:, j]
    if prune_tol > 0.0:
        keep = np.einsum("ij,ij->i", values.real, values.real) \
            + np.einsum("ij,ij->i", values.imag, values.imag) >= prune_tol
        if not keep.all():
            merged = merged[keep]
            values = values[keep]
    x, y = _decode(merged)
    out_sub: Sublattice = "B" if wf.sublattice == "A" else "A"
    return WaveFunction(out_sub, np.column_stack([x, y]), values, wf.t + 1)


def evolve(
    state: CoinState, t: int, coin: CoinMatrix, prune_tol: float = 0.0
) -> WaveFunction:
    """Run ``t`` steps from the origin with the given initial coin state."""
    if t < 0:
        raise ValueError("step count must be non-negative")
    wf = initial_wavefunction(state)
    for _ in range(t):
        wf = step(wf, coin, prune_tol=prune_tol)
    return wf


def distribution(wf: WaveFunction) -> Distribution:
    """Per-site probabilities: the squared amplitude norm at each site."""
    probs = np.einsum("ij,ij->i", wf.values.real, wf.values.real) \
        + np.einsum("ij,ij->i", wf.values.imag, wf.values.imag)
    return Distribution(wf.sublattice, wf.xy, probs, wf.t)


def return_series(
    state: CoinState, t_max: int, coin: CoinMatrix
) -> list[tuple[int, float]]:
    """Probability of observing the walker back at the origin at even times.

    Returns ``(2t, probability)`` pairs for 2t = 0, 2, ... up to ``t_max``,
    computed in a single evolution pass.  Odd times are omitted: the origin
    sits on the A-sublattice, which carries no amplitude there.
    """
    if t_max < 0:
        raise ValueError("t_max must be non-negative")
    wf = initial_wavefunction(state)
    series = [(0, float(np.sum(np.abs(wf.amplitude(Site.a(0, 0))) ** 2)))]
    for t in range(1, t_max + 1):
        wf = step(wf, coin)
        if t % 2 == 0:
            amp = wf.amplitude(Site.a(0, 0))
            series.append((t, float(np.sum(np.abs(amp) ** 2))))
    return series
