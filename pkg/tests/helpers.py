"""Shared test utilities: seeded random spec generation."""

import numpy as np

from gaugegraph import GraphSpec


def random_ratio(rng, lo=0.2, hi=5.0):
    """Complex hopping ratio with |t| in [lo, hi] and uniform argument."""
    return rng.uniform(lo, hi) * np.exp(1j * rng.uniform(-np.pi, np.pi))


def random_symmetric_connectivity(rng, sites):
    """Random binary vector with a_d = a_(N-d) and at least one active distance."""
    conn = np.zeros(sites - 1, dtype=int)
    for d in range(1, sites // 2 + 1):
        bit = int(rng.integers(0, 2))
        conn[d - 1] = bit
        conn[sites - d - 1] = bit
    if not conn.any():
        conn[0] = conn[-1] = 1
    return tuple(conn)


def random_valid_spec(rng, max_sites=24):
    """A random valid GraphSpec across patterns, ratios, and gauges."""
    pattern = rng.choice(["fcg", "hcs", "custom"])
    if pattern == "hcs":
        sites = 2 * int(rng.integers(2, max_sites // 2 + 1))
        connectivity = None
    elif pattern == "custom":
        sites = int(rng.integers(3, max_sites + 1))
        connectivity = random_symmetric_connectivity(rng, sites)
    else:
        sites = int(rng.integers(2, max_sites + 1))
        connectivity = None
    t_bwd = random_ratio(rng, 0.5, 2.0)
    t_fwd = random_ratio(rng) * t_bwd
    gauge = int(rng.integers(0, sites))
    return GraphSpec(
        sites=sites, pattern=pattern, t_fwd=t_fwd, t_bwd=t_bwd,
        gauge=gauge, connectivity=connectivity,
    )
