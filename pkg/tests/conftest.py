"""Shared test helpers: brute-force oracles kept independent of the
package's own traversal code."""
from __future__ import annotations

import numpy as np

from fairdag.graph import CausalGraph


def brute_force_paths(edges, n, source, target=None, max_len=None):
    """Recursive simple-path enumeration over a raw edge list.

    Returns every simple path (as node lists) from source with >= 1 edge,
    restricted to those ending at target when one is given.
    """
    if max_len is None:
        max_len = n - 1
    adj = {i: sorted(j for a, j in edges if a == i) for i in range(n)}
    found = []

    def rec(path):
        if len(path) - 1 >= max_len:
            return
        for nxt in adj[path[-1]]:
            if nxt in path:
                continue
            new = path + [nxt]
            if target is None or nxt == target:
                found.append(new)
            if target is None or nxt != target:
                rec(new)

    rec([source])
    return found


def brute_force_reaches(edges, start, goal):
    """Transitive reachability by naive fixpoint iteration."""
    reach = {start}
    changed = True
    while changed:
        changed = False
        for a, b in edges:
            if a in reach and b not in reach:
                reach.add(b)
                changed = True
    return goal in reach


def random_dag(n, edge_prob, rng) -> CausalGraph:
    """Random DAG via shuffled topological order; edges go forward only."""
    order = rng.permutation(n)
    g = CausalGraph([f"v{i}" for i in range(n)])
    for a in range(n):
        for b in range(a + 1, n):
            if rng.random() < edge_prob:
                g.add_edge_unchecked(int(order[a]), int(order[b]))
    return g


def joint_probability_mi(x, y):
    """Exhaustive plug-in MI in nats from the full joint table (test oracle)."""
    x = np.asarray(x)
    y = np.asarray(y)
    n = len(x)
    levels_x = sorted(set(x.tolist()))
    levels_y = sorted(set(y.tolist()))
    mi = 0.0
    for lx in levels_x:
        px = float(np.mean(x == lx))
        for ly in levels_y:
            pxy = float(np.mean((x == lx) & (y == ly)))
            py = float(np.mean(y == ly))
            if pxy > 0:
                mi += pxy * np.log(pxy / (px * py))
    return mi


def entropy_of(x):
    vals, counts = np.unique(np.asarray(x), return_counts=True)
    p = counts / counts.sum()
    return float(-np.sum(p * np.log(p)))
