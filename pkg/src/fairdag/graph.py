"""Directed graph with incremental acyclicity enforcement.

Nodes are identified by their position in the name list given at
construction; all operations work on indices and names only appear at
I/O boundaries (edge-list text, adjacency JSON).  Edge insertion through
``add_edge_acyclic`` keeps the graph a DAG at all times: the candidate
edge is admitted only if its child cannot already reach its parent.
"""
from __future__ import annotations

import hashlib
import heapq
import json
from typing import Iterator, Sequence

import numpy as np

from .errors import ArgumentError, CyclicGraphError


class CausalGraph:
    """Node-labeled directed graph with an adjacency-matrix view."""

    def __init__(self, nodes: Sequence[str]):
        names = list(nodes)
        if len(set(names)) != len(names):
            raise ArgumentError("duplicate node names")
        self.nodes: list[str] = names
        self._succ: list[set[int]] = [set() for _ in names]
        self._pred: list[set[int]] = [set() for _ in names]

    # ---- construction ----------------------------------------------------

    @classmethod
    def from_edges(cls, nodes: Sequence[str], edges) -> "CausalGraph":
        """Build a graph inserting every edge through the acyclic gate."""
        g = cls(nodes)
        for u, v in edges:
            if not g.add_edge_acyclic(u, v):
                raise CyclicGraphError(f"edge ({u}, {v}) would create a cycle")
        return g

    @classmethod
    def from_adjacency(cls, nodes: Sequence[str], matrix) -> "CausalGraph":
        """Rebuild a graph from an adjacency matrix (no acyclicity gate)."""
        g = cls(nodes)
        m = np.asarray(matrix)
        if m.shape != (len(g.nodes), len(g.nodes)):
            raise ArgumentError(f"matrix shape {m.shape} does not match node count")
        for i, j in zip(*np.nonzero(m)):
            g.add_edge_unchecked(int(i), int(j))
        return g

    # ---- mutation ----------------------------------------------------------

    def _check_index(self, i: int) -> None:
        if not isinstance(i, (int, np.integer)) or not 0 <= i < len(self.nodes):
            raise ArgumentError(f"node index {i!r} out of range [0, {len(self.nodes)})")

    def add_edge_acyclic(self, parent: int, child: int) -> bool:
        """Insert parent -> child if the graph stays acyclic.

        Returns True and keeps the edge when no directed cycle results;
        otherwise leaves the graph untouched and returns False.  The check
        is a reachability walk from child to parent, O(n + e).
        """
        self._check_index(parent)
        self._check_index(child)
        if parent == child:
            raise ArgumentError("self-loops are not allowed")
        if child in self._succ[parent]:
            return True
        if self._reaches(child, parent):
            return False
        self._succ[parent].add(child)
        self._pred[child].add(parent)
        return True

    def add_edge_unchecked(self, parent: int, child: int) -> None:
        """Raw edge insertion bypassing the acyclic gate (testing, imports)."""
        self._check_index(parent)
        self._check_index(child)
        if parent == child:
            raise ArgumentError("self-loops are not allowed")
        self._succ[parent].add(child)
        self._pred[child].add(parent)

    # ---- queries -----------------------------------------------------------

    def _reaches(self, start: int, goal: int) -> bool:
        if start == goal:
            return True
        seen = {start}
        stack = [start]
        while stack:
            u = stack.pop()
            for v in self._succ[u]:
                if v == goal:
                    return True
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
        return False

    @property
    def n_nodes(self) -> int:
        return len(self.nodes)

    @property
    def n_edges(self) -> int:
        return sum(len(s) for s in self._succ)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (parent, child) index pairs, sorted."""
        return sorted((u, v) for u in range(len(self._succ)) for v in self._succ[u])

    def edge_names(self) -> list[tuple[str, str]]:
        return [(self.nodes[u], self.nodes[v]) for u, v in self.edges()]

    def has_edge(self, parent: int, child: int) -> bool:
        return child in self._succ[parent]

    def successors(self, node: int) -> list[int]:
        return sorted(self._succ[node])

    def predecessors(self, node: int) -> list[int]:
        return sorted(self._pred[node])

    def in_degree(self, node: int) -> int:
        return len(self._pred[node])

    def roots(self) -> list[int]:
        """Indices with no incoming edge."""
        return [i for i in range(self.n_nodes) if not self._pred[i]]

    def index_of(self, name: str) -> int:
        try:
            return self.nodes.index(name)
        except ValueError:
            raise ArgumentError(f"unknown node name {name!r}") from None

    def is_dag(self) -> bool:
        """True iff no directed cycle exists (Kahn's algorithm)."""
        indeg = [len(p) for p in self._pred]
        ready = [i for i, d in enumerate(indeg) if d == 0]
        seen = 0
        while ready:
            u = ready.pop()
            seen += 1
            for v in self._succ[u]:
                indeg[v] -= 1
                if indeg[v] == 0:
                    ready.append(v)
        return seen == self.n_nodes

    def topological_order(self) -> list[int]:
        """Topological order with ties broken by ascending node index."""
        indeg = [len(p) for p in self._pred]
        heap = [i for i, d in enumerate(indeg) if d == 0]
        heapq.heapify(heap)
        order: list[int] = []
        while heap:
            u = heapq.heappop(heap)
            order.append(u)
            for v in sorted(self._succ[u]):
                indeg[v] -= 1
                if indeg[v] == 0:
                    heapq.heappush(heap, v)
        if len(order) != self.n_nodes:
            raise CyclicGraphError("graph contains a directed cycle")
        return order

    def enumerate_directed_paths(
        self,
        source: int,
        target: int | None = None,
        max_length: int | None = None,
    ) -> list[list[int]]:
        """Simple directed paths from ``source``, lexicographic by index sequence.

        With a target, only paths ending there are returned.  Without one,
        every simple path of at least one edge is returned (each prefix of a
        longer path is itself listed).  ``max_length`` caps the edge count
        and defaults to n - 1, the longest possible simple path.
        """
        self._check_index(source)
        if target is not None:
            self._check_index(target)
        if max_length is None:
            max_length = max(self.n_nodes - 1, 1)
        if max_length < 1:
            raise ArgumentError("max_length must be >= 1")

        paths: list[list[int]] = []
        path = [source]
        on_path = {source}

        def walk(u: int) -> None:
            if len(path) - 1 >= max_length:
                return
            for v in sorted(self._succ[u]):
                if v in on_path:
                    continue
                path.append(v)
                on_path.add(v)
                if target is None or v == target:
                    paths.append(list(path))
                if target is None or v != target:
                    walk(v)
                on_path.discard(v)
                path.pop()

        walk(source)
        return paths

    # ---- export / import ---------------------------------------------------

    def adjacency_matrix(self) -> np.ndarray:
        """A(i, j) = 1 iff edge i -> j is present."""
        m = np.zeros((self.n_nodes, self.n_nodes), dtype=int)
        for u, v in self.edges():
            m[u, v] = 1
        return m

    def to_adjacency_dict(self) -> dict:
        return {"nodes": list(self.nodes), "matrix": self.adjacency_matrix().tolist()}

    @classmethod
    def from_adjacency_dict(cls, payload: dict) -> "CausalGraph":
        return cls.from_adjacency(payload["nodes"], payload["matrix"])

    def write_adjacency_json(self, path) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(self.to_adjacency_dict(), fh, indent=2, sort_keys=True)
            fh.write("\n")

    @classmethod
    def read_adjacency_json(cls, path) -> "CausalGraph":
        with open(path, encoding="utf-8") as fh:
            return cls.from_adjacency_dict(json.load(fh))

    def to_edge_list_text(self) -> str:
        """One ``parent_name -> child_name`` line per edge."""
        return "".join(f"{u} -> {v}\n" for u, v in self.edge_names())

    @classmethod
    def from_edge_list_text(cls, text: str, nodes: Sequence[str] | None = None) -> "CausalGraph":
        pairs = []
        for raw in text.splitlines():
            line = raw.strip()
            if not line:
                continue
            if "->" not in line:
                raise ArgumentError(f"malformed edge line: {line!r}")
            left, right = line.split("->", 1)
            pairs.append((left.strip(), right.strip()))
        if nodes is None:
            seen: list[str] = []
            for a, b in pairs:
                for name in (a, b):
                    if name not in seen:
                        seen.append(name)
            nodes = seen
        g = cls(nodes)
        for a, b in pairs:
            g.add_edge_unchecked(g.index_of(a), g.index_of(b))
        return g

    def write_edge_list(self, path) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(self.to_edge_list_text())

    def structure_hash(self) -> str:
        """Digest of node names plus the sorted edge set."""
        payload = json.dumps({"nodes": self.nodes, "edges": self.edges()})
        return hashlib.sha256(payload.encode("utf-8")).hexdigest()

    def copy(self) -> "CausalGraph":
        g = CausalGraph(self.nodes)
        for u, v in self.edges():
            g.add_edge_unchecked(u, v)
        return g

    def __eq__(self, other) -> bool:
        if not isinstance(other, CausalGraph):
            return NotImplemented
        return self.nodes == other.nodes and self._succ == other._succ

    def __repr__(self) -> str:
        return f"CausalGraph(nodes={self.n_nodes}, edges={self.n_edges})"

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.edges())
