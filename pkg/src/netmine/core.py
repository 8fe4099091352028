"""Attributed graph data model.

Two storage variants share one read interface: :class:`Network` keeps
sorted adjacency lists and supports mutation, :class:`CompactNetwork` is
an immutable CSR-like form for read-only analysis.  Node and link indices
are dense integers; removal recompacts by swapping the last element into
the freed slot, so indices are positional handles, not stable identities.
"""

from __future__ import annotations

import math
from bisect import insort
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    DuplicateLinkError,
    ImmutableNetworkError,
    MissingAttributeError,
    OutOfRangeError,
    SelfLoopError,
)

ATTRIBUTE_KINDS = ("categorical", "numerical", "string")


class AttributeColumn:
    """Named column of per-node or per-link values.

    ``kind`` is fixed at creation: "numerical" slots hold finite reals,
    "categorical" and "string" slots hold text.  Empty slots are None.
    """

    __slots__ = ("name", "kind", "values")

    def __init__(self, name, kind, values=None):
        if kind not in ATTRIBUTE_KINDS:
            raise ValueError(f"unknown attribute kind {kind!r}, expected one of {ATTRIBUTE_KINDS}")
        self.name = name
        self.kind = kind
        self.values = list(values) if values is not None else []

    def __len__(self):
        return len(self.values)

    def __getitem__(self, index):
        return self.values[index]

    def __setitem__(self, index, value):
        self.values[index] = self._coerce(value)

    def _coerce(self, value):
        if value is None:
            return None
        if self.kind == "numerical":
            value = float(value)
            if not math.isfinite(value):
                raise ValueError(f"attribute {self.name!r} requires finite values, got {value!r}")
            return value
        return str(value)

    def append(self, value=None):
        self.values.append(self._coerce(value))

    def copy(self):
        return AttributeColumn(self.name, self.kind, self.values)

    def __repr__(self):
        return f"AttributeColumn({self.name!r}, {self.kind!r}, n={len(self.values)})"


class _NetworkBase:
    """Read API shared by both storage variants."""

    directed: bool

    @property
    def node_count(self):
        raise NotImplementedError

    @property
    def link_count(self):
        raise NotImplementedError

    def neighbors(self, u, direction="both"):
        raise NotImplementedError

    def link_ends(self, index):
        raise NotImplementedError

    def link_index(self, u, v):
        raise NotImplementedError

    def _check_node(self, u):
        if not 0 <= u < self.node_count:
            raise OutOfRangeError(f"node index {u} out of range [0, {self.node_count})")

    def _check_link(self, index):
        if not 0 <= index < self.link_count:
            raise OutOfRangeError(f"link index {index} out of range [0, {self.link_count})")

    def degree(self, u, direction="both"):
        """Number of neighbors of ``u`` in the given direction."""
        return len(self.neighbors(u, direction))

    def has_link(self, u, v):
        self._check_node(u)
        self._check_node(v)
        return self.link_index(u, v) is not None

    def links(self):
        """All links as (source, target) pairs in link-index order."""
        return [self.link_ends(i) for i in range(self.link_count)]

    def node_attribute(self, name):
        try:
            return self.node_attributes[name]
        except KeyError:
            raise MissingAttributeError(f"no node attribute named {name!r}") from None

    def link_attribute(self, name):
        try:
            return self.link_attributes[name]
        except KeyError:
            raise MissingAttributeError(f"no link attribute named {name!r}") from None

    def __repr__(self):
        kind = "directed" if self.directed else "undirected"
        return f"<{type(self).__name__} {kind} n={self.node_count} m={self.link_count}>"


def _valid_direction(direction):
    if direction not in ("in", "out", "both"):
        raise ValueError(f"direction must be 'in', 'out' or 'both', got {direction!r}")


class Network(_NetworkBase):
    """Mutable directed or undirected graph with sorted adjacency lists.

    Neighbor queries return ascending node indices.  Multilinks and
    self-loops are rejected.  Attribute columns always hold exactly one
    slot per node/link.
    """

    def __init__(self, directed=False, node_count=0):
        self.directed = bool(directed)
        self._out = []
        self._in = [] if self.directed else self._out
        self._links = []
        self._link_ids = {}
        self.node_attributes = {}
        self.link_attributes = {}
        for _ in range(node_count):
            self.add_node()

    # -- construction ------------------------------------------------

    @property
    def node_count(self):
        return len(self._out)

    @property
    def link_count(self):
        return len(self._links)

    def add_node(self):
        """Append a node; returns its index (the previous node count)."""
        self._out.append([])
        if self.directed:
            self._in.append([])
        for column in self.node_attributes.values():
            column.append(None)
        return len(self._out) - 1

    def add_nodes(self, count):
        """Append ``count`` nodes; returns the first new index."""
        first = self.node_count
        for _ in range(count):
            self.add_node()
        return first

    def _key(self, u, v):
        if self.directed:
            return (u, v)
        return (u, v) if u <= v else (v, u)

    def add_link(self, u, v):
        """Insert link (u, v); returns its index.

        Undirected networks treat (u, v) and (v, u) as the same link.
        """
        self._check_node(u)
        self._check_node(v)
        if u == v:
            raise SelfLoopError(f"self-loop ({u}, {v}) rejected")
        key = self._key(u, v)
        if key in self._link_ids:
            raise DuplicateLinkError(f"link ({u}, {v}) already present")
        index = len(self._links)
        self._links.append((u, v))
        self._link_ids[key] = index
        insort(self._out[u], v)
        if self.directed:
            insort(self._in[v], u)
        else:
            insort(self._out[v], u)
        for column in self.link_attributes.values():
            column.append(None)
        return index

    def add_link_if_absent(self, u, v):
        """Like :meth:`add_link` but returns None instead of raising on duplicates."""
        if u != v and self._key(u, v) in self._link_ids:
            return None
        return self.add_link(u, v)

    # -- queries -----------------------------------------------------

    def neighbors(self, u, direction="both"):
        """Adjacent node indices in ascending order, without duplicates.

        For undirected networks all three directions coincide.  In a
        directed network "both" is the sorted union of in and out.
        """
        self._check_node(u)
        _valid_direction(direction)
        if not self.directed:
            return list(self._out[u])
        if direction == "out":
            return list(self._out[u])
        if direction == "in":
            return list(self._in[u])
        merged = sorted(set(self._out[u]) | set(self._in[u]))
        return merged

    def link_ends(self, index):
        self._check_link(index)
        return self._links[index]

    def link_index(self, u, v):
        """Index of link (u, v), or None when absent."""
        return self._link_ids.get(self._key(u, v))

    # -- removal -----------------------------------------------------

    def remove_link(self, index):
        """Delete a link by index; the last link is swapped into its slot."""
        self._check_link(index)
        u, v = self._links[index]
        self._out[u].remove(v)
        if self.directed:
            self._in[v].remove(u)
        else:
            self._out[v].remove(u)
        del self._link_ids[self._key(u, v)]
        last = len(self._links) - 1
        if index != last:
            moved = self._links[last]
            self._links[index] = moved
            self._link_ids[self._key(*moved)] = index
            for column in self.link_attributes.values():
                column.values[index] = column.values[last]
        self._links.pop()
        for column in self.link_attributes.values():
            column.values.pop()

    def remove_link_between(self, u, v):
        index = self.link_index(u, v)
        if index is None:
            raise OutOfRangeError(f"no link ({u}, {v}) to remove")
        self.remove_link(index)

    def remove_node(self, u):
        """Delete node ``u`` and its incident links.

        The last node is renumbered to ``u`` so indices stay dense;
        identity of the moved node is not preserved.
        """
        self._check_node(u)
        # Swap-removal renumbers pending link indices, so rescan after each.
        while True:
            index = next((i for i, (a, b) in enumerate(self._links) if a == u or b == u), None)
            if index is None:
                break
            self.remove_link(index)
        last = self.node_count - 1
        if u != last:
            # Renumber node `last` as `u`.
            for i, (a, b) in enumerate(self._links):
                na = u if a == last else a
                nb = u if b == last else b
                if (na, nb) != (a, b):
                    del self._link_ids[self._key(a, b)]
                    self._links[i] = (na, nb)
                    self._link_ids[self._key(na, nb)] = i
            self._out[u] = [u if w == last else w for w in self._out[last]]
            self._out[u].sort()
            if self.directed:
                self._in[u] = [u if w == last else w for w in self._in[last]]
                self._in[u].sort()
            for adj in (self._out, self._in) if self.directed else (self._out,):
                for w in range(last):
                    if w == u:
                        continue
                    lst = adj[w]
                    if last in lst:
                        lst.remove(last)
                        insort(lst, u)
            for column in self.node_attributes.values():
                column.values[u] = column.values[last]
        self._out.pop()
        if self.directed:
            self._in.pop()
        for column in self.node_attributes.values():
            column.values.pop()

    # -- attributes --------------------------------------------------

    def add_node_attribute(self, name, kind):
        column = AttributeColumn(name, kind, [None] * self.node_count)
        self.node_attributes[name] = column
        return column

    def add_link_attribute(self, name, kind):
        column = AttributeColumn(name, kind, [None] * self.link_count)
        self.link_attributes[name] = column
        return column

    # -- conversion --------------------------------------------------

    def frozen(self):
        """Immutable compact copy of the current state."""
        return CompactNetwork(self)

    def copy(self):
        net = Network(self.directed)
        net.add_nodes(self.node_count)
        for u, v in self._links:
            net.add_link(u, v)
        for name, column in self.node_attributes.items():
            net.node_attributes[name] = column.copy()
        for name, column in self.link_attributes.items():
            net.link_attributes[name] = column.copy()
        return net


class CompactNetwork(_NetworkBase):
    """Immutable CSR-form snapshot of a network for read-only analysis."""

    def __init__(self, source):
        self.directed = source.directed
        n = source.node_count
        self._n = n
        self._links = list(source.links())
        self._link_ids = {}
        for i, (u, v) in enumerate(self._links):
            key = (u, v) if self.directed or u <= v else (v, u)
            self._link_ids[key] = i
        out_lists = [source.neighbors(u, "out" if self.directed else "both") for u in range(n)]
        self._out_ptr, self._out_idx = _to_csr(out_lists)
        if self.directed:
            in_lists = [source.neighbors(u, "in") for u in range(n)]
            self._in_ptr, self._in_idx = _to_csr(in_lists)
        else:
            self._in_ptr, self._in_idx = self._out_ptr, self._out_idx
        self.node_attributes = {k: c.copy() for k, c in source.node_attributes.items()}
        self.link_attributes = {k: c.copy() for k, c in source.link_attributes.items()}

    @property
    def node_count(self):
        return self._n

    @property
    def link_count(self):
        return len(self._links)

    def neighbors(self, u, direction="both"):
        self._check_node(u)
        _valid_direction(direction)
        if not self.directed:
            return self._out_idx[self._out_ptr[u]:self._out_ptr[u + 1]].tolist()
        if direction == "out":
            return self._out_idx[self._out_ptr[u]:self._out_ptr[u + 1]].tolist()
        if direction == "in":
            return self._in_idx[self._in_ptr[u]:self._in_ptr[u + 1]].tolist()
        out = self._out_idx[self._out_ptr[u]:self._out_ptr[u + 1]]
        inc = self._in_idx[self._in_ptr[u]:self._in_ptr[u + 1]]
        return sorted(set(out.tolist()) | set(inc.tolist()))

    def link_ends(self, index):
        self._check_link(index)
        return self._links[index]

    def link_index(self, u, v):
        key = (u, v) if self.directed or u <= v else (v, u)
        return self._link_ids.get(key)

    def frozen(self):
        return self

    def _immutable(self, *args, **kwargs):
        raise ImmutableNetworkError("this network is frozen; copy it into a Network to mutate")

    add_node = add_nodes = add_link = remove_link = remove_node = _immutable
    add_node_attribute = add_link_attribute = _immutable


def _to_csr(lists):
    ptr = np.zeros(len(lists) + 1, dtype=np.int64)
    for i, lst in enumerate(lists):
        ptr[i + 1] = ptr[i] + len(lst)
    idx = np.empty(int(ptr[-1]), dtype=np.int64)
    for i, lst in enumerate(lists):
        idx[ptr[i]:ptr[i + 1]] = lst
    return ptr, idx


@dataclass
class NodeScore:
    """One real value per node of a network."""

    network: object
    values: np.ndarray
    converged: bool = True

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=np.float64)
        if len(self.values) != self.network.node_count:
            raise ValueError("score length must equal node count")

    def __len__(self):
        return len(self.values)

    def __getitem__(self, index):
        return float(self.values[index])

    def __iter__(self):
        return iter(self.values.tolist())

    def as_array(self):
        return self.values


class ScoreMatrix:
    """Node-pair-indexed real values, dense or as a pair list.

    Dense mode stores an n-by-n grid; sparse mode stores only the pairs
    that were assigned.  For symmetric matrices set/get treat (u, v) and
    (v, u) as the same slot.
    """

    def __init__(self, n, symmetric=True, dense=True):
        self.n = n
        self.symmetric = symmetric
        self.dense = dense
        self.converged = True
        if dense:
            self._grid = np.zeros((n, n), dtype=np.float64)
            self._pairs = None
        else:
            self._grid = None
            self._pairs = {}

    @classmethod
    def from_dense(cls, array, symmetric=True):
        array = np.asarray(array, dtype=np.float64)
        matrix = cls(array.shape[0], symmetric=symmetric, dense=True)
        matrix._grid = array
        return matrix

    def _key(self, u, v):
        if self.symmetric and u > v:
            return (v, u)
        return (u, v)

    def get(self, u, v):
        if self.dense:
            return float(self._grid[u, v])
        return self._pairs.get(self._key(u, v), 0.0)

    def set(self, u, v, value):
        if self.dense:
            self._grid[u, v] = value
            if self.symmetric:
                self._grid[v, u] = value
        else:
            self._pairs[self._key(u, v)] = float(value)

    def add(self, u, v, value):
        self.set(u, v, self.get(u, v) + value)

    def as_array(self):
        if not self.dense:
            raise ValueError("sparse score matrix has no dense array form")
        return self._grid

    def items(self):
        """Stored (u, v, value) triples; symmetric matrices yield u <= v."""
        if self.dense:
            for u in range(self.n):
                start = u if self.symmetric else 0
                for v in range(start, self.n):
                    yield u, v, float(self._grid[u, v])
        else:
            for (u, v), value in sorted(self._pairs.items()):
                yield u, v, value

    def top_pairs(self, k=None, skip_diagonal=True):
        """Pairs sorted by descending value; ties break on (u, v) order."""
        triples = [t for t in self.items() if not (skip_diagonal and t[0] == t[1])]
        triples.sort(key=lambda t: (-t[2], t[0], t[1]))
        return triples[:k] if k is not None else triples


@dataclass
class Partition:
    """Disjoint community assignment with dense labels 0..k-1."""

    labels: list[int]
    k: int = field(default=0)

    def __post_init__(self):
        self.labels = [int(label) for label in self.labels]
        relabel = {}
        for label in self.labels:
            if label not in relabel:
                relabel[label] = len(relabel)
        self.labels = [relabel[label] for label in self.labels]
        self.k = len(relabel)

    def __len__(self):
        return len(self.labels)

    def __getitem__(self, node):
        return self.labels[node]

    def communities(self):
        """Members of each community, by label."""
        groups = [[] for _ in range(self.k)]
        for node, label in enumerate(self.labels):
            groups[label].append(node)
        return groups


@dataclass
class Dendrogram:
    """Merge tree of an agglomerative clustering.

    Leaves are clusters 0..n-1; merge t creates cluster n+t.  A full
    agglomeration has exactly n-1 merges.
    """

    n_leaves: int
    merges: list[tuple[int, int, float]]

    def partition_at(self, k):
        """Partition obtained by undoing merges until ``k`` clusters remain."""
        if not 1 <= k <= self.n_leaves:
            raise ValueError(f"k must be in [1, {self.n_leaves}]")
        keep = max(0, min(len(self.merges), self.n_leaves - k))
        parent = list(range(self.n_leaves + len(self.merges)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for t in range(keep):
            a, b, _ = self.merges[t]
            new = self.n_leaves + t
            parent[find(a)] = new
            parent[find(b)] = new
        return Partition([find(i) for i in range(self.n_leaves)])

    def best_modularity_partition(self, net):
        """Partition at the agglomeration level with the highest modularity."""
        from .community import modularity

        best, best_q = None, -np.inf
        for k in range(1, self.n_leaves + 1):
            partition = self.partition_at(k)
            q = modularity(net, partition)
            if q > best_q + 1e-15:
                best, best_q = partition, q
        return best


class MembershipMatrix:
    """Nonnegative per-node community strengths (overlapping communities)."""

    def __init__(self, network, strengths):
        self.network = network
        self.strengths = np.asarray(strengths, dtype=np.float64)
        if self.strengths.shape[0] != network.node_count:
            raise ValueError("membership rows must equal node count")

    @property
    def k(self):
        return self.strengths.shape[1]

    def normalized(self):
        """Strengths rescaled into [0, 1] by the global maximum."""
        top = self.strengths.max()
        if top <= 0:
            return np.zeros_like(self.strengths)
        return self.strengths / top

    def dominant_community(self, node):
        return int(np.argmax(self.strengths[node]))

    def communities(self, threshold=0.5):
        """Possibly-overlapping communities from thresholding normalized strengths."""
        normalized = self.normalized()
        return [np.nonzero(normalized[:, c] >= threshold)[0].tolist() for c in range(self.k)]
