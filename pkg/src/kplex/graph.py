"""
Graph representation and the graph primitives every other module builds on.

Vertices are dense 0-based integer ids; the label each id was read with is
kept for reporting. Two kinds of vertex sets are used:

- plain Python sets/frozensets of ids on the whole input graph, and
- ``VertexSet`` bitsets (Python ints, bit ``v`` set when ``v`` is a member)
  on the small working subgraphs the search runs on.
"""
import heapq
from bisect import bisect_left
from functools import cached_property

#: Bitset of vertex ids of one working graph. Bit ``v`` is set iff ``v`` is a
#: member.
VertexSet = int


def vertex_set(ids):
    """Build a VertexSet from an iterable of vertex ids."""
    mask = 0
    for v in ids:
        mask |= 1 << v
    return mask


def members(mask):
    """Yield the ids in a VertexSet in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def size(mask):
    return mask.bit_count()


class Graph:
    """
    An immutable simple undirected graph.

    The adjacency of every vertex is a strictly ascending tuple of neighbour
    ids, so neighbourhoods can be merged and bisected directly.
    """

    def __init__(self, n, adjacency, labels=None):
        """
        Create a graph from an adjacency structure.

        :param n: The number of vertices
        :param adjacency: One sorted sequence of neighbour ids per vertex
        :param labels: (Optional) The original label of every vertex.
            Default: the ids themselves
        :return: A new graph
        """
        adjacency = tuple(tuple(neighbours) for neighbours in adjacency)
        if len(adjacency) != n:
            raise ValueError('adjacency has {} entries for n={}'.format(
                len(adjacency), n))
        if labels is None:
            labels = range(n)
        labels = tuple(labels)
        if len(labels) != n:
            raise ValueError('labels has {} entries for n={}'.format(
                len(labels), n))

        total = 0
        for u, neighbours in enumerate(adjacency):
            previous = -1
            for w in neighbours:
                if not 0 <= w < n:
                    raise ValueError('neighbour {} of {} out of range'.format(w, u))
                if w == u:
                    raise ValueError('self-loop on {}'.format(u))
                if w <= previous:
                    raise ValueError('adjacency of {} is not strictly sorted'.format(u))
                previous = w
            total += len(neighbours)

        self.n = n
        self.m = total // 2
        self.adjacency = adjacency
        self.labels = labels

        upper = 0
        for u, w in self.edges():
            if not self.has_edge(w, u):
                raise ValueError('edge ({}, {}) is not symmetric'.format(u, w))
            upper += 1
        if 2 * upper != total:
            raise ValueError('adjacency is not symmetric')

    @classmethod
    def from_edges(cls, edges, n=None, labels=None):
        """
        Build a graph from a list of ``(u, v)`` id pairs.

        Self-loops and repeated edges (in either direction) are dropped.

        :param edges: Iterable of id pairs
        :param n: (Optional) The number of vertices. Default: one more than
            the largest id seen
        :param labels: (Optional) See ``Graph.__init__``
        :return: A new graph
        """
        edges = list(edges)
        if n is None:
            n = 1 + max((max(u, v) for u, v in edges), default=-1)
        neighbours = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError('edge ({}, {}) out of range for n={}'.format(u, v, n))
            if u == v:
                continue
            neighbours[u].add(v)
            neighbours[v].add(u)
        return cls(n, [sorted(s) for s in neighbours], labels)

    def __repr__(self):
        return 'Graph(n={}, m={})'.format(self.n, self.m)

    def vertices(self):
        return range(self.n)

    def neighbors(self, v):
        return self.adjacency[v]

    def degree(self, v):
        return len(self.adjacency[v])

    def label(self, v):
        return self.labels[v]

    def has_edge(self, u, v):
        neighbours = self.adjacency[u]
        i = bisect_left(neighbours, v)
        return i < len(neighbours) and neighbours[i] == v

    def edges(self):
        """Yield every edge once as ``(u, v)`` with ``u < v``, ascending."""
        for u, neighbours in enumerate(self.adjacency):
            for w in neighbours[bisect_left(neighbours, u):]:
                yield u, w

    def density(self):
        if self.n < 2:
            return 0.0
        return 2.0 * self.m / (self.n * (self.n - 1))

    def max_degree(self):
        return max((len(a) for a in self.adjacency), default=0)

    @cached_property
    def masks(self):
        """Neighbourhood of every vertex as a VertexSet."""
        return [vertex_set(neighbours) for neighbours in self.adjacency]


class DegeneracyResult:
    """
    A minimum-degree peeling order and the degeneracy it witnesses.

    ``order[i]`` has minimum degree in the subgraph induced by
    ``order[i:]``; ``delta`` is the largest of those minimum degrees.
    """

    def __init__(self, order, delta):
        self.order = tuple(order)
        self.delta = delta

    def __repr__(self):
        return 'DegeneracyResult(delta={}, n={})'.format(self.delta, len(self.order))

    def positions(self):
        """Map every vertex id to its index in the order."""
        position = [0] * len(self.order)
        for i, v in enumerate(self.order):
            position[v] = i
        return position


class MinDegreeQueue:
    """
    Vertices bucketed by degree, for peeling.

    Degrees only go down. ``pop`` returns the smallest id of the lowest
    non-empty bucket; each bucket keeps its ids in a heap, and entries left
    behind in a higher bucket by ``decrement`` are skipped when reached.
    """

    def __init__(self, degrees):
        self.degree = list(degrees)
        self.present = [True] * len(self.degree)
        self.buckets = [[] for _ in range(max(self.degree, default=0) + 1)]
        # appended in ascending id order, so every bucket starts as a heap
        for v, d in enumerate(self.degree):
            self.buckets[d].append(v)
        self.low = 0

    def __len__(self):
        return sum(self.present)

    def discard(self, v):
        self.present[v] = False

    def decrement(self, v):
        d = self.degree[v] - 1
        self.degree[v] = d
        if self.present[v]:
            heapq.heappush(self.buckets[d], v)
            if d < self.low:
                self.low = d

    def peek(self):
        """The next vertex ``pop`` would return, or None when empty."""
        buckets = self.buckets
        while self.low < len(buckets):
            bucket = buckets[self.low]
            while bucket:
                v = bucket[0]
                if self.present[v] and self.degree[v] == self.low:
                    return v
                heapq.heappop(bucket)
            self.low += 1
        return None

    def pop(self):
        v = self.peek()
        if v is not None:
            heapq.heappop(self.buckets[self.low])
            self.present[v] = False
        return v


def degeneracy_order(g):
    """
    Peel the vertex of minimum remaining degree until the graph is empty.

    Ties are broken by the smallest id, so the order is deterministic.

    :param g: The graph
    :return: A DegeneracyResult
    """
    queue = MinDegreeQueue(g.degree(v) for v in g.vertices())
    order = []
    delta = 0
    while True:
        v = queue.pop()
        if v is None:
            break
        order.append(v)
        delta = max(delta, queue.degree[v])
        for w in g.neighbors(v):
            if queue.present[w]:
                queue.decrement(w)
    return DegeneracyResult(order, delta)


def is_kplex(g, s, k):
    """
    Check whether ``s`` induces a k-plex of ``g``.

    Every member may miss at most ``k`` members of ``s``, itself included.

    :param g: The graph
    :param s: A VertexSet of ``g``
    :param k: A positive integer
    :return: True iff ``g[s]`` is a k-plex
    """
    masks = g.masks
    for u in members(s):
        if (s & ~masks[u]).bit_count() > k:
            return False
    return True


def induced_subgraph(g, vertices):
    """
    Extract the subgraph induced by ``vertices`` with dense local ids.

    ``g`` may be a Graph or any view with ``neighbors(v)`` and ``label(v)``
    (such as ``kplex.reduction.ReductionState``). Local ids follow the
    ascending order of the parent ids.

    :param g: The parent graph or view
    :param vertices: Iterable of parent ids, or a VertexSet
    :return: ``(subgraph, mapping)`` where ``mapping[local] == parent``
    """
    if isinstance(vertices, int):
        vertices = members(vertices)
    mapping = tuple(sorted(set(vertices)))
    index = {v: i for i, v in enumerate(mapping)}
    adjacency = []
    for v in mapping:
        adjacency.append(sorted(index[w] for w in g.neighbors(v) if w in index))
    return Graph(len(mapping), adjacency, [g.label(v) for v in mapping]), mapping


def two_hop_closure(g, v):
    """Return ``{v}`` plus every vertex within distance two of ``v``."""
    closure = {v}
    first = list(g.neighbors(v))
    closure.update(first)
    for u in first:
        closure.update(g.neighbors(u))
    return frozenset(closure)


def common_neighbor_count(g, u, v):
    """Count ``|N(u) & N(v)|`` by merging the two sorted adjacencies."""
    if u == v:
        raise ValueError('common neighbours need two distinct vertices')
    a = g.neighbors(u)
    b = g.neighbors(v)
    i = j = count = 0
    while i < len(a) and j < len(b):
        if a[i] == b[j]:
            count += 1
            i += 1
            j += 1
        elif a[i] < b[j]:
            i += 1
        else:
            j += 1
    return count


def sum_min_degree(g):
    """Sum of ``min(d(u), d(v))`` over all edges."""
    return sum(min(g.degree(u), g.degree(v)) for u, v in g.edges())
