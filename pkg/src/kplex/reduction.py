"""
Core-truss co-pruning of the input graph.

``ReductionState`` owns the alive flags and the per-edge triangle bookkeeping
of one solve and doubles as the reduced graph view the heuristic and the
search read from. Triangle counts are taken once; afterwards they are only
decremented, using two timestamp arrays to decide whether a removed edge
still has to be subtracted from a neighbouring edge's count.
"""
import time
from collections import deque
from dataclasses import dataclass

from .graph import MinDegreeQueue, common_neighbor_count
from .logging import get_logger

logger = get_logger(__name__)

UNSET = -1


@dataclass(frozen=True)
class Thresholds:
    """Degree and triangle thresholds derived from the current lower bound."""
    tau_v: int
    tau_e: int

    def __post_init__(self):
        if self.tau_e > self.tau_v:
            raise ValueError('tau_e({}) must not exceed tau_v({})'.format(
                self.tau_e, self.tau_v))

    @classmethod
    def from_lower_bound(cls, lb, k):
        return cls(lb - k, lb - 2 * k)


class ReductionStats:
    def __init__(self):
        self.calls = 0
        self.vertices_removed = 0
        self.edges_removed = 0
        self.triangle_counts = 0
        self.rescans = 0
        self.elapsed = 0.0

    def as_dict(self):
        return {
            'ctcp_calls': self.calls,
            'ctcp_vertices_removed': self.vertices_removed,
            'ctcp_edges_removed': self.edges_removed,
            'ctcp_triangle_counts': self.triangle_counts,
            'ctcp_rescans': self.rescans,
        }


class ReductionState:
    """
    Alive vertices and edges of a graph under repeated co-pruning.

    Edge ids are dense and follow the canonical ``(u, v)``, ``u < v`` order
    of ``Graph.edges()``. Three per-edge arrays hold the bookkeeping:

    - ``triangles``: triangle count of the edge when it was last counted,
      minus the triangles lost since,
    - ``counted_at``: tick at which the count was taken (``UNSET`` if never),
    - ``removed_at``: tick at which the edge was removed (``UNSET`` if alive).

    A single tick counter feeds both timestamp arrays, so every write gets a
    distinct, strictly larger value.
    """

    def __init__(self, g):
        self.g = g
        n = g.n
        self.endpoints_of = []
        self._eid = {}
        incident = [[] for _ in range(n)]
        for u, v in g.edges():
            eid = len(self.endpoints_of)
            self.endpoints_of.append((u, v))
            self._eid[(u, v)] = eid
            incident[u].append(eid)
            incident[v].append(eid)
        # aligned with g.adjacency[v]
        self.incident = [tuple(eids) for eids in incident]

        m = len(self.endpoints_of)
        self.alive_vertex = [True] * n
        self.alive_edge = [True] * m
        self.deg = [g.degree(v) for v in range(n)]
        self.triangles = [0] * m
        self.counted_at = [UNSET] * m
        self.removed_at = [UNSET] * m
        self.tick = 0
        self.counted = False
        self.last_tau_v = None
        self.n_alive = n
        self.m_alive = m
        self.stats = ReductionStats()

        self._pending = []
        self._q_e = deque()
        self._queue = MinDegreeQueue(self.deg)

    def __repr__(self):
        return 'ReductionState(alive n={}, m={})'.format(self.n_alive, self.m_alive)

    # -- graph view ---------------------------------------------------------

    def vertices(self):
        return (v for v, alive in enumerate(self.alive_vertex) if alive)

    def has_vertex(self, v):
        return self.alive_vertex[v]

    def vertex_count(self):
        return self.n_alive

    def edge_count(self):
        return self.m_alive

    def neighbors(self, v):
        alive_edge = self.alive_edge
        return [w for w, eid in zip(self.g.adjacency[v], self.incident[v])
                if alive_edge[eid]]

    def degree(self, v):
        return self.deg[v]

    def label(self, v):
        return self.g.label(v)

    def alive_edges(self):
        for eid, (u, v) in enumerate(self.endpoints_of):
            if self.alive_edge[eid]:
                yield u, v

    def min_degree_vertex(self):
        """The alive vertex of smallest alive degree (smallest id on ties), or None."""
        return self._queue.peek()

    def edge_id(self, u, v):
        """The id of original edge ``(u, v)``, or None when it is not an edge."""
        if u > v:
            u, v = v, u
        return self._eid.get((u, v))

    def endpoints(self, eid):
        return self.endpoints_of[eid]

    # -- removal ------------------------------------------------------------

    def _next_tick(self):
        self.tick += 1
        return self.tick

    def _kill_edge(self, eid, tau_v, removed):
        self.alive_edge[eid] = False
        self.removed_at[eid] = self._next_tick()
        self.m_alive -= 1
        self.stats.edges_removed += 1
        self._q_e.append(eid)
        removed.append(eid)
        for x in self.endpoints_of[eid]:
            self.deg[x] -= 1
            if self.alive_vertex[x]:
                self._queue.decrement(x)
                if self.deg[x] <= tau_v:
                    self._pending.append(x)

    def _kill_vertex(self, v, tau_v, removed):
        self.alive_vertex[v] = False
        self._queue.discard(v)
        self.n_alive -= 1
        self.stats.vertices_removed += 1
        for eid in self.incident[v]:
            if self.alive_edge[eid]:
                self._kill_edge(eid, tau_v, removed)

    def core_prune(self, tau_v):
        """
        Peel every alive vertex of alive degree at most ``tau_v``, to a fixpoint.

        :return: The ids of every edge removed by the peel
        """
        self.rescan_vertices(tau_v)
        return self._peel(tau_v, [])

    def _peel(self, tau_v, removed):
        # vertices are queued whenever their degree drops to the threshold
        pending = self._pending
        while pending:
            v = pending.pop()
            if self.alive_vertex[v] and self.deg[v] <= tau_v:
                self._kill_vertex(v, tau_v, removed)
        return removed

    def rescan_vertices(self, tau_v):
        self._pending.extend(
            v for v in self.vertices() if self.deg[v] <= tau_v)

    def remove_edge(self, eid, tau_v):
        """
        Remove one alive edge and restore the ``(tau_v + 1)``-core.

        :return: ``eid`` followed by every edge removed by the cascade
        """
        if not self.alive_edge[eid]:
            raise ValueError('edge {} is not alive'.format(eid))
        removed = []
        self._kill_edge(eid, tau_v, removed)
        return self._peel(tau_v, removed)

    def remove_vertices(self, q_v, tau_v):
        removed = []
        for v in q_v:
            if self.alive_vertex[v]:
                self._kill_vertex(v, tau_v, removed)
        return self._peel(tau_v, removed)

    # -- co-pruning ---------------------------------------------------------

    def _count(self, eid):
        u, v = self.endpoints_of[eid]
        self.triangles[eid] = common_neighbor_count(self, u, v)
        self.counted_at[eid] = self._next_tick()
        self.stats.triangle_counts += 1

    def _scan_edges(self, tau_v, tau_e, count):
        for eid in range(len(self.endpoints_of)):
            if not self.alive_edge[eid]:
                continue
            if count:
                self._count(eid)
            if self.triangles[eid] <= tau_e:
                self.remove_edge(eid, tau_v)

    def _drain(self, tau_v, tau_e):
        q_e = self._q_e
        while q_e:
            eid = q_e.popleft()
            t = self.removed_at[eid]
            u, v = self.endpoints_of[eid]
            for a, b in ((u, v), (v, u)):
                if not self.alive_vertex[a]:
                    continue
                for w, aw in zip(self.g.adjacency[a], self.incident[a]):
                    if w == b or not self.alive_edge[aw]:
                        continue
                    bw = self.edge_id(b, w)
                    if bw is None:
                        continue
                    counted = self.counted_at[aw]
                    # (a, b, w) was a triangle when aw was counted and has
                    # not been subtracted by the removal of bw yet
                    if counted == UNSET or counted > t:
                        continue
                    if not (self.alive_edge[bw] or self.removed_at[bw] > t):
                        continue
                    self.triangles[aw] -= 1
                    if self.triangles[aw] <= tau_e:
                        self.remove_edge(aw, tau_v)

    def cf_ctcp(self, q_v, tau_v, tau_e, lb_changed):
        """
        Shrink the alive graph to its maximal ``(tau_v + 1)``-core that is
        also a ``(tau_e + 3)``-truss.

        :param q_v: Vertices to delete before pruning
        :param tau_v: Degree threshold, normally ``lb - k``
        :param tau_e: Triangle threshold, normally ``lb - 2k``
        :param lb_changed: Whether the lower bound went up since the last
            call; every alive edge is then checked against ``tau_e``
        :return: This state, as the reduced graph view
        """
        start = time.perf_counter()
        self.stats.calls += 1
        n_before, m_before = self.n_alive, self.m_alive
        if lb_changed or self.last_tau_v != tau_v:
            self.rescan_vertices(tau_v)
        self.last_tau_v = tau_v
        self.remove_vertices(q_v, tau_v)

        if not self.counted:
            self.counted = True
            self._scan_edges(tau_v, tau_e, count=True)
        elif lb_changed:
            self.stats.rescans += 1
            self._scan_edges(tau_v, tau_e, count=False)
        self._drain(tau_v, tau_e)
        self.stats.elapsed += time.perf_counter() - start

        logger.debug('cf_ctcp(tau_v={}, tau_e={}, lb_changed={}): n {} -> {}, m {} -> {}',
                     tau_v, tau_e, lb_changed,
                     n_before, self.n_alive, m_before, self.m_alive)
        return self


def naive_ctcp(g, tau_v, tau_e, rng=None):
    """
    Recompute degrees and triangle counts from scratch until nothing violates
    the thresholds.

    Without ``rng`` every violator of a round is removed at once; with a
    ``random.Random`` one randomly chosen violator is removed per round.

    :return: ``(vertices, edges)`` as frozensets, edges as ``(u, v)``, ``u < v``
    """
    vertices = set(g.vertices())
    edges = set(g.edges())
    while True:
        neighbours = {v: set() for v in vertices}
        for u, v in edges:
            neighbours[u].add(v)
            neighbours[v].add(u)
        bad_vertices = sorted(v for v in vertices if len(neighbours[v]) <= tau_v)
        bad_edges = sorted(
            (u, v) for u, v in edges
            if len(neighbours[u] & neighbours[v]) <= tau_e)
        if not bad_vertices and not bad_edges:
            break
        if rng is not None:
            violators = [('v', v) for v in bad_vertices] + [('e', e) for e in bad_edges]
            kind, item = rng.choice(violators)
            bad_vertices, bad_edges = ([item], []) if kind == 'v' else ([], [item])
        vertices.difference_update(bad_vertices)
        edges.difference_update(bad_edges)
        edges = {(u, v) for u, v in edges if u in vertices and v in vertices}
    return frozenset(vertices), frozenset(edges)
