"""
Greedy construction of a large initial k-plex.

``degen_greedy`` inserts vertices in reverse degeneracy order whenever the
result stays a k-plex. ``kpheuris`` runs it on the whole graph and then on
the forward two-hop neighbourhood of every surviving vertex, shrinking the
graph with co-pruning each time the lower bound goes up.
"""
import time

from .graph import degeneracy_order, induced_subgraph, two_hop_closure
from .logging import get_logger
from .reduction import ReductionState, Thresholds

logger = get_logger(__name__)


class HeuristicOutcome:
    """
    The best k-plex found by the heuristic and the reduced graph it left.

    ``best_set`` holds ids of the graph passed to ``kpheuris``. ``lb`` is
    the lower bound the reduction used, at least ``2k - 2``, so it can
    exceed ``size`` on graphs without large k-plexes.
    """

    def __init__(self, best_set, lb, state, probes=0, improvements=0, elapsed=0.0):
        self.best_set = frozenset(best_set)
        self.lb = lb
        self.state = state
        self.probes = probes
        self.improvements = improvements
        self.elapsed = elapsed

    @property
    def size(self):
        return len(self.best_set)

    def __repr__(self):
        return 'HeuristicOutcome(size={}, lb={}, probes={})'.format(
            self.size, self.lb, self.probes)


def degen_greedy(g, k, order=None):
    """
    Build a maximal k-plex by scanning the degeneracy order backwards.

    ``non_neighbors[u]`` counts the members of ``S`` that ``u`` misses,
    itself included, so a vertex ``v`` can join when it would miss at most
    ``k`` members and every member already missing ``k`` is adjacent to it.

    :param g: A Graph
    :param k: The k of the k-plex
    :param order: (Optional) A precomputed degeneracy order of ``g``
    :return: The k-plex as a frozenset of ids of ``g``
    """
    if order is None:
        order = degeneracy_order(g).order
    chosen = []
    in_s = [False] * g.n
    non_neighbors = [0] * g.n
    saturated = 0
    for v in reversed(order):
        adjacent = [u for u in g.neighbors(v) if in_s[u]]
        if len(chosen) - len(adjacent) + 1 > k:
            continue
        if sum(1 for u in adjacent if non_neighbors[u] == k) != saturated:
            continue

        adjacent_set = set(adjacent)
        for u in chosen:
            if u not in adjacent_set:
                non_neighbors[u] += 1
                if non_neighbors[u] == k:
                    saturated += 1
        non_neighbors[v] = len(chosen) - len(adjacent) + 1
        if non_neighbors[v] == k:
            saturated += 1
        chosen.append(v)
        in_s[v] = True
    return frozenset(chosen)


def kpheuris(g, k, state=None, probe=True):
    """
    Find a large k-plex of ``g`` and co-prune ``g`` with its size.

    :param g: The input Graph
    :param k: The k of the k-plex, at least 2
    :param state: (Optional) The ReductionState to prune; a fresh one is
        created by default
    :param probe: (Optional) Run the per-vertex neighbourhood probes after
        the whole-graph pass. Default: True
    :return: A HeuristicOutcome
    """
    if k < 2:
        raise ValueError('k({}) must be at least 2'.format(k))
    start = time.perf_counter()
    if state is None:
        state = ReductionState(g)

    degeneracy = degeneracy_order(g)
    best = degen_greedy(g, k, degeneracy.order)
    lb = max(2 * k - 2, len(best))
    logger.info('Degen found a {}-plex of size {} (degeneracy {})', k, len(best), degeneracy.delta)

    t = Thresholds.from_lower_bound(lb, k)
    state.cf_ctcp([], t.tau_v, t.tau_e, lb_changed=True)

    position = degeneracy.positions()
    probes = improvements = 0
    for i, v in enumerate(degeneracy.order if probe else ()):
        if not state.has_vertex(v):
            continue
        closure = [u for u in two_hop_closure(state, v) if position[u] >= i]
        if len(closure) <= lb:
            continue
        sub, mapping = induced_subgraph(state, closure)
        found = degen_greedy(sub, k)
        probes += 1
        if len(found) > lb:
            best = frozenset(mapping[u] for u in found)
            lb = len(best)
            improvements += 1
            logger.debug('probe at {} improved lb to {}', g.label(v), lb)
            t = Thresholds.from_lower_bound(lb, k)
            state.cf_ctcp([], t.tau_v, t.tau_e, lb_changed=True)

    elapsed = time.perf_counter() - start
    logger.info('Heuristic: size {}, lb {}, {} probes, {} improvements, reduced to n={} m={}',
                len(best), lb, probes, improvements, state.vertex_count(), state.edge_count())
    return HeuristicOutcome(best, lb, state, probes, improvements, elapsed)
