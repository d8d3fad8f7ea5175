"""
The exact solver.

``kpex`` seeds a lower bound with the heuristic, co-prunes the graph, and
then repeatedly takes the vertex of minimum degree, solves the branch of
its two-hop neighbourhood that must contain it, and deletes it. Branches
are explored depth first by ``Searcher.brb_rec`` with a branch policy from
``kplex.policies`` doing the reduction and bounding.
"""
import enum
import time
from bisect import bisect_left
from dataclasses import dataclass
from typing import Optional

from .exceptions import SolverTimeout
from .graph import induced_subgraph, is_kplex, members, two_hop_closure, vertex_set
from .heuristic import kpheuris
from .logging import get_logger
from .oracle import brute_max_kplex
from .policies import AltRBPolicy, BoundCheckPolicy, SeqRBPolicy
from .reduction import Thresholds

logger = get_logger(__name__)

FOUND = 'found'
NONE = 'none'
TIMEOUT = 'timeout'


class Mode(enum.Enum):
    EXACT_ALTRB = 'exact-altrb'
    EXACT_SEQRB = 'exact-seqrb'
    HEURISTIC = 'heuristic'
    ORACLE = 'oracle'

    @classmethod
    def choices(cls):
        return [mode.value for mode in cls]


@dataclass
class SolverConfig:
    k: int
    time_limit: float = 3600
    mode: Mode = Mode.EXACT_ALTRB
    lb_override: Optional[int] = None
    verify_bounds: bool = False
    heuristic_probes: bool = True

    def __post_init__(self):
        if self.k < 2:
            raise ValueError('k({}) must be at least 2'.format(self.k))
        if self.time_limit <= 0:
            raise ValueError('time_limit({}) must be positive'.format(self.time_limit))
        self.mode = Mode(self.mode)

    def policy(self):
        if self.mode == Mode.EXACT_SEQRB:
            policy = SeqRBPolicy()
        else:
            policy = AltRBPolicy()
        if self.verify_bounds:
            policy = BoundCheckPolicy(policy)
        return policy


class Stats:
    """Counters and phase timings of one solve."""

    def __init__(self):
        self.branches = 0
        self.subproblems = 0
        self.rb_calls = 0
        self.rb_rounds = 0
        self.filter_removals = 0
        self.rr1_removals = 0
        self.rr2_moves = 0
        self.rr2_terminations = 0
        self.heuristic_probes = 0
        self.heuristic_improvements = 0
        self.lb_initial = 0
        self.lb_final = 0
        self.t_heuristic_ms = 0.0
        self.t_reduce_ms = 0.0
        self.t_search_ms = 0.0
        self.reduction = {}

    @property
    def mean_r(self):
        if not self.rb_calls:
            return 0.0
        return self.rb_rounds / self.rb_calls

    def record(self, outcome):
        self.rb_calls += 1
        self.rb_rounds += outcome.rounds
        self.filter_removals += outcome.filtered
        self.rr1_removals += outcome.reduced
        self.rr2_moves += outcome.moved
        if outcome.terminated:
            self.rr2_terminations += 1

    def as_dict(self):
        values = {
            'branches': self.branches,
            'subproblems': self.subproblems,
            'rb_calls': self.rb_calls,
            'rb_rounds': self.rb_rounds,
            'mean_r': self.mean_r,
            'filter_removals': self.filter_removals,
            'rr1_removals': self.rr1_removals,
            'rr2_moves': self.rr2_moves,
            'rr2_terminations': self.rr2_terminations,
            'heuristic_probes': self.heuristic_probes,
            'heuristic_improvements': self.heuristic_improvements,
            'lb_initial': self.lb_initial,
            'lb_final': self.lb_final,
            't_heuristic_ms': self.t_heuristic_ms,
            't_reduce_ms': self.t_reduce_ms,
            't_search_ms': self.t_search_ms,
        }
        values.update(self.reduction)
        return values


class Solution:
    """
    The outcome of a solve.

    ``vertices`` holds ids of the input graph and ``labels`` the matching
    input labels in ascending order. Both are empty when no k-plex of at
    least ``2k - 1`` vertices was found.
    """

    def __init__(self, status, vertices, labels, stats):
        self.status = status
        self.vertices = frozenset(vertices)
        self.labels = tuple(labels)
        self.stats = stats

    @property
    def size(self):
        return len(self.vertices)

    def __repr__(self):
        return 'Solution(status={}, size={})'.format(self.status, self.size)

    @classmethod
    def from_vertices(cls, g, status, vertices, stats):
        vertices = vertices or ()
        return cls(status, vertices, sorted(g.label(v) for v in vertices), stats)


class Incumbent:
    """The best k-plex seen so far; ``size`` is the lower bound every reduction uses."""

    def __init__(self, size, vertices=None):
        self.size = size
        self.vertices = frozenset(vertices) if vertices is not None else None

    def offer(self, vertices):
        vertices = frozenset(vertices)
        if len(vertices) <= self.size:
            return False
        self.size = len(vertices)
        self.vertices = vertices
        logger.info('Found a k-plex of size {}', self.size)
        return True


class Deadline:
    def __init__(self, limit, start=None):
        self.limit = limit
        self.start = time.monotonic() if start is None else start

    def elapsed(self):
        return time.monotonic() - self.start

    def check(self):
        elapsed = self.elapsed()
        if elapsed > self.limit:
            raise SolverTimeout(elapsed, self.limit)


def select_branching_vertex(g, s, c):
    """The candidate with fewest neighbours in ``s | c``, smallest id on ties."""
    masks = g.masks
    union = s | c
    best = best_degree = None
    for v in members(c):
        d = (masks[v] & union).bit_count()
        if best is None or d < best_degree:
            best, best_degree = v, d
    if best is None:
        raise ValueError('no candidate to branch on')
    return best


class Searcher:
    """
    Depth-first branch-reduction-and-bound over one working graph.

    :param g: The working Graph; branch sets are VertexSets of it
    :param k: The k of the k-plex
    :param policy: The branch policy doing reduction and bounding
    :param incumbent: The shared Incumbent, in ids of the input graph
    :param stats: The shared Stats
    :param deadline: A Deadline checked on every branch
    :param observer: (Optional) Called as ``observer(g, s, c, best_size,
        outcome)`` after each branch is reduced and bounded
    :param mapping: (Optional) ``mapping[local]`` is the input graph id of
        a working graph id. Default: the identity
    """

    def __init__(self, g, k, policy, incumbent, stats, deadline,
                 observer=None, mapping=None):
        self.g = g
        self.k = k
        self.policy = policy
        self.incumbent = incumbent
        self.stats = stats
        self.deadline = deadline
        self.observer = observer
        self.mapping = mapping

    def _accept(self, mask):
        ids = members(mask)
        if self.mapping is not None:
            ids = (self.mapping[v] for v in ids)
        return self.incumbent.offer(ids)

    def brb_rec(self, s, c):
        """
        Search the branch ``(s, c)`` for a k-plex larger than the incumbent.

        The include child of every branch is explored before the exclude
        child. Raises SolverTimeout when the deadline passes; the incumbent
        keeps whatever was found.
        """
        g, k = self.g, self.k
        stack = [(s, c)]
        while stack:
            s, c = stack.pop()
            self.deadline.check()
            self.stats.branches += 1

            best_size = self.incumbent.size
            outcome = self.policy.execute(g, s, c, k, best_size)
            self.stats.record(outcome)
            if self.observer is not None:
                self.observer(g, s, c, best_size, outcome)
            if outcome.terminated or outcome.ub <= best_size:
                continue

            s, c = outcome.s, outcome.c
            if is_kplex(g, s | c, k):
                self._accept(s | c)
                continue

            v = select_branching_vertex(g, s, c)
            bit = 1 << v
            rest = c & ~bit
            stack.append((s, rest))
            if is_kplex(g, s | bit, k):
                stack.append((s | bit, rest))


def kpex(g, cfg, observer=None):
    """
    Solve the maximum k-plex problem on ``g`` exactly.

    :param g: The input Graph
    :param cfg: A SolverConfig in one of the exact modes
    :param observer: (Optional) Passed on to every Searcher
    :return: A Solution
    """
    k = cfg.k
    deadline = Deadline(cfg.time_limit)
    stats = Stats()

    heuristic = kpheuris(g, k, probe=cfg.heuristic_probes)
    state = heuristic.state
    stats.heuristic_probes = heuristic.probes
    stats.heuristic_improvements = heuristic.improvements
    reduce_before = state.stats.elapsed
    stats.t_heuristic_ms = (heuristic.elapsed - reduce_before) * 1000.0

    lb = heuristic.lb
    witness = heuristic.best_set if heuristic.size >= 2 * k - 1 else None
    if cfg.lb_override is not None and cfg.lb_override > lb:
        lb = cfg.lb_override
        witness = None
        t = Thresholds.from_lower_bound(lb, k)
        state.cf_ctcp([], t.tau_v, t.tau_e, lb_changed=True)
    incumbent = Incumbent(lb, witness)
    stats.lb_initial = lb
    logger.info('Reduced graph: n={}, m={}, lb={}', state.vertex_count(), state.edge_count(), lb)

    policy = cfg.policy()
    status = None
    search_start = time.perf_counter()
    try:
        while True:
            v = state.min_degree_vertex()
            if v is None:
                break
            closure = two_hop_closure(state, v)
            improved = False
            if len(closure) > incumbent.size:
                sub, mapping = induced_subgraph(state, closure)
                root = 1 << bisect_left(mapping, v)
                logger.debug('Subproblem at {}: n={}, m={}', g.label(v), sub.n, sub.m)
                before = incumbent.size
                Searcher(sub, k, policy, incumbent, stats, deadline,
                         observer, mapping).brb_rec(root, vertex_set(range(sub.n)) & ~root)
                stats.subproblems += 1
                improved = incumbent.size > before
            t = Thresholds.from_lower_bound(incumbent.size, k)
            state.cf_ctcp([v], t.tau_v, t.tau_e, lb_changed=improved)
    except SolverTimeout as e:
        logger.warning('{}; keeping the best k-plex found so far', e)
        status = TIMEOUT

    reduce_total = state.stats.elapsed
    stats.t_reduce_ms = reduce_total * 1000.0
    search_time = time.perf_counter() - search_start - (reduce_total - reduce_before)
    stats.t_search_ms = search_time * 1000.0
    stats.lb_final = incumbent.size
    stats.reduction = state.stats.as_dict()

    if status is None:
        status = FOUND if incumbent.vertices else NONE
    logger.info('Finished with status {}: size {}, {} branches, mean r {:.3f}',
                status, len(incumbent.vertices or ()), stats.branches, stats.mean_r)
    return Solution.from_vertices(g, status, incumbent.vertices, stats)


def run_heuristic(g, cfg):
    stats = Stats()
    heuristic = kpheuris(g, cfg.k, probe=cfg.heuristic_probes)
    stats.heuristic_probes = heuristic.probes
    stats.heuristic_improvements = heuristic.improvements
    reduce_ms = heuristic.state.stats.elapsed * 1000.0
    stats.t_reduce_ms = reduce_ms
    stats.t_heuristic_ms = heuristic.elapsed * 1000.0 - reduce_ms
    stats.lb_initial = stats.lb_final = heuristic.lb
    stats.reduction = heuristic.state.stats.as_dict()
    if heuristic.size >= 2 * cfg.k - 1:
        return Solution.from_vertices(g, FOUND, heuristic.best_set, stats)
    return Solution.from_vertices(g, NONE, None, stats)


def run_oracle(g, cfg):
    stats = Stats()
    start = time.perf_counter()
    result = brute_max_kplex(g, cfg.k, min_size=2 * cfg.k - 1)
    stats.t_search_ms = (time.perf_counter() - start) * 1000.0
    stats.lb_final = result.size
    return Solution.from_vertices(g, FOUND if result.witness else NONE, result.witness, stats)


def solve(g, cfg, observer=None):
    """Run the solver selected by ``cfg.mode``."""
    if cfg.mode == Mode.HEURISTIC:
        return run_heuristic(g, cfg)
    if cfg.mode == Mode.ORACLE:
        return run_oracle(g, cfg)
    return kpex(g, cfg, observer)
