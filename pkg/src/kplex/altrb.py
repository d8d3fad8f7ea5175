"""
Reduction and bounding of a single branch ``(S, C)``.

``altrb`` alternates between bounding one side of a partitioned branch and
reducing the other with the lower bounds that bound implies, until the left
bound stops improving. ``seqrb`` is the one-shot baseline: filter the
candidates once, then bound them once.
"""
from .bounds import LEFT, RIGHT, compute_ub, greedy_partition
from .graph import is_kplex, members
from .logging import get_logger

logger = get_logger(__name__)

MOVED = 'moved'
TERMINATED = 'terminated'


class RBOutcome:
    """
    The result of reducing and bounding one branch.

    ``s`` may have grown when candidates were forced into the solution;
    ``c`` is always a subset of the candidates passed in. When
    ``terminated`` is set the branch holds nothing larger than the
    incumbent and ``ub`` carries no further meaning.
    """

    def __init__(self, s, c, ub, terminated=False, rounds=1,
                 filtered=0, reduced=0, moved=0):
        self.s = s
        self.c = c
        self.ub = ub
        self.terminated = terminated
        self.rounds = rounds
        self.filtered = filtered
        self.reduced = reduced
        self.moved = moved

    def __repr__(self):
        return 'RBOutcome(|S|={}, |C|={}, ub={}, terminated={}, rounds={})'.format(
            self.s.bit_count(), self.c.bit_count(), self.ub,
            self.terminated, self.rounds)


def candidate_filter(g, s, c, k, best_size):
    """
    Drop candidates that cannot join ``s`` or cannot reach ``best_size + 1``.

    A candidate ``v`` goes when ``S + v`` is no longer a k-plex, or when
    ``v`` has fewer than ``best_size + 1 - k`` neighbours in ``S | C``.

    :return: The filtered candidate set
    """
    masks = g.masks
    s_size = s.bit_count()
    saturated = 0
    for u in members(s):
        if (s & ~masks[u]).bit_count() >= k:
            saturated |= 1 << u
    min_degree = best_size + 1 - k
    for v in members(c):
        if (s & ~masks[v]).bit_count() + 1 > k or saturated & ~masks[v]:
            c &= ~(1 << v)
        elif (masks[v] & (s | c)).bit_count() < min_degree:
            c &= ~(1 << v)
    logger.debug('candidate filter kept {} candidates with |S|={}', c.bit_count(), s_size)
    return c


def _thresholds(pb, k, side):
    """Minimum neighbour counts for a candidate of ``side``, within S|C_L and S|C_R."""
    base = pb.s.bit_count() - k
    if side == LEFT:
        return pb.lb_l + base, pb.lb_r + base + 1
    return pb.lb_l + base + 1, pb.lb_r + base


def rr1(g, pb, k, side):
    """
    Remove candidates of one side with too few neighbours, to a fixpoint.

    A candidate of a k-plex ``H`` that takes at least ``LB_L`` vertices from
    ``C_L`` and ``LB_R`` from ``C_R`` misses at most ``k`` vertices of
    ``H``, so it needs that many neighbours on each side.

    :return: The removed candidates as a VertexSet
    """
    masks = g.masks
    need_left, need_right = _thresholds(pb, k, side)
    s = pb.s
    candidates = pb.candidates(side)
    removed = 0
    changed = True
    while changed:
        changed = False
        left = s | (candidates if side == LEFT else pb.c_l)
        right = s | (candidates if side == RIGHT else pb.c_r)
        for v in members(candidates):
            if ((masks[v] & left).bit_count() < need_left
                    or (masks[v] & right).bit_count() < need_right):
                candidates &= ~(1 << v)
                removed |= 1 << v
                changed = True
                # refresh the counts of this side
                if side == LEFT:
                    left &= ~(1 << v)
                else:
                    right &= ~(1 << v)
    pb.set_candidates(side, candidates)
    return removed


def rr2(g, pb, k, best_size, side):
    """
    Force or reject a whole side when the bound is tight.

    When ``|S| + UB_L + UB_R`` is exactly ``best_size + 1`` and the bound of
    ``side`` equals its candidate count, every larger k-plex must take all
    of those candidates. They move into ``S`` if that keeps a k-plex;
    otherwise the branch cannot beat the incumbent.

    :return: ``MOVED``, ``TERMINATED`` or None
    """
    candidates = pb.candidates(side)
    if pb.s.bit_count() + pb.ub_l + pb.ub_r != best_size + 1:
        return None
    if pb.upper(side) != candidates.bit_count():
        return None
    if is_kplex(g, pb.s | candidates, k):
        pb.move_candidates(side)
        return MOVED
    return TERMINATED


def altrb(g, s, c, k, best_size):
    """
    Alternated reduction and bounding of the branch ``(s, c)``.

    :param g: The working graph
    :param s: The partial solution; it must induce a k-plex
    :param c: The candidates, disjoint from ``s``
    :param k: The k of the k-plex
    :param best_size: The size of the incumbent
    :return: An RBOutcome with ``ub = |S| + UB_L + UB_R``
    """
    pb = greedy_partition(g, s, c, k)
    pb.ub_r = compute_ub(g, pb.s, pb.s_r, pb.c_r, k)
    target = best_size + 1
    rounds = reduced = moved = 0

    def finish(terminated=False):
        return RBOutcome(pb.s, pb.c, pb.s.bit_count() + pb.ub_l + pb.ub_r,
                         terminated=terminated, rounds=max(1, rounds),
                         reduced=reduced, moved=moved)

    while True:
        # Step 1: bound the left side
        ub_l = compute_ub(g, pb.s, pb.s_l, pb.c_l, k)
        if ub_l >= pb.ub_l:
            break
        rounds += 1
        pb.ub_l = ub_l

        # Step 2: reduce the right side
        pb.lb_r = max(0, target - pb.s.bit_count() - pb.ub_l)
        reduced += rr1(g, pb, k, RIGHT).bit_count()
        size_before = pb.c_r.bit_count()
        result = rr2(g, pb, k, best_size, RIGHT)
        if result == TERMINATED:
            return finish(terminated=True)
        if result == MOVED:
            moved += size_before

        # Step 3: bound the right side
        pb.ub_r = min(pb.ub_r, compute_ub(g, pb.s, pb.s_r, pb.c_r, k))

        # Step 4: reduce the left side
        pb.lb_l = max(0, target - pb.s.bit_count() - pb.ub_r)
        reduced += rr1(g, pb, k, LEFT).bit_count()
        size_before = pb.c_l.bit_count()
        result = rr2(g, pb, k, best_size, LEFT)
        if result == TERMINATED:
            return finish(terminated=True)
        if result == MOVED:
            moved += size_before

    outcome = finish()
    logger.debug('altrb: {} in {} rounds', outcome, outcome.rounds)
    return outcome


def seqrb(g, s, c, k, best_size):
    """Filter the candidates once and bound the filtered branch once."""
    filtered = candidate_filter(g, s, c, k, best_size)
    return RBOutcome(s, filtered, s.bit_count() + compute_ub(g, s, s, filtered, k),
                     filtered=(c & ~filtered).bit_count())
