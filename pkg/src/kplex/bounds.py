"""
Partition-based upper bounds for a branch ``(S, C)`` of a working graph.

All vertex sets are VertexSet bitsets of the working graph. Non-neighbour
counts include the vertex itself when it is a member of the set counted.
Ratios are compared as cross-multiplied integers.
"""
from .graph import members

INFINITE = (1, 0)
ZERO = (0, 1)

LEFT = 'L'
RIGHT = 'R'


def non_neighbor_count(g, u, mask):
    """``|N̄(u, mask)|``, counting ``u`` itself when it is in ``mask``."""
    return (mask & ~g.masks[u]).bit_count()


def ratio(numerator, denominator):
    if denominator <= 0:
        return INFINITE if numerator > 0 else ZERO
    return numerator, denominator


def ratio_greater(a, b):
    return a[0] * b[1] > b[0] * a[1]


def _argmax_ratio(g, pivots, remaining, caps):
    """The pivot with the largest bucket-to-capacity ratio, smallest id on ties."""
    best = None
    best_ratio = None
    for u in members(pivots):
        r = ratio(non_neighbor_count(g, u, remaining), caps[u])
        if best is None or ratio_greater(r, best_ratio):
            best, best_ratio = u, r
    return best, best_ratio


class UBPartition:
    """
    Buckets of ``C_part`` built while computing a bound.

    ``buckets[i]`` holds the non-neighbours of ``pivots[i]`` left when it was
    selected and ``caps[i]`` the number of non-neighbours that pivot may
    still take in. ``rest`` collects everything no pivot claimed.
    """

    def __init__(self):
        self.pivots = []
        self.buckets = []
        self.caps = []
        self.rest = 0

    @property
    def ub(self):
        total = self.rest.bit_count()
        for bucket, cap in zip(self.buckets, self.caps):
            total += min(bucket.bit_count(), cap)
        return total


def ub_partition(g, s_full, s_part, c_part, k):
    """
    Bucket ``c_part`` by the pivots of ``s_part``.

    :param g: The working graph
    :param s_full: The whole partial solution S; it must induce a k-plex
    :param s_part: The pivots, a subset of ``s_full``
    :param c_part: The candidates to bound
    :param k: The k of the k-plex
    :return: A UBPartition
    """
    caps = {u: k - non_neighbor_count(g, u, s_full) for u in members(s_part)}
    partition = UBPartition()
    pivots = s_part
    remaining = c_part
    while pivots and remaining:
        u, r = _argmax_ratio(g, pivots, remaining, caps)
        if r[0] == 0:
            break
        bucket = remaining & ~g.masks[u]
        partition.pivots.append(u)
        partition.buckets.append(bucket)
        partition.caps.append(caps[u])
        remaining &= ~bucket
        pivots &= ~(1 << u)
    partition.rest = remaining
    return partition


def compute_ub(g, s_full, s_part, c_part, k):
    """
    Upper bound on ``|c_part & H|`` over every k-plex ``H`` of the branch.

    Each pivot can admit at most ``k - |N̄(u, S)|`` of its non-neighbours,
    so a bucket contributes the smaller of its size and that capacity.
    """
    if not c_part:
        return 0
    return ub_partition(g, s_full, s_part, c_part, k).ub


class PartitionedBranch:
    """
    A branch split into a left part whose candidates are bounded by the
    pivots of ``s_l`` and a right part bounded trivially.

    ``s`` is the whole partial solution and always equals ``s_l | s_r``.
    """

    def __init__(self, s_l, s_r, c_l, c_r):
        self.s_l = s_l
        self.s_r = s_r
        self.c_l = c_l
        self.c_r = c_r
        self.ub_l = c_l.bit_count()
        self.ub_r = c_r.bit_count()
        self.lb_l = 0
        self.lb_r = 0

    def __repr__(self):
        return ('PartitionedBranch(|S_L|={}, |S_R|={}, |C_L|={}, |C_R|={}, '
                'UB=({}, {}), LB=({}, {}))').format(
            self.s_l.bit_count(), self.s_r.bit_count(),
            self.c_l.bit_count(), self.c_r.bit_count(),
            self.ub_l, self.ub_r, self.lb_l, self.lb_r)

    @property
    def s(self):
        return self.s_l | self.s_r

    @property
    def c(self):
        return self.c_l | self.c_r

    def candidates(self, side):
        return self.c_l if side == LEFT else self.c_r

    def set_candidates(self, side, mask):
        if side == LEFT:
            self.c_l = mask
        else:
            self.c_r = mask

    def upper(self, side):
        return self.ub_l if side == LEFT else self.ub_r

    def lower(self, side):
        return self.lb_l if side == LEFT else self.lb_r

    def move_candidates(self, side):
        """Move the candidates of one side into the partial solution."""
        if side == LEFT:
            self.s_l |= self.c_l
            self.c_l = 0
            self.ub_l = 0
            self.lb_l = 0
        else:
            self.s_r |= self.c_r
            self.c_r = 0
            self.ub_r = 0
            self.lb_r = 0


def greedy_partition(g, s, c, k):
    """
    Split a branch for alternated reduction and bounding.

    Vertices of ``s`` move to the left part, together with their remaining
    non-neighbours in ``c``, while some vertex has more such non-neighbours
    than it can admit. What is left forms the right part, whose bound is
    then exactly ``|C_R|``.

    :param g: The working graph
    :param s: The partial solution; it must induce a k-plex
    :param c: The candidate set
    :param k: The k of the k-plex
    :return: A PartitionedBranch with ``ub_l = |C_L|`` and ``ub_r = |C_R|``
    """
    caps = {u: k - non_neighbor_count(g, u, s) for u in members(s)}
    s_l = c_l = 0
    s_r, c_r = s, c
    while s_r:
        u, r = _argmax_ratio(g, s_r, c_r, caps)
        if not ratio_greater(r, (1, 1)):
            break
        bucket = c_r & ~g.masks[u]
        s_l |= 1 << u
        s_r &= ~(1 << u)
        c_l |= bucket
        c_r &= ~bucket
    return PartitionedBranch(s_l, s_r, c_l, c_r)
