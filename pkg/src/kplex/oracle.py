"""
Exhaustive k-plex search for small graphs.

Pruning only uses two facts: a vertex that cannot join a set cannot join
any superset of it, and a branch with too few vertices left cannot beat
the best size seen. The results do not depend on any bound or reduction
of the solver.
"""
from .exceptions import InstanceTooLargeError
from .graph import is_kplex, members

ORACLE_LIMIT = 25


class OracleResult:
    def __init__(self, size, witness, maximal=None):
        self.size = size
        self.witness = witness
        self.maximal = maximal

    def __repr__(self):
        return 'OracleResult(size={})'.format(self.size)


def _can_add(g, s, v, k):
    return is_kplex(g, s | (1 << v), k)


def brute_max_kplex(g, k, min_size=1, collect_maximal=False):
    """
    Find a maximum k-plex of ``g`` by include/exclude enumeration.

    :param g: A Graph with at most ``ORACLE_LIMIT`` vertices
    :param k: The k of the k-plex
    :param min_size: The smallest size that counts as a solution
    :param collect_maximal: Also list every maximal k-plex of at least
        ``min_size`` vertices, as VertexSets
    :return: An OracleResult; ``size`` is 0 and ``witness`` None when no
        k-plex reaches ``min_size``
    """
    if g.n > ORACLE_LIMIT:
        raise InstanceTooLargeError(g.n, ORACLE_LIMIT)

    best = [0, 0]
    maximal = []
    n = g.n

    def is_maximal(s):
        return not any(_can_add(g, s, v, k) for v in range(n) if not s >> v & 1)

    def visit(s, size, i):
        if size > best[0]:
            best[0], best[1] = size, s
        if i == n:
            if collect_maximal and size >= min_size and is_maximal(s):
                maximal.append(s)
            return
        if not collect_maximal and size + n - i <= best[0]:
            return
        if _can_add(g, s, i, k):
            visit(s | (1 << i), size + 1, i + 1)
        visit(s, size, i + 1)

    visit(0, 0, 0)
    if best[0] < min_size:
        return OracleResult(0, None, maximal if collect_maximal else None)
    return OracleResult(best[0], frozenset(members(best[1])),
                        maximal if collect_maximal else None)


def enumerate_branch_kplexes(g, s, c, k, min_size=1):
    """
    List every k-plex ``H`` with ``s <= H <= s | c`` and ``|H| >= min_size``.

    :param s: The partial solution as a VertexSet
    :param c: The candidates as a VertexSet, disjoint from ``s``
    :return: The k-plexes as VertexSets
    """
    if (s | c).bit_count() > ORACLE_LIMIT:
        raise InstanceTooLargeError((s | c).bit_count(), ORACLE_LIMIT)
    if not is_kplex(g, s, k):
        return []

    candidates = list(members(c))
    found = []

    def visit(h, i):
        if i == len(candidates):
            if h.bit_count() >= min_size:
                found.append(h)
            return
        v = candidates[i]
        if _can_add(g, h, v, k):
            visit(h | (1 << v), i + 1)
        visit(h, i + 1)

    visit(s, 0)
    return found


def branch_optimum(g, s, c, k):
    """The size of the largest k-plex in the branch ``(s, c)``, 0 if none."""
    return max((h.bit_count() for h in enumerate_branch_kplexes(g, s, c, k)), default=0)
