from .altrb import altrb, candidate_filter, seqrb
from .exceptions import BoundViolation


class AltRBPolicy:
    """A branch policy that filters the candidates and then runs AltRB."""

    def execute(self, g, s, c, k, best_size):
        filtered = candidate_filter(g, s, c, k, best_size)
        outcome = altrb(g, s, filtered, k, best_size)
        outcome.filtered = (c & ~filtered).bit_count()
        return outcome


class SeqRBPolicy:
    """A branch policy that reduces and bounds once, in sequence."""

    def execute(self, g, s, c, k, best_size):
        return seqrb(g, s, c, k, best_size)


class BoundCheckPolicy:
    """
    A branch policy that wraps another one and compares every result with
    the sequential reduction of the same branch.

    The wrapped policy must never return a looser bound or more candidates
    than the sequential one. This is used by the test suite and by
    ``SolverConfig(verify_bounds=True)``; it roughly doubles the work done
    per branch.
    """
    def __init__(self, policy):
        self.policy = policy
        self.checked = 0

    def execute(self, g, s, c, k, best_size):
        outcome = self.policy.execute(g, s, c, k, best_size)
        reference = seqrb(g, s, c, k, best_size)
        self.checked += 1
        if outcome.c & ~c:
            raise BoundViolation(outcome.ub, reference.ub,
                                 outcome.c.bit_count(), c.bit_count())
        if outcome.c.bit_count() > reference.c.bit_count():
            raise BoundViolation(outcome.ub, reference.ub,
                                 outcome.c.bit_count(), reference.c.bit_count())
        if not outcome.terminated and outcome.ub > reference.ub:
            raise BoundViolation(outcome.ub, reference.ub,
                                 outcome.c.bit_count(), reference.c.bit_count())
        return outcome
