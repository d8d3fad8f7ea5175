"""
Errors raised by the solver and the graph readers.

The management commands translate these into ``CommandError`` objects with
the exit codes defined in ``kplex.management.commands.utils``.
"""


class KPlexError(Exception):
    """Base class for errors raised by this package."""


class MalformedLineError(KPlexError):

    def __init__(self, line_number, line, reason, source=None):
        self.line_number = line_number
        self.line = line
        self.reason = reason
        self.source = source

    def __str__(self):
        return '{}line {}: {} [{}]'.format(
            '{}, '.format(self.source) if self.source else '',
            self.line_number,
            self.reason,
            self.line.rstrip('\n'))


class InstanceTooLargeError(KPlexError):

    def __init__(self, size, limit):
        self.size = size
        self.limit = limit

    def __str__(self):
        return 'Instance of {} vertices exceeds the brute-force limit of {}'.format(
            self.size, self.limit)


class SolverTimeout(KPlexError):

    def __init__(self, elapsed, limit):
        self.elapsed = elapsed
        self.limit = limit

    def __str__(self):
        return 'Time limit of {}s exceeded after {:.3f}s'.format(
            self.limit, self.elapsed)


class BoundViolation(KPlexError):
    """
    An alternated bound came out looser than the sequential one.

    Only raised when bound verification is switched on.
    """

    def __init__(self, ub, reference_ub, candidates, reference_candidates):
        self.ub = ub
        self.reference_ub = reference_ub
        self.candidates = candidates
        self.reference_candidates = reference_candidates

    def __str__(self):
        return 'Bound violation: UB*={} vs UB={}, |C*|={} vs |C|={}'.format(
            self.ub, self.reference_ub,
            self.candidates, self.reference_candidates)
