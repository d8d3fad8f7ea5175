import json

from .graph import degeneracy_order
from .search import NONE

REQUIRED_KEYS = (
    'n', 'm', 'k', 'mode', 'status', 'size', 'branches', 'mean_r',
    'lb_initial', 'lb_final', 't_heuristic_ms', 't_reduce_ms', 't_search_ms',
    't_total_ms',
)


class GraphSummary:
    """The statistics of an input graph echoed in every report."""

    def __init__(self, n, m, density, d_max, degeneracy):
        self.n = n
        self.m = m
        self.density = density
        self.d_max = d_max
        self.degeneracy = degeneracy

    @classmethod
    def of(cls, g):
        return cls(g.n, g.m, g.density(), g.max_degree(), degeneracy_order(g).delta)

    def as_dict(self):
        return {
            'n': self.n,
            'm': self.m,
            'density': self.density,
            'd_max': self.d_max,
            'degeneracy': self.degeneracy,
        }


class RunReport:
    """
    A machine readable record of one solve.

    Every counter of the solve appears under a fixed key, and the JSON
    rendering sorts keys so the same run always serialises the same way.
    """

    def __init__(self, values):
        self.values = values

    @classmethod
    def build(cls, g, cfg, solution, wall_time, source=None, summary=None):
        """
        :param g: The input Graph
        :param cfg: The SolverConfig used
        :param solution: The Solution returned by the solver
        :param wall_time: Total wall time in seconds, parsing included
        :param source: (Optional) The file the graph came from
        :param summary: (Optional) A precomputed GraphSummary of ``g``
        """
        summary = summary or GraphSummary.of(g)
        values = summary.as_dict()
        values.update(solution.stats.as_dict())
        values.update({
            'k': cfg.k,
            'mode': cfg.mode.value,
            'time_limit': cfg.time_limit,
            'heuristic_probes_enabled': cfg.heuristic_probes,
            'status': solution.status,
            'size': solution.size,
            'witness': list(solution.labels),
            't_total_ms': wall_time * 1000.0,
        })
        if source is not None:
            values['source'] = str(source)
        if solution.status == NONE:
            values['note'] = (
                'no {}-plex of at least {} vertices; any {} vertices form a {}-plex'.format(
                    cfg.k, 2 * cfg.k - 1, min(g.n, cfg.k), cfg.k))
        return cls(values)

    def __getitem__(self, key):
        return self.values[key]

    def as_dict(self):
        return dict(self.values)

    def to_json(self, **kwargs):
        kwargs.setdefault('indent', 2)
        return json.dumps(self.values, sort_keys=True, **kwargs)

    def write(self, path):
        with open(path, 'w') as f:
            f.write(self.to_json())
            f.write('\n')
