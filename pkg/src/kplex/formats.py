"""
Readers and writers for graph files.

Two formats are supported:

- ``edge-list``: one ``u v`` pair of non-negative integer labels per line,
  optionally preceded by an ``n m`` header line. Labels are remapped to
  dense ids in ascending label order.
- ``dimacs``: a ``p edge n m`` problem line followed by ``e u v`` lines with
  1-based labels ``1..n``.

Lines starting with ``#`` or ``%`` are comments in both formats, lines
starting with ``c`` are comments in DIMACS files. Self-loops and repeated
edges are dropped.
"""
from .exceptions import MalformedLineError
from .graph import Graph
from .logging import get_logger

logger = get_logger(__name__)

EDGE_LIST = 'edge-list'
DIMACS = 'dimacs'
FORMATS = (EDGE_LIST, DIMACS)

COMMENT_PREFIXES = ('#', '%')


class GraphFile:
    def __init__(self, path, format=None):
        if format is not None and format not in FORMATS:
            raise ValueError('format({}) must be one of {}'.format(format, FORMATS))
        self.path = path
        self.format = format

    def __repr__(self):
        return 'GraphFile({!r}, format={})'.format(self.path, self.format)


def _is_comment(line):
    stripped = line.strip()
    return not stripped or stripped.startswith(COMMENT_PREFIXES)


def detect_format(lines):
    """``dimacs`` when the first non-comment token is ``p``, else ``edge-list``."""
    for line in lines:
        if _is_comment(line):
            continue
        token = line.split()[0]
        if token == 'c':
            continue
        return DIMACS if token == 'p' else EDGE_LIST
    return EDGE_LIST


def _parse_int(token, line_number, line, source, what):
    try:
        value = int(token)
    except ValueError:
        reason = '{} is not an integer: {!r}'.format(what, token)
        raise MalformedLineError(line_number, line, reason, source)
    if value < 0:
        raise MalformedLineError(line_number, line, '{} is negative: {}'.format(what, value),
                                 source)
    return value


def _parse_edge_list(lines, source):
    rows = []
    for line_number, line in enumerate(lines, start=1):
        if _is_comment(line):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise MalformedLineError(line_number, line,
                                     'expected 2 tokens, found {}'.format(len(tokens)), source)
        rows.append((_parse_int(tokens[0], line_number, line, source, 'label'),
                     _parse_int(tokens[1], line_number, line, source, 'label')))

    # "n m" counts as a header only if m edges follow and n covers their labels
    if rows and rows[0][1] == len(rows) - 1:
        declared_n = rows[0][0]
        rest = {label for row in rows[1:] for label in row}
        if declared_n >= len(rest):
            logger.debug('{}: header declares n={}, m={}',
                         source or 'edge list', declared_n, rows[0][1])
            rows = rows[1:]

    labels = sorted({label for row in rows for label in row})
    index = {label: i for i, label in enumerate(labels)}
    return Graph.from_edges(((index[u], index[v]) for u, v in rows),
                            n=len(labels), labels=labels)


def _parse_dimacs(lines, source):
    n = declared_m = None
    edges = []
    for line_number, line in enumerate(lines, start=1):
        if _is_comment(line):
            continue
        tokens = line.split()
        kind = tokens[0]
        if kind == 'c':
            continue
        if kind == 'p':
            if n is not None:
                raise MalformedLineError(line_number, line, 'second problem line', source)
            if len(tokens) != 4:
                raise MalformedLineError(line_number, line, 'expected "p edge n m"', source)
            n = _parse_int(tokens[2], line_number, line, source, 'n')
            declared_m = _parse_int(tokens[3], line_number, line, source, 'm')
        elif kind in ('e', 'a'):
            if n is None:
                raise MalformedLineError(line_number, line, 'edge before the problem line', source)
            if len(tokens) != 3:
                raise MalformedLineError(line_number, line, 'expected "e u v"', source)
            u = _parse_int(tokens[1], line_number, line, source, 'vertex')
            v = _parse_int(tokens[2], line_number, line, source, 'vertex')
            for w in (u, v):
                if not 1 <= w <= n:
                    raise MalformedLineError(line_number, line,
                                             'vertex {} outside 1..{}'.format(w, n), source)
            edges.append((u - 1, v - 1))
        else:
            raise MalformedLineError(line_number, line,
                                     'unknown line type {!r}'.format(kind), source)

    if n is None:
        raise MalformedLineError(0, '', 'missing problem line', source)
    if declared_m != len(edges):
        logger.warning('{}: problem line declares {} edges but {} were read',
                       source or 'DIMACS input', declared_m, len(edges))
    return Graph.from_edges(edges, n=n, labels=range(1, n + 1))


def parse_lines(lines, format=None, name=None):
    """
    Parse a graph from an iterable of text lines.

    :param lines: The lines, with or without line endings
    :param format: (Optional) ``edge-list`` or ``dimacs``. Default: detected
    :param name: (Optional) The source name used in error messages
    :return: A Graph
    """
    lines = list(lines)
    if format is None:
        format = detect_format(lines)
    if format == DIMACS:
        g = _parse_dimacs(lines, name)
    elif format == EDGE_LIST:
        g = _parse_edge_list(lines, name)
    else:
        raise ValueError('Unknown graph format {}'.format(format))
    logger.info('Read {} ({}): n={}, m={}', name or 'graph', format, g.n, g.m)
    return g


def parse_graph(file):
    """Read the graph stored in a GraphFile (or at a path)."""
    if not isinstance(file, GraphFile):
        file = GraphFile(file)
    with open(file.path) as f:
        return parse_lines(f, file.format, file.path)


def write_edge_list(g, fh):
    """Write ``g`` as an edge list with an ``n m`` header, using its labels."""
    fh.write('{} {}\n'.format(g.n, g.m))
    for u, v in g.edges():
        fh.write('{} {}\n'.format(g.label(u), g.label(v)))


def write_dimacs(g, fh):
    """Write ``g`` in DIMACS format; vertex ``v`` becomes ``v + 1``."""
    fh.write('p edge {} {}\n'.format(g.n, g.m))
    for u, v in g.edges():
        fh.write('e {} {}\n'.format(u + 1, v + 1))
