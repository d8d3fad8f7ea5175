__version__ = '0.1.0'

__title__ = 'django-kplex'
__description__ = 'Django KPlex finds the largest k-plex of a graph exactly, ' \
                  'with a branch-reduction-and-bound solver and commands ' \
                  'for solving and benchmarking graph files'
__uri__ = 'https://django-kplex.readthedocs.org/'

__author__ = 'Andrew Dodd'
__email__ = 'andrew.john.dodd@gmail.com'

__license__ = 'MIT'
__copyright__ = 'Copyright (c) 2015 Andrew Dodd'

# The solver entry points live in kplex.search; nothing is imported here so
# that the app registry can load the package without side effects.
