"""Size guards.

Every exponential enumeration in the package checks one of these limits and
raises :class:`~chromakac.errors.SizeLimitError` instead of running away.
Functions take an explicit keyword override; ``None`` falls back to the
environment (where supported) and then to the default below.
"""

import os

MAX_VERTICES = 16
MAX_LATTICE = 2_000_000
MAX_COLORS = 8
MAX_COLOR_VERTICES = 10
MAX_ORIENTATION_EDGES = 20

LATTICE_ENV = "CHROMAKAC_MAX_LATTICE"


def max_vertices(override=None):
    return MAX_VERTICES if override is None else int(override)


def max_lattice(override=None):
    if override is not None:
        return int(override)
    env = os.environ.get(LATTICE_ENV)
    if env:
        return int(env)
    return MAX_LATTICE
