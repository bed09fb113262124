"""Chromatic polynomials of graphs computed through Kac-Moody root multiplicities.

Every route to P(G, q) is exact: bond-lattice multiplicities, the Moebius
function, rational path sums, a weight-matrix power, and three classical
oracles that never touch the lattice.
"""

from .chromatic import (
    CHROMATIC_METHODS,
    METHODS,
    WeightMatrix,
    acyclic_orientation_count,
    chromatic_bond_lattice,
    chromatic_deletion_contraction,
    chromatic_independent_partitions,
    chromatic_interpolated,
    chromatic_interval,
    chromatic_matrix_power,
    chromatic_mobius,
    chromatic_path_sum,
    coloring_count,
    compute,
    coxeter_class_count,
    q_kostant_at_beta,
)
from .errors import (
    ChromakacError,
    ContractViolation,
    GraphParseError,
    InvariantFailure,
    LatticeLookupError,
    SizeLimitError,
)
from .graph import (
    Graph,
    cross_edge_count,
    edge_count,
    form_beta_beta_minus_2rho,
    generate_graph,
    is_connected,
    mask_of,
    parse_graph,
)
from .lattice import (
    BondLattice,
    ConnectedPartition,
    covers_of,
    enumerate_lattice,
    interval_below,
    mobius,
)
from .multiplicity import MultTable, edge_weight, mult_partition, mult_root, path_sum
from .polynomial import Polynomial
from .verify import RunReport, run_verification

__version__ = "0.1.0"
