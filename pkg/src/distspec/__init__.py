"""distspec: distance matrices of graphs, exactly and numerically.

Generators for the classical distance-regular and clique-path families,
closed-form distance spectra with exact values, fraction-free determinants
and rational congruence inertia, a self-contained Jacobi eigensolver used as
the numeric oracle, strongly-regular parameter analysis, and zero-forcing
based bounds on the number of distinct distance eigenvalues.
"""

from .distances import (DisconnectedError, diameter, distance_matrix,
                        format_matrix, parse_matrix, transmission_profile)
from .exact import (Inertia, det_exact, distinct_eigenvalue_count,
                    inertia_exact, quotient_matrix, rank_exact)
from .graphs import (Graph, GraphError, barbell, cartesian_product, complement,
                     complete, cocktail_party, cycle, dodecahedron, double_odd,
                     doob, format_edge_list, generalized_barbell, halved_cube,
                     hamming, hypercube, hypercube_with_leaf, icosahedron,
                     johnson, kneser, line_graph, lollipop, make_graph,
                     odd_graph, parse_edge_list, path, petersen, shrikhande,
                     tensor_product)
from .jacobi import sym_eigenvalues
from .spectra import (QuadraticNumber, Spectrum, cluster_to_spectrum,
                      max_deviation, spectra_match)
from . import bounds, closedforms, srg

__version__ = "0.1.0"
