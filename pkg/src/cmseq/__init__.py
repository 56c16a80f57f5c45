"""Cyclic matching sequenceability toolkit.

cms(G) is the largest s for which some cyclic ordering of E(G) keeps every
s consecutive edges a matching.  This package builds orderings that attain
the known tight or near-tight bounds for regular graphs, measures any
ordering exactly, searches for the true optimum on small instances, and
certifies upper bounds through fractional edge colorings and extremal
subgraphs.
"""

from .coloring import (
    MatchingDecomposition,
    edge_color_delta_plus_one,
    equitable_decomposition,
    exact_chromatic_index,
)
from .generators import (
    b_graph,
    b_prime_graph,
    bk_containing_regular,
    circulant,
    complete,
    cycle,
    disjoint_union,
    matching_graph,
    path,
    random_regular,
    two_regular,
)
from .graphs import (
    Graph,
    adjacent_edges,
    build_graph,
    is_matching,
    matching_number,
    matching_number_brute,
    maximum_matching,
)
from .oracle import (
    ExactCmsResult,
    cms_upper_bound_fractional,
    cms_upper_bound_subgraph,
    exact_cms,
    fractional_chromatic_index,
    maximal_matchings,
)
from .orderings import (
    EdgeOrdering,
    cms_of_ordering,
    concat,
    concat_all,
    distance,
    forward_distance,
    full_ordering,
    make_ordering,
    ms_of_ordering,
    reflect,
    rotate,
    subordering,
)
from .partitioning import (
    PropertyVerdict,
    Semipartition,
    XyzPartition,
    extend_to_partition,
    i_covered_vertices,
    partition_ok,
    required_y,
    semipartition_class1,
    semipartition_class2,
    semipartition_random,
    verify_partition,
)
from .sequencer import (
    CmsCertificate,
    assemble_from_partition,
    build_x_orderings,
    build_yz_orderings,
    general_lower_bound_ordering,
    order_against_fixed,
    order_with_y2_last,
    regular_certificate,
    two_regular_certificate,
    verify_certificate,
)
from .two_regular_orderings import (
    cycle_components,
    order_cycle_or_paths,
    order_no_single_4cycle,
    order_two_matchings,
    order_two_regular,
)

from . import errors

__all__ = [
    "CmsCertificate",
    "EdgeOrdering",
    "ExactCmsResult",
    "Graph",
    "MatchingDecomposition",
    "PropertyVerdict",
    "Semipartition",
    "XyzPartition",
    "adjacent_edges",
    "assemble_from_partition",
    "b_graph",
    "b_prime_graph",
    "bk_containing_regular",
    "build_graph",
    "build_x_orderings",
    "build_yz_orderings",
    "circulant",
    "cms_of_ordering",
    "cms_upper_bound_fractional",
    "cms_upper_bound_subgraph",
    "complete",
    "concat",
    "concat_all",
    "cycle",
    "cycle_components",
    "disjoint_union",
    "distance",
    "edge_color_delta_plus_one",
    "equitable_decomposition",
    "errors",
    "exact_chromatic_index",
    "exact_cms",
    "extend_to_partition",
    "forward_distance",
    "fractional_chromatic_index",
    "full_ordering",
    "general_lower_bound_ordering",
    "i_covered_vertices",
    "is_matching",
    "make_ordering",
    "matching_graph",
    "matching_number",
    "matching_number_brute",
    "maximal_matchings",
    "maximum_matching",
    "ms_of_ordering",
    "order_against_fixed",
    "order_cycle_or_paths",
    "order_no_single_4cycle",
    "order_two_matchings",
    "order_two_regular",
    "order_with_y2_last",
    "partition_ok",
    "path",
    "random_regular",
    "reflect",
    "regular_certificate",
    "required_y",
    "rotate",
    "semipartition_class1",
    "semipartition_class2",
    "semipartition_random",
    "subordering",
    "two_regular",
    "two_regular_certificate",
    "verify_certificate",
    "verify_partition",
]
