"""Desk-scale toolkit for rigid surjections, strong rigid quotient maps,
and dual Ramsey arrow checking on finite ordered oriented graphs."""
from .arrows import (
    ArrowInstance,
    ArrowVerdict,
    Coloring,
    WitnessSearchReport,
    build_arrow_instance,
    check_arrow_direct,
    check_arrow_dual,
    check_arrow_naive,
    check_fdrt_instance,
    find_minimal_dual_witness,
    partition_to_rigid_surjection,
    rigid_surjection_to_partition,
)
from .chains import (
    Chain,
    Verdict,
    VertexMorphism,
    align_morphism,
    alex_pair_key,
    alex_pair_less,
    alex_set_key,
    alex_set_less,
    characteristic_vector,
    compose_vertex,
    concat,
    count_rigid_surjections,
    enumerate_rigid_surjections,
    identity,
    is_initial_segment_preserving,
    is_rigid_surjection,
    relabel_chain,
    sal_key,
    sal_less,
)
from .cocones import (
    BinaryCoconeData,
    BinaryShape,
    BottomVertex,
    EDigPair,
    check_commuting_cocone,
    cocone_from_json,
    cocone_to_json,
    glue,
    is_in_subcategory_d,
    product_compose,
    rigidity_comparison_cases,
    split_oograph,
    unsplit_pair,
)
from .errors import ContractViolation, GuardExceeded, InvalidInput, PreconditionError
from .graphs import (
    LinExtDigraph,
    OrderedOrientedGraph,
    backward_part_reversed,
    forward_part,
    induced_arc_map,
    is_embedding,
    is_homomorphism,
    is_quotient_map,
    pair_chain,
    relabel_graph,
    to_dot,
)
from .homsets import HomSet, count_homset, enumerate_homset, iter_homset
from .morphisms import (
    MorphismClass,
    compose,
    derived_rigid_surjection_and_quotient,
    identity_morphism,
    is_chain_embedding,
    is_member,
    is_srq_edig,
    is_srq_oograph,
    min_preimage_lemma_check,
)

__all__ = [
    "ArrowInstance",
    "ArrowVerdict",
    "BinaryCoconeData",
    "BinaryShape",
    "BottomVertex",
    "Chain",
    "Coloring",
    "ContractViolation",
    "EDigPair",
    "GuardExceeded",
    "HomSet",
    "InvalidInput",
    "LinExtDigraph",
    "MorphismClass",
    "OrderedOrientedGraph",
    "PreconditionError",
    "Verdict",
    "VertexMorphism",
    "WitnessSearchReport",
    "align_morphism",
    "alex_pair_key",
    "alex_pair_less",
    "alex_set_key",
    "alex_set_less",
    "backward_part_reversed",
    "build_arrow_instance",
    "characteristic_vector",
    "check_arrow_direct",
    "check_arrow_dual",
    "check_arrow_naive",
    "check_commuting_cocone",
    "check_fdrt_instance",
    "cocone_from_json",
    "cocone_to_json",
    "compose",
    "compose_vertex",
    "concat",
    "count_homset",
    "count_rigid_surjections",
    "derived_rigid_surjection_and_quotient",
    "enumerate_homset",
    "enumerate_rigid_surjections",
    "find_minimal_dual_witness",
    "forward_part",
    "glue",
    "identity",
    "identity_morphism",
    "induced_arc_map",
    "is_chain_embedding",
    "is_embedding",
    "is_homomorphism",
    "is_in_subcategory_d",
    "is_initial_segment_preserving",
    "is_member",
    "is_quotient_map",
    "is_rigid_surjection",
    "is_srq_edig",
    "is_srq_oograph",
    "iter_homset",
    "min_preimage_lemma_check",
    "pair_chain",
    "partition_to_rigid_surjection",
    "product_compose",
    "relabel_chain",
    "relabel_graph",
    "rigid_surjection_to_partition",
    "rigidity_comparison_cases",
    "sal_key",
    "sal_less",
    "split_oograph",
    "to_dot",
    "unsplit_pair",
]
