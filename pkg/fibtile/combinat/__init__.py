from fibtile.combinat.core import (
    Board,
    Composition,
    ConstraintError,
    OracleLimitError,
    RestrictedFamily,
    Separator,
    alpha,
    alpha_inv,
    beta,
    beta_inv,
    enumerate_compositions,
    enumerate_ending,
    enumerate_family,
    fibonacci,
)
from fibtile.combinat.series import CoeffSeq, invert_transform, linear_recurrence_check, rational_coeffs
from fibtile.combinat.partitions import (
    PartitionFlags,
    SetPartition,
    TotallyNestedPartition,
    arc_diagram,
    classify,
    enumerate_ncn,
    enumerate_ncn_indecomposable,
    enumerate_set_partitions,
    enumerate_totally_nested,
    lemma_join,
    lemma_split,
    ncn_counts,
    nesting_chain,
    phi,
    phi_inv,
)
from fibtile.combinat.colorings import (
    Color,
    ColoredComposition,
    ColorScheme,
    DecoratedTiles,
    SecondaryTiling,
    SpottedTiling,
    color_count,
    colored_at,
    colored_index,
    count_colored,
    enumerate_colored,
    enumerate_colors,
    from_board,
    scheme_color_counts,
    to_board,
)
from fibtile.combinat.words import (
    Word,
    WordConstraint,
    check_word,
    colored_to_word,
    enumerate_words,
    jacobsthal_comp_a,
    jacobsthal_comp_a_inv,
    jacobsthal_comp_b,
    jacobsthal_comp_b_inv,
    jacobsthal_word_c,
    jacobsthal_word_c_inv,
    jacobsthal_word_d,
    jacobsthal_word_d_inv,
    word_constraint_for,
    word_to_colored,
)
from fibtile.combinat.ladder import (
    LadderEdge,
    LadderSpanningTree,
    colored_to_tree,
    count_trees,
    enumerate_trees,
    is_spanning_tree,
    ladder_edges,
    tree_to_colored,
)
from fibtile.combinat.unimodal import (
    Side,
    UnimodalSeq,
    colored_to_unimodal,
    enumerate_unimodal,
    is_tn_unimodal,
    is_unimodal,
    oplus,
    peel,
    psi,
    psi_inv,
    unimodal_to_colored,
)
from fibtile.combinat.ocps import (
    CommaSlashString,
    Mark,
    Ocps,
    colored_from_ocps,
    colored_to_ocps,
    enumerate_comma_slash,
    enumerate_ocps,
    ocps_decode,
    ocps_encode,
    xi,
    xi_inv,
)
from fibtile.combinat.multicomp import TwoComposition, colored_from_2comp, colored_to_2comp, enumerate_2comp
