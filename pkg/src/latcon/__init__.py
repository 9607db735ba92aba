"""latcon: a workbench for finite lattices, congruence lattices, and
planar rectangular gluing constructions.

The core objects are :class:`~latcon.core.FiniteLattice` (elements are the
ints ``0..n-1`` in a fixed linear extension) and
:class:`~latcon.rectangular.RectLattice` (a lattice together with its planar
rectangular boundary data).  On top of those sit congruence lattices with
cover colorings, the finite distributive duality between lattices and their
join-irreducible posets, rectangular triple gluing, and the representation
pipelines that realize a bounded homomorphism between two congruence
lattices as the restriction map of a single ambient lattice.
"""

from .birkhoff import (
    BoundedHom,
    BrtReport,
    IsotoneMap,
    brt_report,
    enumerate_bounded_homs,
    enumerate_isotone_maps,
    hom_of_isotone,
    ji_of_hom,
    make_bounded_hom,
    spectrum,
)
from .congruence import (
    ConLattice,
    Congruence,
    congruence_from_blocks,
    congruence_lattice,
    generated_congruence,
    is_congruence,
    is_cp_extension,
    is_simple,
    principal_congruence,
    singleton_extension,
)
from .construction import (
    ChainCollapseReport,
    ConstructionReport,
    EyeRecord,
    boundary_color_extension,
    filter_representation,
    ideal_representation,
    lower_boundary_color_extension,
    simple_ideal_embedding,
    upper_chain_collapse_check,
)
from .core import (
    FiniteLattice,
    Poset,
    are_isomorphic,
    chain,
    direct_product,
    downset_lattice,
    find_isomorphism,
    glued_sum,
    is_distributive,
    is_semimodular,
    join_irreducibles,
    make_lattice,
    make_lattice_with_map,
    sublattice,
)
from .errors import (
    ColorMissingOnLowerBoundary,
    EmbeddingInvalid,
    InvalidLattice,
    LatconError,
    NotACongruence,
    NotDistributive,
    NotSemimodular,
    UpperChainConditionFails,
)
from .rectangular import (
    Cell,
    GluedLattice,
    RectLattice,
    TripleGluingAssembly,
    cells,
    crossing_cell,
    dual,
    glue,
    grid,
    grid_with_eyes,
    insert_eye,
    make_rectangular,
    triple_glue,
)
from .verify import (
    CheckResult,
    VerificationReport,
    lemma_suite,
    verify_filter_representation,
    verify_ideal_representation,
)

__version__ = "0.1.0"

__all__ = [
    "BoundedHom",
    "BrtReport",
    "Cell",
    "ChainCollapseReport",
    "CheckResult",
    "ColorMissingOnLowerBoundary",
    "ConLattice",
    "Congruence",
    "ConstructionReport",
    "EmbeddingInvalid",
    "EyeRecord",
    "FiniteLattice",
    "GluedLattice",
    "InvalidLattice",
    "IsotoneMap",
    "LatconError",
    "NotACongruence",
    "NotDistributive",
    "NotSemimodular",
    "Poset",
    "RectLattice",
    "TripleGluingAssembly",
    "UpperChainConditionFails",
    "VerificationReport",
    "are_isomorphic",
    "boundary_color_extension",
    "brt_report",
    "cells",
    "chain",
    "congruence_from_blocks",
    "crossing_cell",
    "congruence_lattice",
    "direct_product",
    "downset_lattice",
    "dual",
    "enumerate_bounded_homs",
    "find_isomorphism",
    "enumerate_isotone_maps",
    "filter_representation",
    "generated_congruence",
    "glue",
    "glued_sum",
    "grid",
    "grid_with_eyes",
    "hom_of_isotone",
    "ideal_representation",
    "insert_eye",
    "is_congruence",
    "is_cp_extension",
    "is_distributive",
    "is_semimodular",
    "is_simple",
    "ji_of_hom",
    "join_irreducibles",
    "lemma_suite",
    "lower_boundary_color_extension",
    "make_bounded_hom",
    "make_lattice",
    "make_lattice_with_map",
    "make_rectangular",
    "principal_congruence",
    "simple_ideal_embedding",
    "singleton_extension",
    "spectrum",
    "sublattice",
    "triple_glue",
    "upper_chain_collapse_check",
    "verify_filter_representation",
    "verify_ideal_representation",
    "__version__",
]
