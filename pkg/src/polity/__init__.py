"""Sites, formations and their morphisms: knits, nerves, canonical sites,
functor checks, delegation analysis and a brute-force oracle."""
from .combinatorics import (
    Base,
    Coalition,
    Complex,
    SimplicialComplex,
    carrier,
    downward_closure,
    hat_extend,
    is_simplicial,
    max_elements,
)
from .canonical import canonical_site, canonical_with_nerve, is_canonical, subcanonical_site
from .delegation import (
    Delegation,
    check_withdrawal_equivalences,
    friendly_foundation_witness,
    is_friendly_delegation,
    is_simplicial_delegation,
)
from .errors import ConsistencyError, InputError, SizeLimitError
from .functors import FunctorTag, check_naturality, functor_on_morphism, functor_on_object
from .morphisms import (
    BaseMap,
    CMap,
    GroundMap,
    PairMap,
    Verdict,
    are_g_isomorphic,
    are_pair_isomorphic,
    check_c_map,
    check_pair_map,
    compose_pair,
    direct_g_image,
    find_ground_witness,
    inverse_g_image,
    p_image,
)
from .site_core import (
    Ground,
    PartingTable,
    PSite,
    StateSet,
    effective_site,
    is_isotopy,
    is_perfect,
    is_simple,
    knit,
    nerve,
    parting,
    parting_table,
    site_from_parting,
    states_containing,
    states_exact,
)

__version__ = "0.1.0"

__all__ = [
    "Base", "Coalition", "Complex", "SimplicialComplex", "carrier", "downward_closure",
    "hat_extend", "is_simplicial", "max_elements", "ConsistencyError", "InputError",
    "SizeLimitError", "Ground", "PartingTable", "PSite", "StateSet", "effective_site",
    "is_isotopy", "is_perfect", "is_simple", "knit", "nerve", "parting", "parting_table",
    "site_from_parting", "states_containing", "states_exact",
    "canonical_site", "canonical_with_nerve", "is_canonical", "subcanonical_site",
    "Delegation", "check_withdrawal_equivalences", "friendly_foundation_witness",
    "is_friendly_delegation", "is_simplicial_delegation",
    "FunctorTag", "check_naturality", "functor_on_morphism", "functor_on_object",
    "BaseMap", "CMap", "GroundMap", "PairMap", "Verdict", "are_g_isomorphic",
    "are_pair_isomorphic", "check_c_map", "check_pair_map", "compose_pair", "direct_g_image",
    "find_ground_witness", "inverse_g_image", "p_image",
]
