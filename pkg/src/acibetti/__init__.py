"""Betti tables of codimension-3 almost complete intersections and their Gorenstein links."""

from .aci3 import (
    AciShape,
    ShapeDecomposition,
    Status,
    Verdict,
    check_characterization,
    check_table,
    decompose,
    extract_dstar,
    linked_gorenstein_degrees,
)
from .betti_core import (
    BettiTable,
    FreeModuleShifts,
    Minimality,
    cancel,
    direct_sum,
    dual_twist,
    hilbert_function,
    koszul_table,
    minimalize,
    subtract,
)
from .errors import AciError
from .gorenstein3 import (
    DegreeSequence,
    GorensteinShape,
    MinAnswer,
    ci_min_provider,
    gorenstein_betti_table,
    min_ci,
    null_provider,
    validate_degree_sequence,
)
from .liaison import (
    LinkContext,
    link_aci_to_gorenstein,
    mapping_cone_resolution,
    socle_degree_resolution,
)
from .monomial3 import (
    MonomialIdeal3,
    minimal_resolution_oracle,
    realize_t2,
    realize_t3,
    resolution_mont2,
    resolution_mont3,
)

__version__ = "0.1.0"
