"""linkdiag: diagrammatic and polynomial invariants of oriented link diagrams.

Seifert circles and the signed Seifert graph, homogeneity classification,
Murasugi-Przytycki indices, HOMFLY polynomials, braid closures and
quasipositive witnesses, Vogel braidization, and positivity certificates
for homogeneous quasipositive links.
"""

__version__ = "0.1.0"

from .braids import (
    BraidWord,
    QPFactor,
    QPWitness,
    braid_sl,
    closure,
    expand_witness,
    parse_braid,
    serialize_braid,
    witness_from_json,
    witness_to_json,
)
from .diagram import (
    Crossing,
    Diagram,
    DiagramCounts,
    ValidationReport,
    counts,
    diagram_from_json,
    diagram_to_json,
    import_pd,
    mirror,
    parse_diagram,
    serialize_diagram,
    validate,
)
from .graph_index import IndexReport, ReductionWitness, dhl_check, ind_all, ind_value
from .homfly import DegreeReport, degree_report, homfly
from .poly import DELTA, LaurentPoly2
from .seifert import (
    HomogeneityReport,
    SeifertAnalysis,
    SignedMultigraph,
    GraphEdge,
    diagram_sl,
    graph_from_edge_list,
    homogeneity,
    o_plus,
    seifert_analysis,
)
from .theorems import (
    Bounds,
    Certificate,
    WitnessSL,
    abe_s,
    braid_index_bounds,
    certify,
    mirror_identity_check,
    mp_reduce,
    witness_sl,
)
from .vogel import vogel_braidize

__all__ = [
    "BraidWord",
    "Bounds",
    "Certificate",
    "Crossing",
    "DELTA",
    "DegreeReport",
    "Diagram",
    "DiagramCounts",
    "GraphEdge",
    "HomogeneityReport",
    "IndexReport",
    "LaurentPoly2",
    "QPFactor",
    "QPWitness",
    "ReductionWitness",
    "SeifertAnalysis",
    "SignedMultigraph",
    "ValidationReport",
    "WitnessSL",
    "abe_s",
    "braid_index_bounds",
    "braid_sl",
    "certify",
    "closure",
    "counts",
    "degree_report",
    "dhl_check",
    "diagram_from_json",
    "diagram_sl",
    "diagram_to_json",
    "expand_witness",
    "graph_from_edge_list",
    "homfly",
    "homogeneity",
    "import_pd",
    "ind_all",
    "ind_value",
    "mirror",
    "mirror_identity_check",
    "mp_reduce",
    "o_plus",
    "parse_braid",
    "parse_diagram",
    "seifert_analysis",
    "serialize_braid",
    "serialize_diagram",
    "validate",
    "vogel_braidize",
    "witness_from_json",
    "witness_sl",
    "witness_to_json",
]
