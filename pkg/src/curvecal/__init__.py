"""Exact intersection calculus for closed curves on oriented surfaces.

curvecal models free-homotopy classes of closed curves on a genus-k
oriented surface as cyclic words in the canonical generators.  On top of
that it computes signed intersection pairings and crossing-count lower
bounds, verifies change-of-basis matrices between generator systems,
reduces combinatorial crossing diagrams by bigon removal, derives
fundamental-group presentations of 3-manifolds from genus-k attaching
data, and rewrites elementary-cobordism chains by handle cancellation.

All values are immutable and all arithmetic is exact over the integers.
"""

from .cobordism import (
    CobordismChain,
    CriticalRecord,
    boundary_genus_profile,
    build_chain,
    cancel_pair,
    chain_from_dict,
    chain_to_dict,
    dual,
    normalize,
    pairing_between,
    rearrange,
)
from .diagrams import (
    Bigon,
    Crossing,
    CrossingDiagram,
    build_diagram,
    diagram_from_dict,
    diagram_to_dict,
    find_bigon,
    reduce_to_minimal,
    reduce_trace,
    remove_bigon,
)
from .errors import (
    ChainError,
    CurvecalError,
    DiagramError,
    ExponentLimitError,
    GenusMismatchError,
    IndexOutOfGenusError,
    InputFormatError,
    InvalidGenusError,
    WordSyntaxError,
    ZeroExponentError,
)
from .heegaard import (
    BlockDecomposition,
    ClassificationReport,
    HeegaardDiagram,
    Presentation,
    block_decompose,
    build_heegaard,
    classify,
    homogeneity_check,
    parse_diagram_file,
    presentation,
    project_to_handlebody,
    report_to_dict,
)
from .intersections import (
    BasisCandidate,
    BasisMatrix,
    BasisVerdict,
    basis_matrix,
    degree_lower_bound,
    integer_determinant,
    inverse_change_matrix,
    linear_expression,
    matrix_from_dict,
    matrix_to_dict,
    mu_coords,
    pairing,
    verify_basis,
)
from .words import (
    AbelianCoords,
    CurveWord,
    Letter,
    abelianize,
    alpha_word,
    beta_word,
    commutator,
    concat,
    cyclic_reduce,
    free_reduce,
    get_max_exponent,
    invert,
    parse_word,
    render,
    set_max_exponent,
    surface_relator,
)

__version__ = "0.1.0"

__all__ = [
    "AbelianCoords",
    "BasisCandidate",
    "BasisMatrix",
    "BasisVerdict",
    "Bigon",
    "BlockDecomposition",
    "ChainError",
    "ClassificationReport",
    "CobordismChain",
    "CriticalRecord",
    "Crossing",
    "CrossingDiagram",
    "CurveWord",
    "CurvecalError",
    "DiagramError",
    "ExponentLimitError",
    "GenusMismatchError",
    "HeegaardDiagram",
    "IndexOutOfGenusError",
    "InputFormatError",
    "InvalidGenusError",
    "Letter",
    "Presentation",
    "WordSyntaxError",
    "ZeroExponentError",
    "abelianize",
    "alpha_word",
    "basis_matrix",
    "beta_word",
    "block_decompose",
    "boundary_genus_profile",
    "build_chain",
    "build_diagram",
    "build_heegaard",
    "cancel_pair",
    "chain_from_dict",
    "chain_to_dict",
    "classify",
    "commutator",
    "concat",
    "cyclic_reduce",
    "degree_lower_bound",
    "diagram_from_dict",
    "diagram_to_dict",
    "dual",
    "find_bigon",
    "free_reduce",
    "get_max_exponent",
    "homogeneity_check",
    "integer_determinant",
    "inverse_change_matrix",
    "invert",
    "linear_expression",
    "matrix_from_dict",
    "matrix_to_dict",
    "mu_coords",
    "normalize",
    "pairing",
    "pairing_between",
    "parse_diagram_file",
    "parse_word",
    "presentation",
    "project_to_handlebody",
    "rearrange",
    "reduce_to_minimal",
    "reduce_trace",
    "remove_bigon",
    "render",
    "report_to_dict",
    "set_max_exponent",
    "surface_relator",
    "verify_basis",
]
