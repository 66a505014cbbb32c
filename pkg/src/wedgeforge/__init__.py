"""wedgeforge: exact computations around the simplicial wedge construction.

The package builds wedged complexes K(J), the derived characteristic
matrices that make them toric, the presentations and Betti numbers of the
resulting manifolds, cubical models of the associated polyhedral products,
and nests of embeddings indexed by weight vectors.  All arithmetic is exact.
"""

from .complexes import (
    SimplicialComplex,
    delete_vertex,
    f_h_vectors,
    faces,
    join,
    link,
    minimal_nonfaces,
    pseudomanifold_check,
    validate_complex,
)
from .charmaps import (
    CharPair,
    DerivedCharPair,
    build_S_J,
    build_lambda_J,
    kernel_S,
    verify_characteristic,
    verify_kernel_J,
    verify_lambda_J,
)
from .intlin import IntMatrix, det, kernel_basis, minor, smith_normal_form
from .nests import Nest, NestStep, leq, make_nest, nest_report, normal_bundle
from .polyprod import (
    CubicalModel,
    cubical_homology,
    dsigma_decomposition,
    real_model,
    real_model_wedged,
    total_betti_sweep,
    verify_subspace_equality,
)
from .rings import (
    BettiNumbers,
    HilbertSeries,
    RingPresentation,
    betti_MJ,
    eliminate_unit_variables,
    graded_dims,
    hilbert_weighted,
    linear_ideal,
    presentation_condensed,
    presentation_standard,
    sr_ideal,
    weighted_ideal,
)
from .wedge import (
    WedgedComplex,
    d_of,
    detect_wedge,
    wedge_J,
    wedge_at,
    wedged_from_nonfaces,
)

__version__ = "0.1.0"
