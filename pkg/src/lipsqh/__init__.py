"""Exact Lipschitz classification of polynomials.

Univariate: decides g(phi(t)) = c*f(t) equivalence. Bivariate: decides
(where the known criteria apply) R-semialgebraic Lipschitz equivalence
of beta-quasihomogeneous polynomials, with certificates and numerical
conjugacy witnesses.
"""

from .algnum import AlgebraicNumber, arith, compare, eval_at, make_algebraic, sign_at
from .classify2d import Verdict2D, classify, explain
from .lipeq1d import (
    ConstantSet,
    MultiplicitySymbol,
    Verdict1D,
    critical_points,
    equivalence_1d,
    multiplicity_symbol,
    symbols_similarity,
)
from .polyarith import (
    Interval,
    Poly,
    interval_eval,
    isolate_real_roots,
    squarefree_decomposition,
    sturm_count,
)
from .quasihomog import (
    Beta,
    QuasiHomogPoly,
    from_monomials,
    halfplane_zeros,
    height_functions,
    x_multiplicity,
)
from .transitions import (
    PairingCertificate,
    ProtoTransitionSample,
    compose_proto,
    is_beta_transition,
    pairing_search,
)
from .witness import (
    PlanarWitnessMap,
    build_phi,
    inverse_beta_transform,
    verify_conjugacy,
    witness_for,
)

__version__ = "0.1.0"
