from .src.scalars import QQ, QQI, CC, GaussianRational, Rational, field_by_name
from .src.polynomial import Polynomial, poly_conjugate, poly_derivative, poly_gcd
from .src.bivariate import BivariatePolynomial
from .src.matrix import (
    DenseMatrix,
    leading_principal_minors,
    matrix_det,
    matrix_inverse,
    matrix_rank_kernel,
    matrix_solve,
)
from .src.roots import poly_roots
from .src.bezout import (
    bezout_matrix,
    cayley_quotient,
    common_zero_count,
    confluent_vandermonde_rank,
    identity_suite,
    vandermonde,
)
from .src.structured import (
    HankelMatrix,
    RootLocation,
    bezout_inverse,
    hankel_from_roots,
    hermite_upper_halfplane,
)
from .src.implicit import (
    RationalTriple,
    implicitize,
    pencil_det,
    quadrature_boundary,
    reciprocal_conjugate_triple,
)
from .src.vessel import (
    CommutativeVessel,
    OperatorNode,
    node_residual,
    vessel_discriminant,
    vessel_from_node,
    vessel_residuals,
)
from .src.braid import (
    PlaneRationalMap,
    branch_contact_order,
    de_sequence,
    image_conics,
    monodromy_descriptor,
    multiplicity_index,
)
