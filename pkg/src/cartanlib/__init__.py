"""cartanlib: exact Cartan subalgebras of associated Lie algebras.

Structure-constant algebras over Q or GF(p); radicals, Wedderburn-Malcev
complements, maximal tori, Cartan subalgebras, modular group algebras,
unit groups, and brute-force oracles for small instances.
"""

from .algebra import (
    Algebra,
    Subspace,
    associative_closure,
    center,
    centralizer,
    direct_product,
    lie_normalizer,
    lower_central_series,
    quotient,
    structure_equal,
    subalgebra_algebra,
    tensor_product,
)
from .cartan import (
    CartanCertificate,
    TorusCertificate,
    cartan_subalgebra,
    index_of_central_simple,
    is_separable_element,
    is_torus,
    lie_nilpotency_report,
    maximal_torus,
    soluble_hull,
    verify_cartan,
)
from .fields import PrimeField, QQ, Rationals, parse_field
from .groups import (
    GroupTable,
    augmentation_left_ideal,
    cyclic,
    derived_subgroup,
    dihedral,
    group_algebra,
)
from .oracle import Bipartition, enumerate_cartans_bruteforce, ordered_bipartitions, radical_bruteforce
from .polynomials import Polynomial, is_squarefree, minimal_polynomial, poly_gcd
from .presets import dual_numbers, matrix_algebra, polynomial_quotient_algebra, quaternion_algebra
from .radical import (
    RadicalDecomposition,
    conjugate_subalgebra,
    is_nilpotent_element,
    is_reduced,
    is_soluble,
    radical,
    radical_complement,
    radical_decomposition,
)
from .units import UnitGroup, group_nilpotency, unit_group, units_decomposition_check

__version__ = "0.1.0"

__all__ = [
    "Algebra",
    "Subspace",
    "associative_closure",
    "center",
    "centralizer",
    "direct_product",
    "lie_normalizer",
    "lower_central_series",
    "quotient",
    "structure_equal",
    "subalgebra_algebra",
    "tensor_product",
    "CartanCertificate",
    "TorusCertificate",
    "cartan_subalgebra",
    "index_of_central_simple",
    "is_separable_element",
    "is_torus",
    "lie_nilpotency_report",
    "maximal_torus",
    "soluble_hull",
    "verify_cartan",
    "PrimeField",
    "QQ",
    "Rationals",
    "parse_field",
    "GroupTable",
    "augmentation_left_ideal",
    "cyclic",
    "derived_subgroup",
    "dihedral",
    "group_algebra",
    "Bipartition",
    "enumerate_cartans_bruteforce",
    "ordered_bipartitions",
    "radical_bruteforce",
    "Polynomial",
    "is_squarefree",
    "minimal_polynomial",
    "poly_gcd",
    "dual_numbers",
    "matrix_algebra",
    "polynomial_quotient_algebra",
    "quaternion_algebra",
    "RadicalDecomposition",
    "conjugate_subalgebra",
    "is_nilpotent_element",
    "is_reduced",
    "is_soluble",
    "radical",
    "radical_complement",
    "radical_decomposition",
    "UnitGroup",
    "group_nilpotency",
    "unit_group",
    "units_decomposition_check",
    "__version__",
]
