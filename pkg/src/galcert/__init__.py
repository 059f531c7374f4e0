"""Finite checkable certificates for realization questions: rigidity of
class vectors, braid orbits, ramification data, the unramified Brauer
kernel, and rationality of cyclic fixed fields."""

from .catalogue import (
    GroupSpec,
    alternating,
    cyclic,
    dihedral,
    direct_product,
    parse_group_spec,
    quaternion8,
    symmetric,
)
from .cayley import CayleyGroup, bicyclic_subgroups, cayley_from_permgroup, subgroup_cayley
from .cohomology import (
    Cochain2,
    CohomologyModule,
    bockstein,
    bogomolov_multiplier,
    class_is_trivial,
    coboundary,
    h2_qz,
    is_cocycle,
    restrict_cocycle,
)
from .cyclotomic import CyclotomicInt, cyclotomic_poly, norm_search
from .errors import BudgetExceeded
from .monodromy import (
    RamificationDatum,
    RealizationResult,
    is_self_normalizing,
    parity_obstruction,
    realize_datum,
    recognize_symmetric_by_transpositions,
)
from .nielsen import (
    BraidOrbit,
    BraidOrbitReport,
    ClassVector,
    NielsenTuple,
    RigidityCertificate,
    braid_generator_action,
    braid_orbits,
    enumerate_ni_star,
    enumerate_nielsen,
    is_rigid,
    rigidity_certificate,
)
from .noether import NoetherVerdict, NormWitness, lenstra_condition, plans_condition
from .permgroup import (
    ConjugacyClass,
    PermGroup,
    centralizer_order,
    class_by_label,
    class_of,
    conjugacy_classes,
    generates,
    is_rational_class,
)
from .permutation import Permutation, parse_cycles

__version__ = "0.1.0"

__all__ = [
    "BraidOrbit",
    "BraidOrbitReport",
    "BudgetExceeded",
    "CayleyGroup",
    "ClassVector",
    "Cochain2",
    "CohomologyModule",
    "ConjugacyClass",
    "CyclotomicInt",
    "GroupSpec",
    "NielsenTuple",
    "NoetherVerdict",
    "NormWitness",
    "PermGroup",
    "Permutation",
    "RamificationDatum",
    "RealizationResult",
    "RigidityCertificate",
    "alternating",
    "bicyclic_subgroups",
    "bockstein",
    "bogomolov_multiplier",
    "braid_generator_action",
    "braid_orbits",
    "cayley_from_permgroup",
    "centralizer_order",
    "class_by_label",
    "class_is_trivial",
    "class_of",
    "coboundary",
    "conjugacy_classes",
    "cyclic",
    "cyclotomic_poly",
    "dihedral",
    "direct_product",
    "enumerate_ni_star",
    "enumerate_nielsen",
    "generates",
    "h2_qz",
    "is_cocycle",
    "is_rational_class",
    "is_rigid",
    "is_self_normalizing",
    "lenstra_condition",
    "norm_search",
    "parity_obstruction",
    "parse_cycles",
    "parse_group_spec",
    "plans_condition",
    "quaternion8",
    "realize_datum",
    "recognize_symmetric_by_transpositions",
    "restrict_cocycle",
    "rigidity_certificate",
    "subgroup_cayley",
    "symmetric",
]
