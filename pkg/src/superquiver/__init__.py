"""Exact symbolic engine for cluster algebras with Grassmann variables:
extended quivers and their mutations, super Laurent polynomial arithmetic,
the mutation-invariant presymplectic form, OSp(1|2) matrices, superfriezes,
and the verification harness tying them together."""

from .errors import (
    EngineError,
    FrozenVertex,
    NotDivisible,
    NotUnit,
    SignatureError,
    SubstitutionError,
)
from .poly import (
    SuperPoly,
    SuperRational,
    SuperRing,
    classical_projection,
    equals_rational,
    exact_div,
    invert_unit,
    substitute,
)
from .quiver import (
    ExtendedQuiver,
    aquiv,
    is_period_one,
    mutate,
    mutate_weight,
    named_quiver,
    osp_example,
    somos4_a,
    somos4_b,
    two_vertex_example,
    weight_function,
)
from .seed import (
    Seed,
    check_laurent,
    classical_limit_check,
    exchange_numerator,
    mutate_seed,
    mutation_sequence,
)
from .colored import check_reduction, from_colored, monomial_transform, oracle_mutate, to_colored
from .forms import check_invariance, form_of_quiver, forms_equal, pullback_mutation
from .osp import (
    OspMatrix,
    SchrodingerSystem,
    diamond_from_osp,
    is_osp,
    monodromy,
    mul_osp,
    osp_from_diamond,
    schrodinger_matrix,
)
from .frieze import SuperFrieze, check_diamonds, check_glide, extract_schrodinger, frieze_vs_seed, generate
from .kernel import BACKEND as KERNEL_BACKEND

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
