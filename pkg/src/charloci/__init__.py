"""charloci: exceptional character sets of finitely presented groups.

Computes twisted first cohomology of group presentations over an exact
field tower, classifies the induced actions on Bruhat-Tits trees through
discrete valuations, runs the metabelian (Alexander ideal) pipeline with
its integrality and torsion certificates, and cross-checks the
two-orbifold jump-locus predictor against brute-force enumeration.
"""

__version__ = "0.1.0"

from .fields import (  # noqa: F401
    FieldElement,
    PrimeField,
    QQ,
    RationalFunctionField,
    Rationals,
    SimpleExtension,
)
from .valuations import (  # noqa: F401
    DegreeValuation,
    PAdicValuation,
    PolyAdicValuation,
)
from .presentations import (  # noqa: F401
    Abelianization,
    Character,
    Presentation,
    baumslag_solitar,
    free_group,
    multiplicative_kernel,
    parse_presentation,
    surface_group,
)
from .cohomology import h1  # noqa: F401
from .tree import (  # noqa: F401
    classify_affine_action,
    classify_matrix,
)
from .alexander import (  # noqa: F401
    AlexanderData,
    alexander_ideal_rank1,
    bns_rays,
    finite_field_records,
    minimal_prime_characters,
)
from .orbifolds import (  # noqa: F401
    OrbifoldSignature,
    crosscheck_prediction,
    predict_exceptional_set,
)
from .grammar import parse_character, parse_field  # noqa: F401

__all__ = [
    "AlexanderData",
    "Abelianization",
    "Character",
    "DegreeValuation",
    "FieldElement",
    "OrbifoldSignature",
    "PAdicValuation",
    "PolyAdicValuation",
    "Presentation",
    "PrimeField",
    "QQ",
    "RationalFunctionField",
    "Rationals",
    "SimpleExtension",
    "alexander_ideal_rank1",
    "baumslag_solitar",
    "bns_rays",
    "classify_affine_action",
    "classify_matrix",
    "crosscheck_prediction",
    "finite_field_records",
    "free_group",
    "h1",
    "minimal_prime_characters",
    "multiplicative_kernel",
    "parse_character",
    "parse_field",
    "parse_presentation",
    "predict_exceptional_set",
    "surface_group",
]
