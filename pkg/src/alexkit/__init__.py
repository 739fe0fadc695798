"""Alexander polynomials of 2-knots from Seifert pairs and A-ribbon data.

Exact integer arithmetic throughout: Laurent polynomials over Z, integer
matrices with Smith normal form, Levine presentations ``t V+ - V-``, Seifert
blocks built from A-ribbon position data, and a mirror connected-sum test
based on the second elementary ideal.
"""

from .laurent import (
    LaurentPoly, NotDivisible, PolySyntaxError, ZeroEvaluationPoint, ZeroPolynomial,
    ONE, T, ZERO, add, associates, canonicalize, divmod_poly, eval_at, exact_divide,
    involute, mul, parse, to_compact, to_str,
)
from .factor import (
    DEFAULT_MAX_DEGREE, DegreeTooLarge, Factorization, factor, fox_milnor_witness,
    reciprocal_factorizations,
)
from .intlinalg import (
    IntMatrix, SmithDecomposition, cokernel_invariants, rank, smith_normal_form,
)
from .seifert import (
    InvalidPair, LaurentMatrix, SeifertPair, ZeroDeterminant, alexander, direct_sum,
    levine_matrix, mirror_pair, validate, z_torsion_certificate,
)
from .aribbon import (
    ARibbonPresentation, LinkingsConditionFails, MissingEtaData, NonzeroLinkingMatrix,
    Position, PresentationError, Region, SeifertBlocks, SelfBoundaryQuery,
    alexander_of_presentation, assemble_seifert_pair, build_U, build_W,
    check_concentricity, check_linkings_condition, derive_epsilon_hat, derive_epsilon_y,
    fox_milnor_from_linkings, homology, random_presentation, seifert_blocks,
)
from .classical import InvalidSeifertMatrix, UnknownKnot, catalog, catalog_names, spun, spun_knot
from .modulecalc import (
    INCONCLUSIVE, OBSTRUCTED, ModulePresentation, ObstructionReport, connected_sum,
    elementary_ideal, evaluate_ideal, from_seifert, mirror, mirror_sum_obstruction,
)
from .formats import ParseError, dump, dumps, example_files, load, load_example, loads

__version__ = "0.1.0"
