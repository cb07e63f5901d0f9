"""Koszul signs of permutations acting on graded symbol sequences.

The sign map sends a permutation and a sequence of symbols with integer
degrees to +1 or -1, following the rule that exchanging two adjacent symbols
of degrees a and b contributes (-1)**(a*b). The package provides the map
itself, its free-group word form, morphism criteria, its 2-cochain view with
coboundary operators, independent verification oracles, and a CLI (`koszul`).
"""

from .cohomology import (
    SIGNATURE,
    TRIVIAL,
    ModuleStructure,
    OneCochain,
    ThreeCochain,
    TwoCochain,
    build_cf,
    coboundary1,
    coboundary2,
    identity_row,
    is_cocycle,
    module_from_degrees,
)
from .core import (
    GradedSequence,
    Permutation,
    act,
    is_constant_one,
    is_morphism,
    kappa,
    kappa_exponent,
    morphism_bruteforce,
    symmetric_group,
)
from .errors import (
    DimensionError,
    DomainError,
    KoszulError,
    ParseError,
    ResourceError,
)
from .verify import (
    SuiteReport,
    kappa_bruteforce_minword,
    run_suite,
    sign_exponent_terms,
)
from .words import (
    Generator,
    Word,
    decompose_adjacent,
    kappa_word,
    parse_word,
    project,
    reduce_word,
    relators,
    render_word,
)

__version__ = "0.1.0"

__all__ = [
    "GradedSequence",
    "Permutation",
    "act",
    "kappa",
    "kappa_exponent",
    "is_morphism",
    "is_constant_one",
    "morphism_bruteforce",
    "symmetric_group",
    "Generator",
    "Word",
    "decompose_adjacent",
    "kappa_word",
    "parse_word",
    "project",
    "reduce_word",
    "relators",
    "render_word",
    "ModuleStructure",
    "TwoCochain",
    "OneCochain",
    "ThreeCochain",
    "TRIVIAL",
    "SIGNATURE",
    "build_cf",
    "coboundary1",
    "coboundary2",
    "identity_row",
    "is_cocycle",
    "module_from_degrees",
    "SuiteReport",
    "run_suite",
    "kappa_bruteforce_minword",
    "sign_exponent_terms",
    "KoszulError",
    "DimensionError",
    "DomainError",
    "ResourceError",
    "ParseError",
]
