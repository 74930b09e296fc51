"""Coxeter and Artin group word machinery.

Exact word problem for arbitrary labeled-graph Coxeter groups, minimal
coset and double-coset decompositions along standard parabolics, Artin
words with equality oracles for the free, right-angled and dihedral
subclasses, and the word-level retraction pipeline that standardizes a
conjugated parabolic subgroup inside another.
"""

from .coxeter import (
    DEFAULT_CLOSURE_CAP,
    IDENTITY,
    CoxeterElement,
    braid_closure,
    enumerate_elements,
    format_coxeter_word,
    invert,
    left_descents,
    multiply,
    parse_coxeter_word,
    reduce,
    right_descents,
)
from .dihedral import dihedral_normal_form, simple_elements
from .errors import (
    ClosureCapExceeded,
    DomainError,
    InternalAssertionError,
    OracleUnsupported,
    PreconditionViolated,
    PresentationError,
    SearchExhausted,
    UnknownGeneratorError,
    WordSyntaxError,
)
from .parabolic import (
    CosetDecomposition,
    DoubleCosetDecomposition,
    decompose_left,
    double_coset_decompose,
    enumerate_parabolic,
    is_minimal,
    member_parabolic,
)
from .presentation import INFINITY, Presentation, alternating_word, parse_presentation
from .retraction import (
    ConjugationResult,
    ConjugationVerification,
    GeneratedInstance,
    IdentityCheckReport,
    RetractionTrace,
    TraceStep,
    TransportResult,
    check_colored_conjugation,
    conjugate_into_parabolic,
    generate_instance,
    retract_word,
    transport,
    verify_conjugation,
)
from .words import (
    ArtinLetter,
    ArtinWord,
    EqualityVerdict,
    Verdict,
    abelianization,
    classify_presentation,
    colorize,
    concat,
    coxeter_image,
    equals_oracle,
    format_artin_word,
    free_reduce,
    fuzz_rewrite,
    invert_word,
    is_colored,
    is_supported,
    member_standard_artin,
    merged_abelianization,
    parse_artin_word,
    positive_lift,
    raag_normal_form,
    restrict_word,
    support,
)

__version__ = "0.1.0"
