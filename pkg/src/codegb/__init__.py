"""Groebner bases of binary linear codes.

Reduced degrevlex bases of the binomial ideal of a code, computed by an
adapted FGLM enumeration, with syndrome decoding, minimum-weight codewords,
codeword decomposition and minimal cycle bases of graphs on top.
"""

from .code import (
    BinaryCode,
    BinaryMatrix,
    ResourceLimitError,
    kernel_basis,
    oracle_coset_leaders,
    oracle_decode,
    oracle_min_distance,
    rref,
    syndrome,
    weight,
)
from .cycles import (
    CycleBasis,
    Graph,
    cycle_space_code,
    fundamental_cycle_basis,
    incidence_check_matrix,
    minimal_cycle_basis,
    minimal_cycles,
    oracle_minimal_basis_length,
    precedes,
)
from .groebner import (
    Binomial,
    DecodeResult,
    GroebnerBasis,
    binomial_codeword,
    canonical_form,
    compute_gb,
    decode,
    decompose,
    error_capability,
    error_capability_early,
    ideal_generators,
    min_weight_codewords,
    one_step_reduce,
    reduce_codeword_step,
    verify_reduced_gb,
)
from .term import (
    Word,
    degrevlex_cmp,
    divides,
    format_word,
    mul,
    parse_word,
    psi,
    psi_inverse,
    quotient,
    standard_form,
    support,
    total_degree,
)

__version__ = "0.1.0"
