"""Linear coset coding over GF(2) as a non-malleable code against bit-wise tampering."""

from .analysis import (
    CodeProfile,
    dual_distance,
    generalized_weights,
    min_distance,
    oa_strength_holds,
    profile,
)
from .codes import (
    LinearCode,
    builtin_code,
    code_from_parity_check,
    hamming,
    load_alist,
    load_dense,
    parity,
    random_code,
    reduce_parity_check,
    repetition,
    write_alist,
    write_dense,
)
from .coset import decode, encode, encode_all
from .distributions import BOTTOM, SAME, ExactDistribution, mutual_information, statistical_distance
from .errors import (
    DEFAULT_CAP,
    BadParamsError,
    CodingError,
    EmptyCodeError,
    FormatError,
    NotErrorOnlyError,
    RedundantRowsError,
    ShapeError,
    TooLargeError,
)
from .gf2 import BitMatrix, BitVector, mat_vec, nullspace_basis, rank, solve
from .tamper import BitAction, TamperFunction, apply, enumerate_family, format_tamper, parse_tamper, structure
from .verifier import (
    NmReport,
    df_exact,
    error_only_offset,
    leakage_bits,
    sweep,
    tamper_exact,
    tamper_sampled,
    tightness_witness,
    verify_theorem,
    wiretap_leakage,
)

__version__ = "0.1.0"
