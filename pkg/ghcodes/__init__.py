# Fibonacci and Gopala-Hemachandra universal codes.

from ghcodes.sequences import SequenceDef, gh_prefix, gh_term, search_bound, validate_sequence
from ghcodes.representations import (
    Representation,
    enumerate_representations,
    feasibility_scan,
    feasible_parameters,
    max_encodable_prefix,
    representation_count,
    uniqueness_profile,
    zeckendorf_greedy,
)
from ghcodes.codeword import (
    CanonicalPolicy,
    Codeword,
    all_codewords,
    codeword_lengths,
    decode_codeword,
    encode_integer,
    length_inversions,
    rep_to_codeword,
)
from ghcodes.config import CodecConfig, RotationSchedule
from ghcodes.stream import BitBuffer, decode_stream, encode_stream, schedule_def, write_codeword
from ghcodes.container import build_rank_map, compress, decompress, inspect_header
