# File: codeword.py
# Purpose: Turn representations into transmitted codewords (representation
#          bits plus a terminal 1), pick one canonical codeword per integer,
#          and decode a single codeword from the front of a bit sequence.

import logging
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Sequence

from ghcodes.errors import CodewordTooLong, IncompleteCodeword, InvalidArgument, InvalidPolicy, NotEncodable
from ghcodes.representations import Representation, enumerate_representations, zeckendorf_greedy
from ghcodes.sequences import SequenceDef, gh_prefix, require_codable, search_bound

logger = logging.getLogger("ghcodes.codeword")

NOT_AVAILABLE = "N/A"


class CanonicalPolicy(str, Enum):
    SHORTEST_THEN_LEX = "shortest"
    GREEDY_STANDARD = "greedy"


@dataclass(frozen=True)
class Codeword:
    """Bits in transmission order, index 0 first. Ends in the only "11"."""

    bits: tuple[int, ...]

    def __post_init__(self):
        if len(self.bits) < 2 or self.bits[-2:] != (1, 1):
            raise InvalidArgument(f"codeword must end with '11': {self}")
        if any(bit not in (0, 1) for bit in self.bits):
            raise InvalidArgument(f"codeword bits must be 0/1: {self.bits}")
        if any(x == y == 1 for x, y in zip(self.bits[:-2], self.bits[1:-1])):
            raise InvalidArgument(f"codeword has '11' before its end: {self}")

    @classmethod
    def from_string(cls, text: str) -> "Codeword":
        return cls(tuple(_parse_bits(text)))

    def __len__(self) -> int:
        return len(self.bits)

    def __str__(self) -> str:
        return "".join(map(str, self.bits))


def _parse_bits(text: str) -> list[int]:
    text = text.strip()
    if not text or set(text) - {"0", "1"}:
        raise InvalidArgument(f"expected a string of 0/1, got {text!r}")
    return [int(ch) for ch in text]


def rep_to_codeword(rep: Representation) -> Codeword:
    return Codeword(rep.bits + (1,))


@lru_cache(maxsize=65536)
def encode_integer(n: int, seq: SequenceDef, policy: CanonicalPolicy = CanonicalPolicy.SHORTEST_THEN_LEX,
                   max_bits: int | None = None) -> Codeword:
    policy = CanonicalPolicy(policy)
    if policy is CanonicalPolicy.GREEDY_STANDARD:
        if not seq.is_standard:
            raise InvalidPolicy(policy.value, seq)
        cw = rep_to_codeword(zeckendorf_greedy(n))
        if max_bits is not None and len(cw) > max_bits:
            raise CodewordTooLong(n, max_bits)
        return cw
    reps = enumerate_representations(n, seq, limit=1, max_bits=max_bits)
    if not reps:
        raise NotEncodable(n, seq)
    return rep_to_codeword(reps[0])


def all_codewords(n: int, seq: SequenceDef) -> list[Codeword]:
    return [rep_to_codeword(rep) for rep in enumerate_representations(n, seq)]


def decode_codeword(bits: Sequence[int] | str, seq: SequenceDef) -> tuple[int, int]:
    """
    Decodes the codeword at the front of bits: everything up to and including
    the first "11". Returns (value, consumed). The value is returned as is,
    even when it is not positive.
    """
    if isinstance(bits, str):
        bits = _parse_bits(bits)
    if len(bits) == 0:
        raise InvalidArgument("cannot decode an empty bit sequence")
    for end in range(1, len(bits)):
        if bits[end] == 1 and bits[end - 1] == 1:
            break
    else:
        raise IncompleteCodeword(0)
    terms = gh_prefix(seq, end)
    value = sum(t for t, bit in zip(terms, bits[:end]) if bit)
    return value, end + 1


def codeword_lengths(seq: SequenceDef, M: int, policy: CanonicalPolicy = CanonicalPolicy.SHORTEST_THEN_LEX,
                     max_bits: int | None = None) -> list[tuple[int, int | str]]:
    """Canonical codeword length for n = 1..M; N/A where n cannot be encoded."""
    if M < 1:
        raise InvalidArgument(f"M must be >= 1, got {M}")
    policy = CanonicalPolicy(policy)
    if policy is CanonicalPolicy.GREEDY_STANDARD and not seq.is_standard:
        raise InvalidPolicy(policy.value, seq)
    require_codable(seq, search_bound(seq, M))
    lengths = []
    for n in range(1, M + 1):
        try:
            lengths.append((n, len(encode_integer(n, seq, policy, max_bits))))
        except (NotEncodable, CodewordTooLong) as e:
            logger.debug(f"length of {n} over {seq} unavailable: {e}")
            lengths.append((n, NOT_AVAILABLE))
    return lengths


def length_inversions(lengths: list[tuple[int, int | str]]) -> list[int]:
    """Every n whose canonical codeword is longer than the one for n + 1."""
    inversions = []
    for (n, here), (_, after) in zip(lengths, lengths[1:]):
        if here != NOT_AVAILABLE and after != NOT_AVAILABLE and after < here:
            inversions.append(n)
    return inversions
