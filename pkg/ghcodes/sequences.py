# File: sequences.py
# Purpose: Gopala-Hemachandra sequences a, b, a+b, a+2b, ... including the
#          standard Fibonacci sequence (1, 2) and the variant family (a, 1-a).

import re
import logging
from dataclasses import dataclass
from functools import lru_cache

from ghcodes import settings
from ghcodes.errors import ArithmeticOverflow, InvalidArgument, SelectorSyntaxError, SequenceDegenerate

logger = logging.getLogger("ghcodes.sequences")

_SELECTOR_VARIANT = re.compile(r"^(?:a=)?(-?\d+)$")
_SELECTOR_GENERAL = re.compile(r"^a=(-?\d+),\s*b=(-?\d+)$")


@dataclass(frozen=True)
class SequenceDef:
    a: int
    b: int

    @classmethod
    def standard(cls) -> "SequenceDef":
        return cls(1, 2)

    @classmethod
    def variant(cls, a: int) -> "SequenceDef":
        return cls(a, 1 - a)

    @classmethod
    def parse(cls, text: str) -> "SequenceDef":
        """
        Parses a sequence selector: "std", "a=<int>" (meaning (a, 1-a)) or
        "a=<int>,b=<int>". A bare integer is accepted as shorthand for "a=<int>".
        """
        text = text.strip()
        if text.lower() == "std":
            return cls.standard()
        match = _SELECTOR_GENERAL.match(text)
        if match:
            return cls(int(match.group(1)), int(match.group(2)))
        match = _SELECTOR_VARIANT.match(text)
        if match:
            return cls.variant(int(match.group(1)))
        raise SelectorSyntaxError(text)

    @property
    def is_standard(self) -> bool:
        return (self.a, self.b) == (1, 2)

    def selector(self) -> str:
        if self.is_standard:
            return "std"
        if self.b == 1 - self.a:
            return f"a={self.a}"
        return f"a={self.a},b={self.b}"

    def __str__(self) -> str:
        return f"({self.a}, {self.b})"


@dataclass(frozen=True)
class ValidationReport:
    seq: SequenceDef
    max_index: int
    zero_indices: tuple[int, ...]
    negative_indices: tuple[int, ...]
    increasing_from: int

    @property
    def valid_for_coding(self) -> bool:
        return not self.zero_indices and not self.negative_indices

    def first_problem(self) -> int | None:
        bad = sorted(self.zero_indices + self.negative_indices)
        return bad[0] if bad else None


def _check_range(seq: SequenceDef, index: int, term: int, max_bits: int) -> int:
    if abs(term).bit_length() > max_bits:
        raise ArithmeticOverflow(seq, index, max_bits)
    return term


@lru_cache(maxsize=256)
def _prefix(seq: SequenceDef, count: int, max_bits: int) -> tuple[int, ...]:
    terms = [_check_range(seq, 0, seq.a, max_bits)]
    if count > 1:
        terms.append(_check_range(seq, 1, seq.b, max_bits))
    for k in range(2, count):
        terms.append(_check_range(seq, k, terms[k - 1] + terms[k - 2], max_bits))
    return tuple(terms[:count])


def gh_term(seq: SequenceDef, k: int, max_bits: int | None = None) -> int:
    if k < 0:
        raise InvalidArgument(f"term index must be >= 0, got {k}")
    return _prefix(seq, k + 1, max_bits or settings.MAX_TERM_BITS)[k]


def gh_prefix(seq: SequenceDef, count: int, max_bits: int | None = None) -> list[int]:
    if count < 1:
        raise InvalidArgument(f"count must be >= 1, got {count}")
    return list(_prefix(seq, count, max_bits or settings.MAX_TERM_BITS))


def search_bound(seq: SequenceDef, n: int, max_bits: int | None = None) -> int:
    """
    Smallest index D >= 2 with term(D) > n + max(0, -a). Every representation
    of n has its top index below D, provided index 0 is the only term that
    may be negative.
    """
    if n < 1:
        raise InvalidArgument(f"n must be >= 1, got {n}")
    max_bits = max_bits or settings.MAX_TERM_BITS
    target = n + max(0, -seq.a)
    if seq.a == 0:
        raise SequenceDegenerate(seq, 0, 0)
    prev, cur = seq.a, _check_range(seq, 1, seq.b, max_bits)
    index = 1
    while True:
        if cur <= 0:
            raise SequenceDegenerate(seq, index, cur)
        if index >= 2 and cur > target:
            return index
        prev, cur = cur, _check_range(seq, index + 1, prev + cur, max_bits)
        index += 1


def validate_sequence(seq: SequenceDef, max_index: int) -> ValidationReport:
    if max_index < 1:
        raise InvalidArgument(f"max_index must be >= 1, got {max_index}")
    terms = gh_prefix(seq, max_index + 1)
    zeros = tuple(i for i, t in enumerate(terms) if t == 0)
    negatives = tuple(i for i, t in enumerate(terms) if i >= 1 and t < 0)
    onset = max_index
    while onset > 0 and terms[onset - 1] < terms[onset]:
        onset -= 1
    return ValidationReport(seq, max_index, zeros, negatives, onset)


def require_codable(seq: SequenceDef, max_index: int = 32) -> SequenceDef:
    """Raises SequenceDegenerate unless seq is usable for coding up to max_index."""
    report = validate_sequence(seq, max_index)
    bad = report.first_problem()
    if bad is not None:
        raise SequenceDegenerate(seq, bad, gh_term(seq, bad))
    return seq
