# File: representations.py
# Purpose: Zeckendorf representations over the standard sequence (greedy) and
#          exhaustive enumeration of nonconsecutive representations over any
#          codable G-H sequence, plus feasibility / uniqueness sweeps.

import logging
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from multiprocessing import Pool
from typing import Iterable, Iterator

from tqdm import tqdm

from ghcodes import settings
from ghcodes.errors import CodewordTooLong, InvalidArgument, SequenceDegenerate
from ghcodes.sequences import SequenceDef, gh_prefix, require_codable, search_bound

logger = logging.getLogger("ghcodes.representations")


@dataclass(frozen=True)
class Representation:
    """Bit i selects sequence term i; the top bit is set and no two set bits touch."""

    bits: tuple[int, ...]

    def __post_init__(self):
        if not self.bits or self.bits[-1] != 1:
            raise InvalidArgument(f"representation must end with a set bit: {self.bits}")
        if any(bit not in (0, 1) for bit in self.bits):
            raise InvalidArgument(f"representation bits must be 0/1: {self.bits}")
        if any(x == y == 1 for x, y in zip(self.bits, self.bits[1:])):
            raise InvalidArgument(f"representation has consecutive ones: {self.bits}")

    @classmethod
    def from_indices(cls, indices: Iterable[int]) -> "Representation":
        indices = sorted(set(indices))
        if not indices:
            raise InvalidArgument("representation needs at least one index")
        bits = [0] * (indices[-1] + 1)
        for i in indices:
            bits[i] = 1
        return cls(tuple(bits))

    @property
    def top_index(self) -> int:
        return len(self.bits) - 1

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(i for i, bit in enumerate(self.bits) if bit)

    def value(self, seq: SequenceDef) -> int:
        terms = gh_prefix(seq, len(self.bits))
        return sum(t for t, bit in zip(terms, self.bits) if bit)

    def __str__(self) -> str:
        return "".join(map(str, self.bits))


# === Standard sequence ===
def zeckendorf_greedy(n: int) -> Representation:
    if n < 1:
        raise InvalidArgument(f"n must be >= 1, got {n}")
    terms = [1, 2]
    while terms[-1] <= n:
        terms.append(terms[-1] + terms[-2])
    chosen = []
    remaining = n
    for i in range(len(terms) - 1, -1, -1):
        if terms[i] <= remaining:
            chosen.append(i)
            remaining -= terms[i]
            if remaining == 0:
                break
    return Representation.from_indices(chosen)


# === Enumeration ===
def _reachable(terms: list[int]) -> list[int]:
    # best[m]: largest sum of nonconsecutive positive terms among indices 0..m
    best = []
    for m, t in enumerate(terms):
        take = max(t, 0) + (best[m - 2] if m >= 2 else 0)
        skip = best[m - 1] if m >= 1 else 0
        best.append(max(take, skip))
    return best


def _search(remaining: int, hi: int, terms: list[int], best: list[int], low: int) -> Iterator[list[int]]:
    # explicit stack: the top index can run into the thousands
    stack = [(remaining, hi, ())]
    while stack:
        remaining, hi, chosen = stack.pop()
        if hi < 0:
            if remaining == 0:
                yield list(chosen)
            continue
        if remaining > best[hi] or remaining < low:
            continue
        stack.append((remaining, hi - 1, chosen))
        stack.append((remaining - terms[hi], hi - 2, (hi,) + chosen))


@lru_cache(maxsize=65536)
def _representations(n: int, seq: SequenceDef, tops: int) -> tuple[Representation, ...]:
    bound = search_bound(seq, n)
    terms = gh_prefix(seq, bound)
    best = _reachable(terms)
    low = min(0, terms[0])
    found = []
    for top in range(min(bound, tops)):
        for rest in _search(n - terms[top], top - 2, terms, best, low):
            found.append(Representation.from_indices(rest + [top]))
    found.sort(key=lambda rep: (rep.top_index, rep.bits))
    return tuple(found)


def _require_codable(seq: SequenceDef, n: int) -> None:
    require_codable(seq, search_bound(seq, n))


def enumerate_representations(n: int, seq: SequenceDef, limit: int | None = None,
                              max_bits: int | None = None) -> list[Representation]:
    """
    All nonconsecutive representations of n over seq with top index below
    search_bound(seq, n), shortest first, ties broken by the bits read from
    index 0. With max_bits only representations whose codeword fits are
    searched; CodewordTooLong means none fit but longer ones may exist.
    """
    if n < 1:
        raise InvalidArgument(f"n must be >= 1, got {n}")
    _require_codable(seq, n)
    bound = search_bound(seq, n)
    tops = bound if max_bits is None else max(0, min(bound, max_bits - 1))
    reps = list(_representations(n, seq, tops))
    if not reps and tops < bound:
        raise CodewordTooLong(n, max_bits)
    return reps if limit is None else reps[:limit]


def representation_count(n: int, seq: SequenceDef) -> int:
    return len(enumerate_representations(n, seq))


# === Sweeps ===
def _count_chunk(args: tuple[SequenceDef, int, int]) -> tuple[int, list[int]]:
    seq, start, stop = args
    return start, [representation_count(n, seq) for n in range(start, stop)]


def representation_counts(seq: SequenceDef, M: int, workers: int | None = None,
                          progress: bool = False) -> list[int]:
    """Counts for n = 1..M, in order. Chunks go to a process pool when workers > 1."""
    if M < 1:
        raise InvalidArgument(f"M must be >= 1, got {M}")
    _require_codable(seq, M)
    workers = workers or settings.WORKERS
    chunk = max(1, settings.SWEEP_CHUNK)
    tasks = [(seq, start, min(start + chunk, M + 1)) for start in range(1, M + 1, chunk)]
    counts = [0] * M
    with tqdm(total=M, disable=not progress, desc=f"sweep {seq}", unit="n") as bar:
        if workers > 1 and len(tasks) > 1:
            logger.info(f"Sweeping 1..{M} over {seq} with {workers} workers ({len(tasks)} chunks)")
            with Pool(processes=workers) as pool:
                for start, part in pool.imap_unordered(_count_chunk, tasks):
                    counts[start - 1:start - 1 + len(part)] = part
                    bar.update(len(part))
        else:
            for task in tasks:
                start, part = _count_chunk(task)
                counts[start - 1:start - 1 + len(part)] = part
                bar.update(len(part))
    return counts


def feasibility_scan(seq: SequenceDef, M: int, workers: int | None = None, progress: bool = False) -> list[int]:
    counts = representation_counts(seq, M, workers, progress)
    return [n for n, count in enumerate(counts, start=1) if count == 0]


def uniqueness_profile(seq: SequenceDef, M: int, workers: int | None = None, progress: bool = False) -> dict[int, int]:
    histogram = Counter(representation_counts(seq, M, workers, progress))
    return dict(sorted(histogram.items()))


def max_encodable_prefix(seq: SequenceDef, limit: int) -> int:
    """Largest M <= limit such that every n in 1..M has a representation."""
    for n in range(1, limit + 1):
        if representation_count(n, seq) == 0:
            return n - 1
    return limit


def feasible_parameters(M: int, a_values: Iterable[int]) -> list[int]:
    """Values of a whose variant sequence (a, 1-a) is codable and encodes all of 1..M."""
    feasible = []
    for a in sorted(set(a_values)):
        seq = SequenceDef.variant(a)
        try:
            if max_encodable_prefix(seq, M) == M:
                feasible.append(a)
        except SequenceDegenerate:
            logger.debug(f"Skipping a={a}: sequence {seq} is not codable")
    return feasible
