# File: stream.py
# Purpose: Pack codewords into MSB-first bit buffers, decode them back by
#          terminator scanning, and rotate the codebook block by block.

import logging
from typing import Iterable, Sequence

import numpy as np

from ghcodes.codeword import Codeword, encode_integer
from ghcodes.config import CodecConfig, RotationSchedule
from ghcodes.errors import (
    CapacityExceeded,
    DecodedNonPositive,
    IncompleteCodeword,
    InfeasibleParamSet,
    InvalidArgument,
    NotEncodable,
    TrailingGarbage,
)
from ghcodes.sequences import SequenceDef, gh_prefix

logger = logging.getLogger("ghcodes.stream")

# === splitmix64 constants ===
MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15
MIX_1 = 0xBF58476D1CE4E5B9
MIX_2 = 0x94D049BB133111EB


class BitBuffer:
    """
    Growable bit sequence. payload packs the bits most-significant-bit first
    within each byte and zero-pads the final byte.
    """

    def __init__(self, max_bits: int | None = None):
        self._bits = bytearray()  # one 0/1 per entry
        self.max_bits = max_bits

    @classmethod
    def from_bytes(cls, payload: bytes, bit_length: int) -> "BitBuffer":
        if bit_length < 0 or bit_length > 8 * len(payload):
            raise InvalidArgument(f"bit length {bit_length} does not fit {len(payload)} payload bytes")
        unpacked = np.unpackbits(np.frombuffer(payload, dtype=np.uint8))
        if unpacked[bit_length:].any():
            raise TrailingGarbage(bit_length + int(np.flatnonzero(unpacked[bit_length:])[0]))
        buf = cls()
        buf._bits = bytearray(unpacked[:bit_length].tobytes())
        return buf

    @property
    def bit_length(self) -> int:
        return len(self._bits)

    @property
    def payload(self) -> bytes:
        if not self._bits:
            return b""
        return np.packbits(np.frombuffer(bytes(self._bits), dtype=np.uint8)).tobytes()

    def bits(self) -> np.ndarray:
        return np.frombuffer(bytes(self._bits), dtype=np.uint8)

    def write(self, bits: Sequence[int]) -> "BitBuffer":
        if self.max_bits is not None and len(self._bits) + len(bits) > self.max_bits:
            raise CapacityExceeded(self.max_bits)
        self._bits.extend(bits)
        return self

    def __str__(self) -> str:
        return "".join("1" if bit else "0" for bit in self._bits)


def write_codeword(buf: BitBuffer, cw: Codeword) -> BitBuffer:
    return buf.write(cw.bits)


# === Codebook rotation ===
def splitmix64_mix(z: int) -> int:
    z = ((z ^ (z >> 30)) * MIX_1) & MASK64
    z = ((z ^ (z >> 27)) * MIX_2) & MASK64
    return z ^ (z >> 31)


def block_key(seed: int, block_index: int) -> int:
    """Output number block_index (0-based) of a splitmix64 generator seeded with seed."""
    return splitmix64_mix((seed + (block_index + 1) * GOLDEN_GAMMA) & MASK64)


def schedule_def(schedule: RotationSchedule, block_index: int) -> SequenceDef:
    return schedule.param_set[block_key(schedule.seed, block_index) % len(schedule.param_set)]


def schedule_defs(schedule: RotationSchedule, count: int) -> list[SequenceDef]:
    """The sequence used for each symbol position 0..count-1."""
    blocks = -(-count // schedule.block_size)
    per_block = [schedule_def(schedule, i) for i in range(blocks)]
    return [per_block[i // schedule.block_size] for i in range(count)]


def _blocks(count: int, config: CodecConfig) -> Iterable[tuple[SequenceDef, int, int]]:
    if not config.rotating:
        yield config.seq, 0, count
        return
    size = config.rotation.block_size
    for block, start in enumerate(range(0, count, size)):
        yield schedule_def(config.rotation, block), start, min(start + size, count)


# === Encode / decode ===
def check_feasible(values: Iterable[int], config: CodecConfig) -> None:
    """Raises InfeasibleParamSet unless every def in use can encode every value."""
    distinct = sorted(set(values))
    for seq in config.defs():
        for n in distinct:
            try:
                encode_integer(n, seq, config.policy)
            except NotEncodable:
                raise InfeasibleParamSet(seq, n)


def encode_stream(values: Sequence[int], config: CodecConfig) -> BitBuffer:
    buf = BitBuffer(max_bits=config.max_stream_bits)
    if not len(values):
        return buf
    low = min(values)
    if low < 1:
        raise InvalidArgument(f"stream values must be >= 1, got {low}")
    if config.rotating:
        check_feasible(values, config)
    codes: dict[tuple[SequenceDef, int], tuple[int, ...]] = {}
    for seq, start, stop in _blocks(len(values), config):
        for n in values[start:stop]:
            key = (seq, int(n))
            if key not in codes:
                codes[key] = encode_integer(key[1], seq, config.policy, config.max_codeword_bits).bits
            buf.write(codes[key])
    logger.debug(f"Encoded {len(values)} symbols into {buf.bit_length} bits")
    return buf


def decode_stream(buf: BitBuffer, count: int, config: CodecConfig) -> list[int]:
    bits = buf.bits()
    # p is listed when bits p and p+1 are both set
    pairs = np.flatnonzero(bits[:-1] & bits[1:]) if len(bits) > 1 else np.empty(0, dtype=np.intp)
    terms: dict[SequenceDef, list[int]] = {}
    values = []
    pos = 0
    for seq, start, stop in _blocks(count, config):
        for _ in range(start, stop):
            j = int(np.searchsorted(pairs, pos))
            if j == len(pairs):
                raise IncompleteCodeword(pos)
            end = int(pairs[j])
            size = end + 1 - pos
            if len(terms.get(seq, ())) < size:
                terms[seq] = gh_prefix(seq, max(2 * size, 32))
            table = terms[seq]
            value = sum(table[k] for k in np.flatnonzero(bits[pos:end + 1]))
            if value < 1:
                raise DecodedNonPositive(value, pos)
            values.append(value)
            pos = end + 2
    if bits[pos:].any():
        raise TrailingGarbage(pos)
    return values
