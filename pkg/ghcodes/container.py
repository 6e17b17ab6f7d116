# File: container.py
# Purpose: Byte-oriented file compression. Bytes are rank-mapped by frequency,
#          the ranks are G-H coded, and the result is stored as a GHC1
#          container (all header fields little-endian):
#
#   magic "GHC1" | version u8 | mode u8 (0 fixed, 1 rotating)
#   fixed:    a i16 | b i16
#   rotating: seed u64 | set length u8 | (a i16, b i16) * length | block_size u32
#   symbol table: count u16 | symbols in rank order (1 byte each)
#   symbol count u64 | bit length u64 | packed bits

import struct
import logging
from collections import Counter
from dataclasses import dataclass

import numpy as np
from pydantic import ValidationError

from ghcodes.config import CodecConfig, RotationSchedule
from ghcodes.errors import BadMagic, CorruptHeader, RankOutOfRange, UnsupportedVersion
from ghcodes.sequences import SequenceDef
from ghcodes.stream import BitBuffer, check_feasible, decode_stream, encode_stream

logger = logging.getLogger("ghcodes.container")

MAGIC = b"GHC1"
VERSION = 1
MODE_FIXED = 0
MODE_ROTATING = 1

_PREAMBLE = struct.Struct("<4sBB")
_PAIR = struct.Struct("<hh")
_ROTATION = struct.Struct("<QB")
_BLOCK = struct.Struct("<I")
_TABLE = struct.Struct("<H")
_COUNTS = struct.Struct("<QQ")


@dataclass(frozen=True)
class RankMap:
    rank_of: dict[int, int]
    symbol_of: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.symbol_of)


@dataclass(frozen=True)
class ContainerHeader:
    mode: int
    seq: SequenceDef | None
    rotation: RotationSchedule | None
    symbols: bytes
    symbol_count: int
    bit_length: int
    version: int = VERSION
    size: int = 0

    def codec_config(self) -> CodecConfig:
        if self.mode == MODE_ROTATING:
            return CodecConfig(rotation=self.rotation)
        return CodecConfig(seq=self.seq)


def build_rank_map(data: bytes) -> RankMap:
    """Rank 1 is the most frequent byte; ties go to the smaller byte value."""
    counts = Counter(data)
    ordered = sorted(counts.items(), key=lambda item: (-item[1], item[0]))
    symbol_of = tuple(symbol for symbol, _ in ordered)
    return RankMap({symbol: rank for rank, symbol in enumerate(symbol_of, start=1)}, symbol_of)


# === Header codec ===
def pack_header(header: ContainerHeader) -> bytes:
    out = bytearray(_PREAMBLE.pack(MAGIC, header.version, header.mode))
    if header.mode == MODE_ROTATING:
        rotation = header.rotation
        out += _ROTATION.pack(rotation.seed, len(rotation.param_set))
        for seq in rotation.param_set:
            out += _PAIR.pack(seq.a, seq.b)
        out += _BLOCK.pack(rotation.block_size)
    else:
        out += _PAIR.pack(header.seq.a, header.seq.b)
    out += _TABLE.pack(len(header.symbols)) + header.symbols
    out += _COUNTS.pack(header.symbol_count, header.bit_length)
    return bytes(out)


class _Reader:
    def __init__(self, data: bytes):
        self.data = data
        self.offset = 0

    def take(self, fmt: struct.Struct, what: str) -> tuple:
        if self.offset + fmt.size > len(self.data):
            raise CorruptHeader(f"container truncated while reading {what} at byte {self.offset}")
        values = fmt.unpack_from(self.data, self.offset)
        self.offset += fmt.size
        return values

    def take_bytes(self, count: int, what: str) -> bytes:
        if self.offset + count > len(self.data):
            raise CorruptHeader(f"container truncated while reading {what} at byte {self.offset}")
        chunk = self.data[self.offset:self.offset + count]
        self.offset += count
        return bytes(chunk)


def parse_header(container: bytes) -> ContainerHeader:
    if container[:4] != MAGIC:
        raise BadMagic(bytes(container[:4]))
    reader = _Reader(container)
    _, version, mode = reader.take(_PREAMBLE, "preamble")
    if version != VERSION:
        raise UnsupportedVersion(version)
    seq, rotation = None, None
    try:
        if mode == MODE_FIXED:
            seq = SequenceDef(*reader.take(_PAIR, "sequence parameters"))
            CodecConfig(seq=seq)
        elif mode == MODE_ROTATING:
            seed, set_length = reader.take(_ROTATION, "rotation parameters")
            param_set = tuple(SequenceDef(*reader.take(_PAIR, "rotation set")) for _ in range(set_length))
            (block_size,) = reader.take(_BLOCK, "block size")
            rotation = RotationSchedule(seed=seed, param_set=param_set, block_size=block_size)
        else:
            raise CorruptHeader(f"unknown mode {mode}")
    except ValidationError as e:
        raise CorruptHeader(f"invalid coding parameters: {e.errors()[0]['msg']}") from e
    (table_size,) = reader.take(_TABLE, "symbol table size")
    if table_size > 256:
        raise CorruptHeader(f"symbol table of {table_size} entries")
    symbols = reader.take_bytes(table_size, "symbol table")
    if len(set(symbols)) != len(symbols):
        raise CorruptHeader("symbol table repeats a byte value")
    symbol_count, bit_length = reader.take(_COUNTS, "payload counts")
    return ContainerHeader(mode, seq, rotation, symbols, symbol_count, bit_length, version, reader.offset)


def inspect_header(container: bytes) -> ContainerHeader:
    return parse_header(container)


# === Compression ===
def compress(data: bytes, config: CodecConfig | None = None) -> bytes:
    config = config or CodecConfig()
    rank_map = build_rank_map(data)
    check_feasible(range(1, len(rank_map) + 1), config)
    lookup = np.zeros(256, dtype=np.int64)
    lookup[list(rank_map.symbol_of)] = np.arange(1, len(rank_map) + 1)
    ranks = lookup[np.frombuffer(data, dtype=np.uint8)].tolist()
    buf = encode_stream(ranks, config)
    header = ContainerHeader(
        mode=MODE_ROTATING if config.rotating else MODE_FIXED,
        seq=None if config.rotating else config.seq,
        rotation=config.rotation,
        symbols=bytes(rank_map.symbol_of),
        symbol_count=len(data),
        bit_length=buf.bit_length,
    )
    logger.debug(f"Compressed {len(data)} bytes ({len(rank_map)} symbols) into {buf.bit_length} bits")
    return pack_header(header) + buf.payload


def decompress(container: bytes) -> bytes:
    header = parse_header(container)
    payload = container[header.size:]
    expected = -(-header.bit_length // 8)
    if len(payload) > expected:
        raise CorruptHeader(f"{len(payload) - expected} bytes beyond the declared {header.bit_length} bits")
    # a short payload decodes as far as it goes and fails on the cut codeword
    bit_length = min(header.bit_length, 8 * len(payload))
    buf = BitBuffer.from_bytes(bytes(payload), bit_length)
    ranks = decode_stream(buf, header.symbol_count, header.codec_config())
    if not ranks:
        return b""
    top = max(ranks)
    if top > len(header.symbols):
        raise RankOutOfRange(top, len(header.symbols))
    table = np.frombuffer(header.symbols, dtype=np.uint8)
    return table[np.asarray(ranks, dtype=np.int64) - 1].tobytes()
