# File: cli.py
# Purpose: Command-line surface: code tables, single-value encode/decode,
#          feasibility / uniqueness / length sweeps and file compression.
#
# Exit codes: 0 success, 1 usage error, 2 data error.

import sys
import time
import logging
import argparse

import coloredlogs
import humanfriendly
from pydantic import ValidationError

from ghcodes import settings
from ghcodes.codeword import (
    NOT_AVAILABLE,
    CanonicalPolicy,
    codeword_lengths,
    decode_codeword,
    encode_integer,
    length_inversions,
    rep_to_codeword,
)
from ghcodes.config import CodecConfig, RotationSchedule
from ghcodes.container import compress, decompress, inspect_header
from ghcodes.errors import DecodedNonPositive, GHCodeError, UsageError
from ghcodes.representations import (
    enumerate_representations,
    feasibility_scan,
    feasible_parameters,
    uniqueness_profile,
)
from ghcodes.sequences import SequenceDef

logger = logging.getLogger("ghcodes.cli")

LOG_FORMAT = "%(asctime)s [%(levelname)s] %(message)s"


# === Logging Setup ===
def setup_logging(verbosity: int = 0) -> None:
    level = logging.getLevelName(settings.LOG_LEVEL)
    if not isinstance(level, int):
        level = logging.INFO
    level = min(max(level - 10 * verbosity, logging.DEBUG), logging.CRITICAL)
    coloredlogs.install(level=level, fmt=LOG_FORMAT, stream=sys.stderr)
    if settings.LOG_FILE:
        file_handler = logging.FileHandler(settings.LOG_FILE, mode="a")
        file_handler.setFormatter(logging.Formatter(LOG_FORMAT))
        logging.getLogger().addHandler(file_handler)


# === Argument parsing ===
class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _selector(text: str) -> SequenceDef:
    return SequenceDef.parse(text)


def _range(text: str) -> tuple[int, int]:
    try:
        low, high = (int(part) for part in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO:HI, got {text!r}")
    if low > high:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return low, high


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seq", "-a", dest="seq", type=str, default="std",
                        help="sequence: std, a=<int> for (a, 1-a), or a=<int>,b=<int>")
    common.add_argument("--bits", type=int, default=settings.MAX_CODEWORD_BITS,
                        help="codeword length cap (default %(default)s)")
    common.add_argument("--max-range", type=int, default=settings.MAX_RANGE,
                        help="cap on --max (default %(default)s)")
    common.add_argument("--csv", action="store_true", help="CSV output")
    common.add_argument("--workers", type=int, default=settings.WORKERS, help="processes for sweeps")
    common.add_argument("-v", "--verbose", action="count", default=0)
    common.add_argument("-q", "--quiet", action="count", default=0)

    policy = argparse.ArgumentParser(add_help=False)
    policy.add_argument("--policy", choices=[p.value for p in CanonicalPolicy], default=CanonicalPolicy.SHORTEST_THEN_LEX.value)

    parser = _Parser(prog="ghcodes", description="Fibonacci and Gopala-Hemachandra universal codes")
    commands = parser.add_subparsers(dest="command", required=True)

    table = commands.add_parser("table", parents=[common], help="all codewords for n = 1..M")
    table.add_argument("--max", type=int, default=15)
    table.add_argument("--golden", action="store_true", help="rows only, in the checked-in transcription format")

    encode = commands.add_parser("encode", parents=[common, policy], help="canonical codeword of n")
    encode.add_argument("n", type=int)

    decode = commands.add_parser("decode", parents=[common], help="decode the first codeword of a bit string")
    decode.add_argument("codeword")

    for name, text in (("scan", "integers in 1..M without a representation"),
                       ("profile", "histogram of representation counts over 1..M")):
        sweep = commands.add_parser(name, parents=[common], help=text)
        sweep.add_argument("--max", type=int, required=True)

    lengths = commands.add_parser("lengths", parents=[common, policy], help="canonical codeword lengths for 1..M")
    lengths.add_argument("--max", type=int, required=True)

    family = commands.add_parser("family", parents=[common], help="values of a whose code covers all of 1..M")
    family.add_argument("--max", type=int, required=True)
    family.add_argument("--range", type=_range, default=(-10, -1), help="candidate a values LO:HI (default -10:-1)")

    packer = commands.add_parser("compress", parents=[common, policy], help="compress a file into a GHC1 container")
    packer.add_argument("-i", "--input", help="input file (default stdin)")
    packer.add_argument("-o", "--output", help="output file (default stdout)")
    packer.add_argument("--rotate-seed", type=lambda text: int(text, 0), help="enable codebook rotation with this 64-bit key")
    packer.add_argument("--rotate-set", nargs="+", help="sequence selectors to rotate between")
    packer.add_argument("--block", type=int, default=settings.BLOCK_SIZE, help="symbols per rotation block")

    unpacker = commands.add_parser("decompress", parents=[common], help="restore a GHC1 container")
    unpacker.add_argument("-i", "--input", help="input file (default stdin)")
    unpacker.add_argument("-o", "--output", help="output file (default stdout)")
    return parser


def _check_max(args) -> int:
    if args.max < 1:
        raise UsageError(f"--max must be >= 1, got {args.max}")
    if args.max > args.max_range:
        raise UsageError(f"--max {args.max} exceeds the range cap {args.max_range} (raise it with --max-range)")
    return args.max


def _read_input(path: str | None) -> bytes:
    if path is None:
        return sys.stdin.buffer.read()
    with open(path, "rb") as f:
        return f.read()


def _write_output(path: str | None, data: bytes) -> None:
    if path is None:
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
        return
    with open(path, "wb") as f:
        f.write(data)


# === Commands ===
def cmd_table(args) -> int:
    seq = _selector(args.seq)
    M = _check_max(args)
    if not args.golden:
        print(f"# G-H code over {seq}, n = 1..{M}")
    for n in range(1, M + 1):
        reps = enumerate_representations(n, seq, max_bits=args.bits)
        cells = " or ".join(str(rep_to_codeword(rep)) for rep in reps) or NOT_AVAILABLE
        print(f"{n}: {cells}")
    return 0


def cmd_encode(args) -> int:
    seq = _selector(args.seq)
    print(encode_integer(args.n, seq, CanonicalPolicy(args.policy), args.bits))
    return 0


def cmd_decode(args) -> int:
    seq = _selector(args.seq)
    value, consumed = decode_codeword(args.codeword, seq)
    if value < 1:
        raise DecodedNonPositive(value, 0)
    print(f"{value} ({consumed} bits)")
    return 0


def cmd_scan(args) -> int:
    seq = _selector(args.seq)
    missing = feasibility_scan(seq, _check_max(args), args.workers, progress=sys.stderr.isatty())
    logger.info(f"{len(missing)} of {args.max} integers have no representation over {seq}")
    if args.csv:
        print("n")
        for n in missing:
            print(n)
    else:
        print(", ".join(map(str, missing)) if missing else "none")
    return 0


def cmd_profile(args) -> int:
    seq = _selector(args.seq)
    histogram = uniqueness_profile(seq, _check_max(args), args.workers, progress=sys.stderr.isatty())
    if args.csv:
        print("count,integers")
        for count, total in histogram.items():
            print(f"{count},{total}")
    else:
        for count, total in histogram.items():
            print(f"count={count}: {total}")
    return 0


def cmd_lengths(args) -> int:
    seq = _selector(args.seq)
    lengths = codeword_lengths(seq, _check_max(args), CanonicalPolicy(args.policy), max_bits=args.bits)
    inversions = set(length_inversions(lengths))
    if inversions:
        logger.info(f"Codeword lengths decrease after n = {', '.join(map(str, sorted(inversions)))}")
    if args.csv:
        print("n,length,inversion")
        for n, length in lengths:
            print(f"{n},{length},{int(n in inversions)}")
    else:
        for n, length in lengths:
            print(f"{n}: {length}")
    return 0


def cmd_family(args) -> int:
    M = _check_max(args)
    low, high = args.range
    feasible = feasible_parameters(M, range(low, high + 1))
    if args.csv:
        print("a")
        for a in feasible:
            print(a)
    else:
        print(", ".join(map(str, feasible)) if feasible else "none")
    return 0


def _codec_config(args) -> CodecConfig:
    seq = _selector(args.seq)
    policy = CanonicalPolicy(args.policy)
    if args.rotate_set and args.rotate_seed is None:
        raise UsageError("--rotate-set needs --rotate-seed")
    try:
        if args.rotate_seed is None:
            return CodecConfig(seq=seq, policy=policy)
        param_set = tuple(_selector(text) for text in args.rotate_set) if args.rotate_set else (seq,)
        rotation = RotationSchedule(seed=args.rotate_seed, param_set=param_set, block_size=args.block)
        return CodecConfig(seq=seq, policy=policy, rotation=rotation)
    except ValidationError as e:
        raise UsageError(f"invalid codec configuration: {e.errors()[0]['msg']}") from e


def cmd_compress(args) -> int:
    config = _codec_config(args)
    start_time = time.time()
    data = _read_input(args.input)
    packed = compress(data, config)
    _write_output(args.output, packed)
    header = inspect_header(packed)
    runtime_seconds = time.time() - start_time
    logger.info("=== Compression Summary ===")
    logger.info(f"Input: {humanfriendly.format_size(len(data))} ({len(header.symbols)} distinct bytes)")
    logger.info(f"Output: {humanfriendly.format_size(len(packed))} (header {header.size} bytes, payload {header.bit_length} bits)")
    if data:
        logger.info(f"Ratio: {len(packed) / len(data):.3f}")
    logger.info(f"Runtime: {runtime_seconds:.2f} seconds")
    return 0


def cmd_decompress(args) -> int:
    start_time = time.time()
    packed = _read_input(args.input)
    data = decompress(packed)
    _write_output(args.output, data)
    logger.info(f"Restored {humanfriendly.format_size(len(data))} from {humanfriendly.format_size(len(packed))} in {time.time() - start_time:.2f} seconds")
    return 0


COMMANDS = {
    "table": cmd_table,
    "encode": cmd_encode,
    "decode": cmd_decode,
    "scan": cmd_scan,
    "profile": cmd_profile,
    "lengths": cmd_lengths,
    "family": cmd_family,
    "compress": cmd_compress,
    "decompress": cmd_decompress,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        setup_logging(args.verbose - args.quiet)
        return COMMANDS[args.command](args)
    except GHCodeError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
