# File: errors.py
# Purpose: Exception hierarchy shared by the library and the CLI.
#          Usage errors exit with status 1, data errors with status 2.


class GHCodeError(Exception):
    exit_code = 2


# === Usage errors ===
class UsageError(GHCodeError):
    exit_code = 1


class InvalidArgument(UsageError, ValueError):
    pass


class InvalidPolicy(UsageError):
    def __init__(self, policy, seq):
        self.policy = policy
        self.seq = seq
        super().__init__(f"policy {policy} is only valid for the standard sequence, got {seq}")


class SelectorSyntaxError(UsageError):
    def __init__(self, text):
        self.text = text
        super().__init__(f"bad sequence selector {text!r} (expected 'std', 'a=<int>' or 'a=<int>,b=<int>')")


# === Sequence errors ===
class ArithmeticOverflow(GHCodeError, ArithmeticError):
    def __init__(self, seq, index, max_bits):
        self.seq = seq
        self.index = index
        self.max_bits = max_bits
        super().__init__(f"term {index} of {seq} exceeds {max_bits}-bit exact range")


class SequenceDegenerate(GHCodeError):
    def __init__(self, seq, index, term):
        self.seq = seq
        self.index = index
        self.term = term
        super().__init__(f"{seq} has non-positive term {term} at index {index}; not usable for coding")


# === Coding errors ===
class NotEncodable(GHCodeError):
    def __init__(self, n, seq):
        self.n = n
        self.seq = seq
        super().__init__(f"{n} has no representation over {seq}")


class CodewordTooLong(GHCodeError):
    def __init__(self, n, max_bits):
        self.n = n
        self.max_bits = max_bits
        super().__init__(f"no codeword for {n} fits the {max_bits}-bit cap")


class IncompleteCodeword(GHCodeError):
    def __init__(self, position):
        self.position = position
        super().__init__(f"no terminating '11' after bit {position}")


class DecodedNonPositive(GHCodeError):
    def __init__(self, value, position):
        self.value = value
        self.position = position
        super().__init__(f"codeword at bit {position} decodes to non-positive value {value}")


class TrailingGarbage(GHCodeError):
    def __init__(self, position):
        self.position = position
        super().__init__(f"nonzero bits remain after the last symbol (from bit {position})")


class CapacityExceeded(GHCodeError):
    def __init__(self, max_bits):
        self.max_bits = max_bits
        super().__init__(f"stream would exceed {max_bits} bits")


class InfeasibleParamSet(GHCodeError):
    def __init__(self, seq, n):
        self.seq = seq
        self.n = n
        super().__init__(f"{seq} cannot encode rank {n}")


# === Container errors ===
class BadMagic(GHCodeError):
    def __init__(self, magic):
        self.magic = magic
        super().__init__(f"not a GHC1 container (magic {magic!r})")


class UnsupportedVersion(GHCodeError):
    def __init__(self, version):
        self.version = version
        super().__init__(f"unsupported container version {version}")


class CorruptHeader(GHCodeError):
    pass


class RankOutOfRange(GHCodeError):
    def __init__(self, rank, table_size):
        self.rank = rank
        self.table_size = table_size
        super().__init__(f"decoded rank {rank} exceeds symbol table of {table_size}")
