# File: config.py
# Purpose: Validated codec configuration (fixed sequence or rotating codebook).

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ghcodes import settings
from ghcodes.codeword import CanonicalPolicy
from ghcodes.errors import SequenceDegenerate
from ghcodes.sequences import SequenceDef, require_codable

INT16_MIN, INT16_MAX = -(1 << 15), (1 << 15) - 1
UINT64_MAX = (1 << 64) - 1
UINT32_MAX = (1 << 32) - 1


def _check_def(seq: SequenceDef) -> SequenceDef:
    if not (INT16_MIN <= seq.a <= INT16_MAX and INT16_MIN <= seq.b <= INT16_MAX):
        raise ValueError(f"sequence {seq} does not fit signed 16-bit parameters")
    try:
        require_codable(seq)
    except SequenceDegenerate as e:
        raise ValueError(str(e)) from e
    return seq


class RotationSchedule(BaseModel):
    """Block-wise codebook rotation: block i uses param_set[mix(seed, i) % len]."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    seed: int = Field(ge=0, le=UINT64_MAX)
    param_set: tuple[SequenceDef, ...] = Field(min_length=1, max_length=255)
    block_size: int = Field(default_factory=lambda: settings.BLOCK_SIZE, ge=1, le=UINT32_MAX)

    @field_validator("param_set")
    @classmethod
    def _codable(cls, param_set):
        return tuple(_check_def(seq) for seq in param_set)


class CodecConfig(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    seq: SequenceDef = Field(default_factory=SequenceDef.standard)
    policy: CanonicalPolicy = CanonicalPolicy.SHORTEST_THEN_LEX
    rotation: RotationSchedule | None = None
    max_stream_bits: int | None = Field(default=None, ge=0)
    max_codeword_bits: int | None = Field(default=None, ge=2)

    @field_validator("seq")
    @classmethod
    def _codable(cls, seq):
        return _check_def(seq)

    @model_validator(mode="after")
    def _policy_fits(self):
        defs = self.rotation.param_set if self.rotation else (self.seq,)
        if self.policy is CanonicalPolicy.GREEDY_STANDARD and not all(seq.is_standard for seq in defs):
            raise ValueError("greedy policy requires the standard sequence")
        return self

    @property
    def rotating(self) -> bool:
        return self.rotation is not None

    def defs(self) -> tuple[SequenceDef, ...]:
        return self.rotation.param_set if self.rotation else (self.seq,)
