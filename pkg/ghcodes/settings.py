# File: settings.py
# Purpose: Process-wide defaults, read once from the environment / .env file.

import os
import logging
from dotenv import load_dotenv

logger = logging.getLogger("ghcodes.settings")

# === Load environment ===
load_dotenv()


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw.replace("_", ""))
    except ValueError:
        logger.warning(f"Ignoring {name}={raw!r}: not an integer, using {default}")
        return default


# === Analysis caps ===
MAX_RANGE = _env_int("GHC_MAX_RANGE", 1_000_000)
MAX_CODEWORD_BITS = _env_int("GHC_MAX_CODEWORD_BITS", 128)
MAX_TERM_BITS = _env_int("GHC_MAX_TERM_BITS", 4096)

# === Rotation ===
BLOCK_SIZE = _env_int("GHC_BLOCK_SIZE", 4096)

# === Sweeps ===
WORKERS = _env_int("GHC_WORKERS", 1)
SWEEP_CHUNK = _env_int("GHC_SWEEP_CHUNK", 2000)

# === Logging ===
LOG_LEVEL = os.getenv("GHC_LOG_LEVEL", "INFO").upper()
LOG_FILE = os.getenv("GHC_LOG_FILE") or None
