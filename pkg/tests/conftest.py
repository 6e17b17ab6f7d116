from pathlib import Path

import numpy as np
import pytest

from ghcodes.sequences import SequenceDef

GOLDEN_DIR = Path(__file__).parent / "golden"

STANDARD = SequenceDef.standard()
# (a, 1-a) for the codes tabulated next to the standard one
VARIANTS = [SequenceDef.variant(a) for a in (-2, -3, -4, -5)]
# every rank 1..1000 is encodable under these
COMPLETE_DEFS = [STANDARD] + [SequenceDef.variant(a) for a in (-2, -3, -4)]


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def read_golden(name: str) -> list[str]:
    return (GOLDEN_DIR / name).read_text().splitlines()


def golden_cells(name: str) -> dict[int, list[str]]:
    """Parses a golden table into n -> list of codeword strings ([] for N/A)."""
    cells = {}
    for line in read_golden(name):
        n, text = line.split(": ", 1)
        cells[int(n)] = [] if text == "N/A" else text.split(" or ")
    return cells
