import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))


@pytest.fixture(scope="session")
def natural_corpus():
    """Deterministic bank of >= 20 natural 128x128 grayscale tiles."""
    from naturals import natural_tiles

    tiles = natural_tiles()
    assert len(tiles) >= 20, f"only {len(tiles)} qualifying natural tiles"
    return tiles


@pytest.fixture
def rng():
    return np.random.default_rng(20240811)
