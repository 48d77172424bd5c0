import os
import tempfile
from pathlib import Path

import pytest

# Set test environment
os.environ["HILBERT_CR_LOG_LEVEL"] = "WARNING"
os.environ["HILBERT_CR_LOG_JSON"] = "true"

from hilbert_caratheodory.exactlin import IntMatrix  # noqa: E402
from hilbert_caratheodory.geometry import ConeH, simplicial_cone  # noqa: E402
from hilbert_caratheodory.hilbert import hilbert_basis  # noqa: E402

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture
def temp_dir():
    """Create a temporary directory for tests."""
    with tempfile.TemporaryDirectory() as tmp_dir:
        yield Path(tmp_dir)


@pytest.fixture
def fixtures_dir():
    """Directory of the shipped cone and basis files."""
    return FIXTURES


@pytest.fixture
def skew_matrix():
    """A = [[1,0],[2,3]]: Δ = 3 and no non-zero lattice point in P_1(A)."""
    return IntMatrix(((1, 0), (2, 3)))


@pytest.fixture
def skew_cone(skew_matrix):
    return ConeH(skew_matrix)


@pytest.fixture
def skew_basis(skew_cone):
    return hilbert_basis(skew_cone)


@pytest.fixture
def quadrant():
    """The non-negative quadrant."""
    return ConeH(IntMatrix.identity(2))


@pytest.fixture
def quadrant_basis(quadrant):
    return hilbert_basis(quadrant)


@pytest.fixture
def delta2_matrix():
    """A = [[1,0],[1,2]] with Δ = 2."""
    return IntMatrix(((1, 0), (1, 2)))


@pytest.fixture
def wedge():
    """pos{(1,0),(1,2)} with Hilbert basis (1,0), (1,1), (1,2)."""
    return simplicial_cone([(1, 0), (1, 2)])


@pytest.fixture
def wedge_basis(wedge):
    return hilbert_basis(wedge)
