from __future__ import annotations

from functools import lru_cache
from pathlib import Path

import pytest

from pdng.g6 import read_graphs
from pdng.graph import Graph

DATA = Path(__file__).parent / "data"
REPO_DATA = Path(__file__).parent.parent / "data"


@lru_cache(maxsize=None)
def catalog(n: int) -> tuple[Graph, ...]:
    """All graphs of order n from the reference catalogs generated by nauty's geng."""
    return tuple(read_graphs(DATA / f"geng{n}.g6"))


@pytest.fixture(scope="session")
def small_graphs() -> list[Graph]:
    return [g for n in range(1, 8) for g in catalog(n)]
