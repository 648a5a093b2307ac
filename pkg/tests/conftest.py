from pathlib import Path

import pytest
from hypothesis import settings, strategies as st

from dyck_syzygy import HilbertCache, Partition

GOLDEN = Path(__file__).parent / "golden"

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


@st.composite
def partitions(draw, max_size=8, max_rows=None):
    size = draw(st.integers(min_value=0, max_value=max_size))
    parts = []
    left = size
    while left:
        if max_rows is not None and len(parts) == max_rows:
            break
        cap = min(left, parts[-1]) if parts else left
        part = draw(st.integers(min_value=1, max_value=cap))
        parts.append(part)
        left -= part
    return Partition(parts)


@pytest.fixture
def cache():
    return HilbertCache()


@pytest.fixture
def golden():
    def read(name):
        return (GOLDEN / name).read_text()
    return read
