import json
from pathlib import Path

import pytest
from hypothesis import strategies as st

from inktok import IntegerInk, RawInk

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def data_dir() -> Path:
    return DATA


@pytest.fixture(scope="session")
def reference_ink() -> IntegerInk:
    doc = json.loads((DATA / "reference_ink.json").read_text())
    return IntegerInk(doc["strokes"])


@pytest.fixture(scope="session")
def corpus_dir() -> Path:
    return DATA / "corpus"


@pytest.fixture(scope="session")
def corpus_inks(corpus_dir) -> list[RawInk]:
    out = []
    for p in sorted(corpus_dir.glob("*.json")):
        out.append(RawInk(json.loads(p.read_text())["strokes"]))
    return out


# -- hypothesis strategies ---------------------------------------------------

coords = st.integers(min_value=-120, max_value=120)
points = st.tuples(coords, coords)


def strokes_strategy(min_points=1, min_strokes=1, max_strokes=5, max_points=12):
    stroke = st.lists(points, min_size=min_points, max_size=max_points)
    return st.lists(stroke, min_size=min_strokes, max_size=max_strokes)


integer_inks = strokes_strategy().map(IntegerInk)
