"""Shared fixtures: the three reference instances, loaded from the shipped files.

F1: the 4-point algebra {∅, {1,2}, {3,4}, Ω} with m({1,2}) = m({3,4}) = 1.
    No singleton is measurable; every class rejects {1}.
F2: the 3-point algebra generated by {1} with atom weights {1}→1, {2,3}→0.
    The null atom makes every subset measurable; the extension is unique.
F3: {∅, Ω} over 2 points with m(Ω) = inf.  Everything is locally
    approximable but only ∅ and Ω are globally approximable, and the
    extension is not unique.
"""

from pathlib import Path

import pytest

from measurext import PreMeasure
from measurext.instancefile import InstanceFile

REPO = Path(__file__).resolve().parent.parent
FIXTURES = REPO / "fixtures"


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture(scope="session")
def f1_doc() -> InstanceFile:
    return InstanceFile.load(FIXTURES / "f1.json")


@pytest.fixture(scope="session")
def f2_doc() -> InstanceFile:
    return InstanceFile.load(FIXTURES / "f2.json")


@pytest.fixture(scope="session")
def f3_doc() -> InstanceFile:
    return InstanceFile.load(FIXTURES / "f3.json")


@pytest.fixture(scope="session")
def f1(f1_doc) -> PreMeasure:
    return f1_doc.build()


@pytest.fixture(scope="session")
def f2(f2_doc) -> PreMeasure:
    return f2_doc.build()


@pytest.fixture(scope="session")
def f3(f3_doc) -> PreMeasure:
    return f3_doc.build()
