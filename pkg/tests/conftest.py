import sys
from functools import lru_cache

import pytest

from subreg.rootdata import build_root_datum
from subreg.subregular import enumerate_subregular

TYPES = (
    [("A", l) for l in range(1, 9)]
    + [("B", l) for l in range(2, 9)]
    + [("C", l) for l in range(2, 9)]
    + [("D", l) for l in range(4, 9)]
    + [("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)]
)

SMALL_TYPES = [t for t in TYPES if t[1] <= 4]


@lru_cache(maxsize=None)
def rd_of(series: str, rank: int):
    return build_root_datum(series, rank)


@lru_cache(maxsize=None)
def classes_of(series: str, rank: int):
    return tuple(enumerate_subregular(rd_of(series, rank)))


def all_classes(max_rank: int = 8):
    return [c for s, l in TYPES if l <= max_rank for c in classes_of(s, l)]


def ids(types):
    return [f"{s}{l}" for s, l in types]


@pytest.fixture(params=TYPES, ids=ids(TYPES))
def rd(request):
    return rd_of(*request.param)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
