import itertools
from functools import lru_cache

import pytest

from mckayquiver import errors
from mckayquiver.coaction import validate_pair
from mckayquiver.group import group_from_text
from mckayquiver.presentation import gamma_m_presentation, parse_word

RUNNING = "a^2 = b^2; a^4 = 1; b^4 = 1; (a b)^3 = 1"
TWISTED = "a^2 = b^2; a^4 = 1; b^4 = 1; (a^3 b)^3 = 1"
ORDER_48 = "a^2 = b^2; a^16 = 1; (a^7 b)^3 = 1"

# element listing used for the printed figures, numbered 1..12
FIGURE_LISTING = ["1", "a", "a^2", "a^3", "b", "ab", "a^2b", "a^3b", "ba", "aba", "a^2ba", "a^3ba"]


@lru_cache(maxsize=None)
def group(text):
    return group_from_text(text)


@lru_cache(maxsize=None)
def pair(text):
    return validate_pair(group(text))


def gamma_text(m):
    return str(gamma_m_presentation(m))


def figure_numbering(g):
    """element index -> 1-based number in the printed listing."""
    num = {g.evaluate(parse_word(w)): k + 1 for k, w in enumerate(FIGURE_LISTING)}
    assert len(num) == 12
    return num


@pytest.fixture
def running():
    return pair(RUNNING)


@pytest.fixture
def twisted():
    return pair(TWISTED)


@pytest.fixture
def order48():
    return pair(ORDER_48)


# -- corpus of valid pairs ---------------------------------------------------

CORPUS_PRESENTATIONS = [
    RUNNING,
    TWISTED,
    ORDER_48,
    *[gamma_text(m) for m in range(2, 6)],
    # proper quotients of Gamma_m
    "a^2 = b^2; a^4 = 1; B a b = A",  # quaternion group
    "a^2 = b^2; a^8 = 1; (a b)^4 = 1; (b a)^4 = 1; a^4 = 1",
    "a^2 = b^2; a^8 = 1; (a b)^3 = 1",
    "a^2 = b^2; a^6 = 1; (a b)^3 = 1",
    "a^2 = b^2; a^12 = 1; (a b)^6 = 1; a^6 = (a b)^3",
    "a^2 = b^2; a^10 = 1; (a b)^5 = 1; (b a)^5 = 1; a^2 = (a b)^2 (b a)^3",
    "a^2 = b^2; a^8 = 1; (a^3 b)^4 = 1",
    "a^2 = b^2; a^4 = 1; (a b)^4 = 1",
]

MAX_PAIRS_PER_GROUP = 10


@lru_cache(maxsize=None)
def corpus():
    """Valid (G, a, b) pairs with |G| <= 100 drawn from the groups above.

    Besides each presentation's own generators, up to ``MAX_PAIRS_PER_GROUP``
    further generating pairs (x, y) with x^2 = y^2 are taken in index order.
    """
    pairs = []
    seen_groups = set()
    for text in CORPUS_PRESENTATIONS:
        try:
            g = group(text)
        except errors.CosetLimitExceeded:
            continue
        if g.order > 100 or g.to_json() in seen_groups:
            continue
        seen_groups.add(g.to_json())
        candidates = [(g.a, g.b)] + list(itertools.product(range(1, g.order), repeat=2))
        chosen = []
        for x, y in candidates:
            if len(chosen) > MAX_PAIRS_PER_GROUP:
                break
            if (x, y) in {(p.a, p.b) for p in chosen}:
                continue
            try:
                chosen.append(validate_pair(g, x, y))
            except errors.ValidationError:
                continue
        pairs.extend(chosen)
    return pairs


def corpus_ids():
    return [f"G{p.order}-a{p.a}-b{p.b}" for p in corpus()]


def pytest_generate_tests(metafunc):
    if "valid_pair" in metafunc.fixturenames:
        metafunc.parametrize("valid_pair", corpus(), ids=corpus_ids())
    if "small_pair" in metafunc.fixturenames:
        small = [p for p in corpus() if p.order <= 48]
        metafunc.parametrize("small_pair", small, ids=[f"G{p.order}-a{p.a}-b{p.b}" for p in small])


# -- acceptance summary --------------------------------------------------------

_acceptance = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::" in report.nodeid and report.when == "call":
        _acceptance[report.nodeid] = report.outcome
    elif "test_acceptance.py::" in report.nodeid and report.failed:
        _acceptance[report.nodeid] = "failed"


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid, outcome in sorted(_acceptance.items(), key=lambda kv: _criterion_key(kv[0])):
        name = nodeid.split("::")[-1]
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{status}  {name}")


def _criterion_key(nodeid):
    name = nodeid.split("::")[-1]
    parts = name.split("_")
    try:
        return (int(parts[2]), name)
    except (IndexError, ValueError):
        return (99, name)
