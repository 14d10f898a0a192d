import pytest

from lpa_wreath.graph import parse_graph

LOOP = """\
vertex v
edge c v v
"""

TOEPLITZ = """\
vertex u
vertex v
edge c u u
edge f u v
"""

LINE = """\
vertex u
vertex v
edge e u v
"""

CYCLE = """\
vertex u
vertex v
edge a u v
edge b v u
"""

# u has a loop, then u -> v -> w with w a sink
THREE = """\
vertex u
vertex v
vertex w
edge c u u
edge f u v
edge g v w
"""


@pytest.fixture
def loop():
    return parse_graph(LOOP)


@pytest.fixture
def toeplitz():
    return parse_graph(TOEPLITZ)


@pytest.fixture
def line():
    return parse_graph(LINE)


@pytest.fixture
def cycle():
    return parse_graph(CYCLE)


@pytest.fixture
def three():
    return parse_graph(THREE)


@pytest.fixture
def sample_graphs():
    return {name: parse_graph(text) for name, text in
            [("loop", LOOP), ("line", LINE), ("toeplitz", TOEPLITZ), ("cycle", CYCLE), ("three", THREE)]}
