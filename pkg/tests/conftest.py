import pytest
from hypothesis import strategies as st

from macforge.complexes import SimplicialComplex, submasks

# Six-vertex real projective plane: each edge in exactly two triangles.
RP2_FACETS = [[1, 2, 4], [1, 3, 4], [2, 3, 5], [2, 4, 5], [3, 4, 6], [4, 5, 6], [1, 3, 5], [1, 5, 6], [1, 2, 6], [2, 3, 6]]
SQUARE_FACETS = [[1, 3], [2, 3], [2, 4], [1, 4]]


@pytest.fixture
def square():
    return SimplicialComplex.from_facets(4, SQUARE_FACETS)


@pytest.fixture
def rp2():
    return SimplicialComplex.from_facets(6, RP2_FACETS)


@st.composite
def complexes(draw, min_m=1, max_m=5):
    """Random complexes without ghost vertices (every singleton is a facet
    candidate, so each vertex is covered)."""
    m = draw(st.integers(min_m, max_m))
    facets = draw(st.lists(st.integers(1, (1 << m) - 1), max_size=m + 2))
    faces = {0} | {1 << i for i in range(m)}
    for f in facets:
        faces.update(submasks(f))
    return SimplicialComplex(m, faces)


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance: end-to-end acceptance criteria")


def pytest_terminal_summary(terminalreporter):
    lines = []
    for status in ("passed", "failed"):
        for rep in terminalreporter.stats.get(status, []):
            if rep.when == "call" and "test_acceptance.py" in rep.nodeid:
                name = rep.nodeid.split("[")[-1].rstrip("]")
                lines.append((name, "PASS" if status == "passed" else "FAIL", rep.duration))
    if lines:
        terminalreporter.section("acceptance criteria")
        for name, status, dt in sorted(lines):
            terminalreporter.write_line(f"{name}: {status} ({dt:.2f}s)")
