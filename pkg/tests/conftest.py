import random

import pytest

from precubical import core, modelio
from precubical.core import CellRef, Complex


@pytest.fixture
def square():
    return modelio.named_fixture("square")


@pytest.fixture
def interval():
    return modelio.named_fixture("interval")


@pytest.fixture
def circle():
    return modelio.named_fixture("circle")


@pytest.fixture
def double_edge():
    return modelio.named_fixture("double_edge")


@pytest.fixture
def shared_memory():
    return modelio.named_fixture("shared_memory")


def random_grid_complex(rng: random.Random, max_side: int = 4) -> Complex:
    """A random grid with holes plus dangling edges to fresh vertices.

    Dangling edges attach fresh vertices so the 1-skeleton stays acyclic;
    they perturb the extremal vertex sets, which is the point.
    """
    m = rng.randint(1, max_side)
    n = rng.randint(1, max_side)
    holes = {(i, j) for i in range(m) for j in range(n) if rng.random() < 0.3}
    if len(holes) == m * n:
        holes.pop()
    P = modelio.grid_with_holes(m, n, holes)
    cells = {k: list(P.cell_ids(k)) for k in P.degrees()}
    faces = {
        (k, cid): P.face_table(CellRef(k, cid))
        for k in P.degrees()
        if k > 0
        for cid in P.cell_ids(k)
    }
    for t in range(rng.randint(0, 3)):
        anchor = rng.choice(cells[0])
        new_vertex, new_edge = f"dv{t}", f"de{t}"
        cells[0].append(new_vertex)
        cells[1].append(new_edge)
        if rng.random() < 0.5:
            faces[(1, new_edge)] = {(1, 0): anchor, (1, 1): new_vertex}
        else:
            faces[(1, new_edge)] = {(1, 0): new_vertex, (1, 1): anchor}
    P = Complex(cells, faces)
    assert core.is_valid(P)
    return P
