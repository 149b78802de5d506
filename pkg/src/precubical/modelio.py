"""File format, example generators, and DOT export.

The on-disk format is a plain text document:

    pcsv1
    # comment
    0 a0
    0 a1
    1 e d1_0=a0 d1_1=a1 pos=0,1

One record per line: degree, id, then the face entries as `d<i>_<k>=<id>`
sorted by (i, k). An optional trailing `pos=<ints>` token carries layout
coordinates; it is metadata only. serialize emits records sorted by
(degree, id), so serialization is deterministic and round-trips byte-
identically for canonically ordered documents.
"""

from __future__ import annotations

import re

from . import core
from .core import CellRef, Complex
from .errors import (
    DimensionUnsupported,
    DocumentSyntaxError,
    OutOfRange,
    UnknownFixture,
    ValidationFailed,
)

HEADER = "pcsv1"

_FACE_KEY = re.compile(r"^d(\d+)_([01])$")


def serialize(P: Complex, name: str = None) -> str:
    lines = [HEADER]
    if name:
        lines.append(f"# {name}")
    for n in P.degrees():
        for cell in P.cells(n):
            parts = [str(n), cell.id]
            table = P.face_table(cell)
            for (i, k) in sorted(table):
                parts.append(f"d{i}_{k}={table[(i, k)]}")
            pos = P.coords(cell)
            if pos is not None:
                parts.append("pos=" + ",".join(str(c) for c in pos))
            lines.append(" ".join(parts))
    return "\n".join(lines) + "\n"


def parse(text: str, check: bool = True) -> Complex:
    """Parse a document; with check (the default) the complex must pass
    validation, otherwise the full violation report is raised."""
    lines = text.splitlines()
    cells: dict[int, list[str]] = {}
    faces: dict[tuple[int, str], dict[tuple[int, int], str]] = {}
    coords: dict[tuple[int, str], tuple[int, ...]] = {}
    header_seen = False
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if not header_seen:
            if line != HEADER:
                raise DocumentSyntaxError(lineno, f"expected header {HEADER!r}")
            header_seen = True
            continue
        tokens = line.split()
        if len(tokens) < 2:
            raise DocumentSyntaxError(lineno, "record needs a degree and an id")
        try:
            degree = int(tokens[0])
        except ValueError:
            raise DocumentSyntaxError(lineno, f"bad degree {tokens[0]!r}") from None
        if degree < 0:
            raise DocumentSyntaxError(lineno, f"negative degree {degree}")
        cid = tokens[1]
        table: dict[tuple[int, int], str] = {}
        for token in tokens[2:]:
            key, sep, value = token.partition("=")
            if not sep:
                raise DocumentSyntaxError(lineno, f"bad token {token!r}")
            if key == "pos":
                try:
                    coords[(degree, cid)] = tuple(int(c) for c in value.split(","))
                except ValueError:
                    raise DocumentSyntaxError(lineno, f"bad position {value!r}") from None
                continue
            m = _FACE_KEY.match(key)
            if not m:
                raise DocumentSyntaxError(lineno, f"bad face key {key!r}")
            i, k = int(m.group(1)), int(m.group(2))
            if not 1 <= i <= degree:
                raise DocumentSyntaxError(
                    lineno, f"face key {key!r} out of range for degree {degree}"
                )
            if (i, k) in table:
                raise DocumentSyntaxError(lineno, f"face key {key!r} given twice")
            table[(i, k)] = value
        for i in range(1, degree + 1):
            for k in (0, 1):
                if (i, k) not in table:
                    raise DocumentSyntaxError(
                        lineno, f"cell {cid!r} is missing face key d{i}_{k}"
                    )
        cells.setdefault(degree, []).append(cid)
        if degree > 0:
            faces[(degree, cid)] = table
    if not header_seen:
        raise DocumentSyntaxError(len(lines) + 1, f"missing header {HEADER!r}")
    P = Complex(cells, faces, coords)
    if check:
        report = core.validate(P)
        if report:
            raise ValidationFailed(report)
    return P


def load(path) -> Complex:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def save(P: Complex, path, name: str = None):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize(P, name))


# -- generators ------------------------------------------------------------


def vertex_id(i: int, j: int) -> str:
    return f"({i},{j})"


def grid_with_holes(m: int, n: int, holes=()) -> Complex:
    """An m-by-n grid of squares modelling two sequential processes, with
    the squares at the given (i, j) positions removed. Holes remove only
    squares: both interleavings around a hole stay executable, only their
    independence square is absent."""
    if m < 1 or n < 1:
        raise OutOfRange("grid needs m >= 1 and n >= 1")
    holes = set(holes)
    for (i, j) in holes:
        if not (0 <= i < m and 0 <= j < n):
            raise OutOfRange(f"hole ({i},{j}) outside the {m}x{n} grid")
    cells: dict[int, list[str]] = {0: [], 1: [], 2: []}
    faces = {}
    coords = {}
    for i in range(m + 1):
        for j in range(n + 1):
            vid = vertex_id(i, j)
            cells[0].append(vid)
            coords[(0, vid)] = (i, j)
    for i in range(m):
        for j in range(n + 1):
            eid = f"h({i},{j})"
            cells[1].append(eid)
            faces[(1, eid)] = {(1, 0): vertex_id(i, j), (1, 1): vertex_id(i + 1, j)}
            coords[(1, eid)] = (i, j)
    for i in range(m + 1):
        for j in range(n):
            eid = f"v({i},{j})"
            cells[1].append(eid)
            faces[(1, eid)] = {(1, 0): vertex_id(i, j), (1, 1): vertex_id(i, j + 1)}
            coords[(1, eid)] = (i, j)
    for i in range(m):
        for j in range(n):
            if (i, j) in holes:
                continue
            sid = f"s({i},{j})"
            cells[2].append(sid)
            faces[(2, sid)] = {
                (1, 0): f"v({i},{j})",
                (1, 1): f"v({i + 1},{j})",
                (2, 0): f"h({i},{j})",
                (2, 1): f"h({i},{j + 1})",
            }
            coords[(2, sid)] = (i, j)
    if not cells[2]:
        del cells[2]
    return Complex(cells, faces, coords)


# Grid parameters of the worked examples with holes. The concrete sizes
# and hole positions are configuration constants of this package.
SHARED_MEMORY_GRID = (3, 3, frozenset({(1, 1)}))
HOLES_EXAMPLE_GRID = (5, 5, frozenset({(1, 3), (3, 1)}))
ORDERED_HOLES_EXAMPLE_GRID = (5, 5, frozenset({(1, 1), (3, 3)}))
SWISS_FLAG_GRID = (5, 5, frozenset({(2, 1), (1, 2), (2, 2), (3, 2), (2, 3)}))

GRID_FIXTURES = {
    "shared_memory": SHARED_MEMORY_GRID,
    "holes_example": HOLES_EXAMPLE_GRID,
    "ordered_holes_example": ORDERED_HOLES_EXAMPLE_GRID,
    "swiss_flag": SWISS_FLAG_GRID,
}

FIXTURE_NAMES = (
    "interval",
    "circle",
    "double_edge",
    "path2",
    "square",
    "square_plus_tail",
    "shared_memory",
    "holes_example",
    "ordered_holes_example",
    "swiss_flag",
)


def _square_complex(extra_cells=None, extra_faces=None) -> Complex:
    cells = {
        0: ["w00", "w01", "w10", "w11"],
        1: ["eL", "eR", "eB", "eT"],
        2: ["s"],
    }
    faces = {
        (1, "eL"): {(1, 0): "w00", (1, 1): "w01"},
        (1, "eR"): {(1, 0): "w10", (1, 1): "w11"},
        (1, "eB"): {(1, 0): "w00", (1, 1): "w10"},
        (1, "eT"): {(1, 0): "w01", (1, 1): "w11"},
        (2, "s"): {(1, 0): "eL", (1, 1): "eR", (2, 0): "eB", (2, 1): "eT"},
    }
    if extra_cells:
        for n, ids in extra_cells.items():
            cells[n] = cells.get(n, []) + ids
    if extra_faces:
        faces.update(extra_faces)
    return Complex(cells, faces)


def named_fixture(name: str) -> Complex:
    if name == "interval":
        return Complex(
            {0: ["a0", "a1"], 1: ["e"]},
            {(1, "e"): {(1, 0): "a0", (1, 1): "a1"}},
        )
    if name == "circle":
        return Complex(
            {0: ["v"], 1: ["e"]},
            {(1, "e"): {(1, 0): "v", (1, 1): "v"}},
        )
    if name == "double_edge":
        return Complex(
            {0: ["u", "w"], 1: ["p", "q"]},
            {
                (1, "p"): {(1, 0): "u", (1, 1): "w"},
                (1, "q"): {(1, 0): "u", (1, 1): "w"},
            },
        )
    if name == "path2":
        return Complex(
            {0: ["v0", "v1", "v2"], 1: ["e1", "e2"]},
            {
                (1, "e1"): {(1, 0): "v0", (1, 1): "v1"},
                (1, "e2"): {(1, 0): "v1", (1, 1): "v2"},
            },
        )
    if name == "square":
        return _square_complex()
    if name == "square_plus_tail":
        return _square_complex(
            extra_cells={0: ["t"], 1: ["g"]},
            extra_faces={(1, "g"): {(1, 0): "t", (1, 1): "w10"}},
        )
    if name in GRID_FIXTURES:
        m, n, holes = GRID_FIXTURES[name]
        return grid_with_holes(m, n, holes)
    raise UnknownFixture(f"unknown fixture {name!r}")


# -- DOT export ------------------------------------------------------------


def export_dot(P: Complex, name: str = "complex") -> str:
    """Directed-graph text for graphviz. Vertices become nodes, edges
    become labeled arcs, and each square is emitted as a comment plus a
    plaintext node dashed-linked to the label nodes of its four boundary
    edges."""
    dim = P.dimension
    if dim is not None and dim > 2:
        raise DimensionUnsupported(f"cannot draw dimension {dim}")
    out = [f'digraph "{name}" {{']
    for v in P.cells(0):
        attrs = [f'label="{v.id}"']
        pos = P.coords(v)
        if pos is not None and len(pos) >= 2:
            attrs.append(f'pos="{pos[0]},{pos[1]}!"')
        out.append(f'  "{v.id}" [{" ".join(attrs)}];')
    square_edges = {
        P.face(s, i, k) for s in P.cells(2) for i in (1, 2) for k in (0, 1)
    }
    for e in P.cells(1):
        src, tgt = P.face(e, 1, 0), P.face(e, 1, 1)
        if e in square_edges:
            # route through a label node so squares have an anchor
            mid = f"mid:{e.id}"
            out.append(f'  "{mid}" [shape=plaintext label="{e.id}"];')
            out.append(f'  "{src.id}" -> "{mid}" [arrowhead=none];')
            out.append(f'  "{mid}" -> "{tgt.id}";')
        else:
            out.append(f'  "{src.id}" -> "{tgt.id}" [label="{e.id}"];')
    for s in P.cells(2):
        boundary = [P.face(s, 1, 0), P.face(s, 1, 1), P.face(s, 2, 0), P.face(s, 2, 1)]
        ids = " ".join(e.id for e in boundary)
        out.append(f"  // square {s.id}: [{ids}]")
        sq = f"sq:{s.id}"
        out.append(f'  "{sq}" [shape=plaintext label="{s.id}"];')
        for e in boundary:
            out.append(f'  "{sq}" -> "mid:{e.id}" [style=dashed dir=none];')
    out.append("}")
    return "\n".join(out) + "\n"
