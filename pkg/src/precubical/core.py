"""Precubical sets as explicit face tables.

A complex is a finite graded set of cells together with boundary operators
d_i^k sending a degree-n cell to a degree-(n-1) cell (1 <= i <= n,
k in {0, 1}) subject to the cubical identities
d_i^k d_j^l = d_{j-1}^l d_i^k for i < j.

Complexes are immutable after construction and all operations here are
pure. Cell identity is the pair (degree, id string); coordinates attached
by generators are layout metadata only and are never consulted by any
algorithm.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional

from .errors import UnknownCell


@dataclass(frozen=True, order=True)
class CellRef:
    """A cell named by degree and an id unique within that degree."""

    degree: int
    id: str

    def __repr__(self):
        return f"CellRef({self.degree}, {self.id!r})"


class Complex:
    """A finite precubical set given by explicit face tables.

    `cells` maps each degree to an iterable of cell ids. `faces` maps
    (degree, id) to a mapping (i, k) -> face id of degree one less.
    The constructor stores the tables as given; use :func:`validate` to
    check the precubical identities and referential integrity.
    """

    def __init__(
        self,
        cells: Mapping[int, Iterable[str]],
        faces: Mapping[tuple[int, str], Mapping[tuple[int, int], str]] = (),
        coords: Mapping[tuple[int, str], tuple[int, ...]] = (),
    ):
        self._cells: dict[int, tuple[str, ...]] = {
            n: tuple(ids) for n, ids in cells.items() if ids
        }
        self._cell_sets: dict[int, frozenset[str]] = {
            n: frozenset(ids) for n, ids in self._cells.items()
        }
        self._faces: dict[tuple[int, str], dict[tuple[int, int], str]] = {
            key: dict(table) for key, table in dict(faces).items()
        }
        self._coords: dict[tuple[int, str], tuple[int, ...]] = {
            key: tuple(pos) for key, pos in dict(coords).items()
        }

    # -- basic accessors ---------------------------------------------------

    def degrees(self) -> list[int]:
        return sorted(self._cells)

    @property
    def dimension(self) -> Optional[int]:
        """The largest nonempty degree, or None for the empty complex."""
        return max(self._cells) if self._cells else None

    def cell_ids(self, degree: int) -> tuple[str, ...]:
        return self._cells.get(degree, ())

    def cells(self, degree: int) -> list[CellRef]:
        return [CellRef(degree, i) for i in sorted(self._cell_sets.get(degree, ()))]

    def all_cells(self) -> list[CellRef]:
        out = []
        for n in self.degrees():
            out.extend(self.cells(n))
        return out

    def has(self, cell: CellRef) -> bool:
        return cell.id in self._cell_sets.get(cell.degree, frozenset())

    def size(self, degree: int) -> int:
        return len(self._cell_sets.get(degree, frozenset()))

    def face(self, cell: CellRef, i: int, k: int) -> CellRef:
        if not self.has(cell):
            raise UnknownCell(f"no cell {cell.id!r} of degree {cell.degree}")
        table = self._faces.get((cell.degree, cell.id))
        if table is None or (i, k) not in table:
            raise UnknownCell(
                f"cell {cell.id!r} of degree {cell.degree} has no face d{i}_{k}"
            )
        return CellRef(cell.degree - 1, table[(i, k)])

    def face_table(self, cell: CellRef) -> dict[tuple[int, int], str]:
        return dict(self._faces.get((cell.degree, cell.id), {}))

    def coords(self, cell: CellRef) -> Optional[tuple[int, ...]]:
        return self._coords.get((cell.degree, cell.id))

    def coords_table(self) -> dict[tuple[int, str], tuple[int, ...]]:
        return dict(self._coords)

    # -- equality is cell-for-cell on cells and faces, ignoring metadata ---

    def __eq__(self, other):
        if not isinstance(other, Complex):
            return NotImplemented
        if self._cell_sets != other._cell_sets:
            return False
        for n, ids in self._cell_sets.items():
            if n == 0:
                continue
            for cid in ids:
                if self._faces.get((n, cid), {}) != other._faces.get((n, cid), {}):
                    return False
        return True

    __hash__ = None

    def __repr__(self):
        counts = ", ".join(f"{n}: {len(ids)}" for n, ids in sorted(self._cells.items()))
        return f"Complex({{{counts}}})"


@dataclass(frozen=True)
class Violation:
    """One defect found by validate."""

    kind: str  # duplicate-id | missing-face | dangling-face | identity
    cell: Optional[CellRef]
    message: str
    indices: Optional[tuple[int, ...]] = None

    def __str__(self):
        where = f" at {self.cell.id!r} (degree {self.cell.degree})" if self.cell else ""
        return f"{self.kind}{where}: {self.message}"


def validate(P: Complex) -> list[Violation]:
    """Check a raw complex and report every defect (empty report = valid).

    Reports duplicate ids, missing or dangling face entries, and every
    violated cubical identity with its (i, j, k, l) indices.
    """
    report: list[Violation] = []
    for n in P.degrees():
        seen: set[str] = set()
        for cid in P.cell_ids(n):
            if cid == "" and n > 0:
                report.append(Violation("duplicate-id", CellRef(n, cid), "empty cell id"))
            if cid in seen:
                report.append(
                    Violation("duplicate-id", CellRef(n, cid), f"id {cid!r} repeated in degree {n}")
                )
            seen.add(cid)

    def resolved_face(cell: CellRef, i: int, k: int) -> Optional[CellRef]:
        table = P.face_table(cell)
        fid = table.get((i, k))
        if fid is None:
            report.append(
                Violation("missing-face", cell, f"no entry for d{i}_{k}", (i, k))
            )
            return None
        ref = CellRef(cell.degree - 1, fid)
        if not P.has(ref):
            report.append(
                Violation(
                    "dangling-face",
                    cell,
                    f"d{i}_{k} = {fid!r} is not a cell of degree {cell.degree - 1}",
                    (i, k),
                )
            )
            return None
        return ref

    resolved: dict[tuple[CellRef, int, int], Optional[CellRef]] = {}
    for n in P.degrees():
        if n == 0:
            continue
        for cell in P.cells(n):
            for i in range(1, n + 1):
                for k in (0, 1):
                    resolved[(cell, i, k)] = resolved_face(cell, i, k)

    for n in P.degrees():
        if n < 2:
            continue
        for cell in P.cells(n):
            for i, j in itertools.combinations(range(1, n + 1), 2):
                for k in (0, 1):
                    for l in (0, 1):
                        a = resolved.get((cell, j, l))
                        b = resolved.get((cell, i, k))
                        if a is None or b is None:
                            continue  # already reported
                        left = resolved.get((a, i, k))
                        right = resolved.get((b, j - 1, l))
                        if left is None or right is None:
                            continue  # defect in a face, already reported
                        if left != right:
                            report.append(
                                Violation(
                                    "identity",
                                    cell,
                                    f"d{i}_{k} d{j}_{l} = {left.id!r} but "
                                    f"d{j - 1}_{l} d{i}_{k} = {right.id!r}",
                                    (i, j, k, l),
                                )
                            )
    return report


def is_valid(P: Complex) -> bool:
    return not validate(P)


# -- the standard n-cube ---------------------------------------------------


def standard_cube(n: int) -> Complex:
    """The precubical n-cube: cells are words over {0, 1, *}, a degree-r
    cell has exactly r stars, and d_i^k substitutes k for the i-th star."""
    if n < 0:
        raise ValueError("n must be non-negative")
    cells: dict[int, list[str]] = {}
    faces: dict[tuple[int, str], dict[tuple[int, int], str]] = {}
    for word in itertools.product("01*", repeat=n):
        w = "".join(word)
        r = w.count("*")
        cells.setdefault(r, []).append(w)
        if r > 0:
            table = {}
            star_positions = [p for p, ch in enumerate(w) if ch == "*"]
            for i, pos in enumerate(star_positions, start=1):
                for k in (0, 1):
                    table[(i, k)] = w[:pos] + str(k) + w[pos + 1 :]
            faces[(r, w)] = table
    if n == 0:
        cells = {0: [""]}
    return Complex(cells, faces)


# -- Yoneda morphism and regularity ---------------------------------------


@dataclass(frozen=True)
class CubeMorphismImage:
    """The image data of the unique cube morphism sending the top cell of
    the standard n-cube to a chosen cell x."""

    source_dimension: int
    assignment: Mapping[CellRef, CellRef]


def cube_morphism(P: Complex, x: CellRef) -> CubeMorphismImage:
    """Map every cell of the standard |x|-cube to the corresponding
    iterated face of x. Well-defined on valid complexes by the cubical
    identities."""
    if not P.has(x):
        raise UnknownCell(f"no cell {x.id!r} of degree {x.degree}")
    n = x.degree
    cube = standard_cube(n)
    top = CellRef(n, "*" * n)
    assignment: dict[CellRef, CellRef] = {top: x}
    for r in range(n, 0, -1):
        for c in cube.cells(r):
            image = assignment[c]
            for i in range(1, r + 1):
                for k in (0, 1):
                    assignment[cube.face(c, i, k)] = P.face(image, i, k)
    return CubeMorphismImage(n, assignment)


def is_regular(P: Complex, x: CellRef) -> bool:
    """True iff the induced cube morphism of x is injective."""
    image = cube_morphism(P, x)
    by_degree: dict[int, set[CellRef]] = {}
    for src, tgt in image.assignment.items():
        by_degree.setdefault(src.degree, set()).add(tgt)
    cube = standard_cube(x.degree)
    return all(len(by_degree[r]) == cube.size(r) for r in by_degree)


# -- duality functors ------------------------------------------------------


def opposite(P: Complex) -> Complex:
    """Reverse direction: face entry (i, k) becomes the old (i, 1-k)."""
    faces = {}
    for n in P.degrees():
        if n == 0:
            continue
        for cell in P.cells(n):
            table = P.face_table(cell)
            faces[(n, cell.id)] = {(i, 1 - k): fid for (i, k), fid in table.items()}
    return Complex(
        {n: P.cell_ids(n) for n in P.degrees()}, faces, P.coords_table()
    )


def transpose(P: Complex) -> Complex:
    """Swap coordinate roles: on degree-r cells, entry (i, k) becomes the
    old (r+1-i, k). Degree-1 tables are unchanged."""
    faces = {}
    for n in P.degrees():
        if n == 0:
            continue
        for cell in P.cells(n):
            table = P.face_table(cell)
            faces[(n, cell.id)] = {(n + 1 - i, k): fid for (i, k), fid in table.items()}
    return Complex(
        {n: P.cell_ids(n) for n in P.degrees()}, faces, P.coords_table()
    )


# -- extremal vertices -----------------------------------------------------


def minimal_vertices(P: Complex) -> set[CellRef]:
    """Vertices with no incoming edge (no edge y with d_1^1 y = v)."""
    targets = {P.face(e, 1, 1) for e in P.cells(1)}
    return {v for v in P.cells(0) if v not in targets}


def maximal_vertices(P: Complex) -> set[CellRef]:
    """Vertices with no outgoing edge (no edge y with d_1^0 y = v)."""
    sources = {P.face(e, 1, 0) for e in P.cells(1)}
    return {v for v in P.cells(0) if v not in sources}


def extremal(P: Complex) -> set[CellRef]:
    return minimal_vertices(P) | maximal_vertices(P)


# -- subcomplexes ----------------------------------------------------------


def is_subcomplex(P: Complex, Q: Complex) -> bool:
    """True iff every cell of Q is a cell of P with the same face table
    and Q is face-closed (no dangling boundary)."""
    for n in Q.degrees():
        if not Q._cell_sets[n] <= P._cell_sets.get(n, frozenset()):
            return False
        if n == 0:
            continue
        for cell in Q.cells(n):
            table = Q.face_table(cell)
            if table != P.face_table(cell):
                return False
            for fid in table.values():
                if not Q.has(CellRef(n - 1, fid)):
                    return False
    return True


def restrict(P: Complex, kept: Iterable[CellRef]) -> Complex:
    """The sub-table of P on the given cells (not checked for closure)."""
    kept_set = set(kept)
    cells: dict[int, list[str]] = {}
    faces = {}
    coords = {}
    for cell in sorted(kept_set):
        cells.setdefault(cell.degree, []).append(cell.id)
        if cell.degree > 0:
            faces[(cell.degree, cell.id)] = P.face_table(cell)
        pos = P.coords(cell)
        if pos is not None:
            coords[(cell.degree, cell.id)] = pos
    return Complex(cells, faces, coords)


# -- isomorphism -----------------------------------------------------------


def are_isomorphic(P: Complex, Q: Complex) -> Optional[dict[CellRef, CellRef]]:
    """A degree-preserving bijection commuting with all faces, or None.

    Backtracking over cells ordered by degree descending then id
    ascending; assigning a cell forces the assignment of its whole
    face closure, so squares prune the edge search early.
    """
    degrees = set(P.degrees()) | set(Q.degrees())
    for n in degrees:
        if P.size(n) != Q.size(n):
            return None

    order = sorted(P.all_cells(), key=lambda c: (-c.degree, c.id))
    mapping: dict[CellRef, CellRef] = {}
    used: set[CellRef] = set()

    def assign(p: CellRef, q: CellRef, trail: list[CellRef]) -> bool:
        current = mapping.get(p)
        if current is not None:
            return current == q
        if q in used or p.degree != q.degree:
            return False
        mapping[p] = q
        used.add(q)
        trail.append(p)
        for i in range(1, p.degree + 1):
            for k in (0, 1):
                if not assign(P.face(p, i, k), Q.face(q, i, k), trail):
                    return False
        return True

    def undo(trail: list[CellRef]):
        for p in trail:
            used.discard(mapping.pop(p))

    def search(pos: int) -> bool:
        while pos < len(order) and order[pos] in mapping:
            pos += 1
        if pos == len(order):
            return True
        p = order[pos]
        for q in Q.cells(p.degree):
            trail: list[CellRef] = []
            if assign(p, q, trail) and search(pos + 1):
                return True
            undo(trail)
        return False

    if search(0):
        return dict(mapping)
    return None


def euler_characteristic(P: Complex) -> int:
    return sum((-1) ** n * P.size(n) for n in P.degrees())
