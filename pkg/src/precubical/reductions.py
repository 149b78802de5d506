"""Directed-homotopy-preserving reductions of 2-dimensional complexes.

Three rewrite operations, each guarded by explicitly checked side
conditions and each returning a certificate recording the conditions,
the removed cells, any redirected boundary entries, and whether the
fundamental bipartite graph is guaranteed to be preserved:

- edge_collapse: removes an edge and one of its endpoints, redirecting
  the boundary of the edges that met the removed vertex;
- square_one_free: removes a square together with two of its boundary
  edges and the corner vertex between them;
- square_two_free: removes a square and one free boundary edge, keeping
  all vertices.

auto_reduce chains these, either following an explicit recipe or by a
deterministic greedy scan.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from . import core
from .core import CellRef, Complex
from .errors import (
    ConditionsFailed,
    DimensionUnsupported,
    GuaranteeLost,
    RecipeStepFailed,
    UnknownCell,
    WrongDegree,
)

EDGE_COLLAPSE = "edge-collapse"
SQUARE_ONE_FREE = "square-one-free"
SQUARE_TWO_FREE = "square-two-free"


@dataclass(frozen=True)
class Condition:
    label: str
    holds: bool
    witnesses: tuple[CellRef, ...] = ()


@dataclass(frozen=True)
class ReductionCertificate:
    kind: str
    cell: CellRef
    params: dict
    conditions: tuple[Condition, ...]
    removed: frozenset[CellRef]
    redirected: dict  # (CellRef, i, k) -> CellRef, nonempty only for edge-collapse
    y: Optional[frozenset[CellRef]]  # absent for square-one-free
    r_cells: Optional[frozenset[CellRef]]  # the subset R, only for square-two-free
    fbg_guaranteed: bool

    @property
    def all_conditions_hold(self) -> bool:
        return all(c.holds for c in self.conditions)

    def condition(self, label: str) -> Condition:
        for c in self.conditions:
            if c.label == label:
                return c
        raise KeyError(label)


def _require(P: Complex, cell_id: str, degree: int) -> CellRef:
    x = CellRef(degree, cell_id)
    if not P.has(x):
        found = [c for c in P.all_cells() if c.id == cell_id]
        if found:
            raise WrongDegree(
                f"cell {cell_id!r} has degree {found[0].degree}, expected {degree}"
            )
        raise UnknownCell(f"no cell {cell_id!r} of degree {degree}")
    return x


def _check_dimension(P: Complex):
    dim = P.dimension
    if dim is not None and dim > 2:
        raise DimensionUnsupported(
            f"reductions operate in dimension <= 2, complex has dimension {dim}"
        )


def _edges_at_vertex(P: Complex, v: CellRef) -> list[CellRef]:
    """Edges having v in their boundary, sorted by id."""
    return [
        e
        for e in P.cells(1)
        if P.face(e, 1, 0) == v or P.face(e, 1, 1) == v
    ]


def _square_boundary_edges(P: Complex) -> set[CellRef]:
    """All edges occurring in the boundary of some degree-2 cell."""
    out: set[CellRef] = set()
    for s in P.cells(2):
        for i in (1, 2):
            for k in (0, 1):
                out.add(P.face(s, i, k))
    return out


def _squares_with_edge(P: Complex, edge: CellRef, exclude: CellRef = None) -> list[CellRef]:
    out = []
    for s in P.cells(2):
        if s == exclude:
            continue
        if any(P.face(s, i, k) == edge for i in (1, 2) for k in (0, 1)):
            out.append(s)
    return out


def _finish(P, kind, x, params, conditions, removed, redirected, y, r_cells, mode, allow_empty_y):
    guaranteed = kind == SQUARE_ONE_FREE or bool(y)
    cert = ReductionCertificate(
        kind=kind,
        cell=x,
        params=params,
        conditions=tuple(conditions),
        removed=frozenset(removed),
        redirected=dict(redirected),
        y=frozenset(y) if y is not None else None,
        r_cells=frozenset(r_cells) if r_cells is not None else None,
        fbg_guaranteed=guaranteed,
    )
    if mode == "check":
        return None, cert
    if not cert.all_conditions_hold:
        raise ConditionsFailed(cert)
    if not guaranteed and not allow_empty_y:
        raise GuaranteeLost(cert)
    return _apply(P, cert), cert


def _apply(P: Complex, cert: ReductionCertificate) -> Complex:
    removed = cert.removed
    kept = [c for c in P.all_cells() if c not in removed]
    redirect: dict[tuple[int, str], dict[tuple[int, int], str]] = {}
    for (cell, i, k), target in cert.redirected.items():
        redirect.setdefault((cell.degree, cell.id), {})[(i, k)] = target.id
    cells: dict[int, list[str]] = {}
    faces = {}
    coords = {}
    for cell in kept:
        cells.setdefault(cell.degree, []).append(cell.id)
        if cell.degree > 0:
            table = P.face_table(cell)
            table.update(redirect.get((cell.degree, cell.id), {}))
            faces[(cell.degree, cell.id)] = table
        pos = P.coords(cell)
        if pos is not None:
            coords[(cell.degree, cell.id)] = pos
    return Complex(cells, faces, coords)


def edge_collapse(
    P: Complex,
    cell_id: str,
    b: int,
    mode: str = "apply",
    allow_empty_y: bool = False,
) -> tuple[Optional[Complex], ReductionCertificate]:
    """Collapse the edge x onto its d_1^b endpoint, removing the vertex
    v = d_1^{1-b} x and redirecting every edge y with d_1^b y = v to end
    (resp. start) at d_1^b x instead."""
    _check_dimension(P)
    x = _require(P, cell_id, 1)
    v = P.face(x, 1, 1 - b)  # the vertex that disappears
    w = P.face(x, 1, b)  # the vertex x collapses onto

    conditions = [Condition("reg", core.is_regular(P, x))]

    same_endpoint = [
        yy
        for yy in P.cells(1)
        if yy != x and P.face(yy, 1, 1 - b) == v
    ]
    conditions.append(Condition("i", not same_endpoint, tuple(same_endpoint)))

    in_square = _square_boundary_edges(P)
    blocked = [e for e in _edges_at_vertex(P, v) if e in in_square]
    conditions.append(Condition("ii", not blocked, tuple(blocked)))

    y = [yy for yy in P.cells(1) if P.face(yy, 1, b) == v]
    redirected = {(yy, 1, b): w for yy in y}
    removed = {x, v}
    return _finish(
        P, EDGE_COLLAPSE, x, {"b": b}, conditions, removed, redirected, y, None,
        mode, allow_empty_y,
    )


def square_one_free(
    P: Complex,
    cell_id: str,
    b: int,
    mode: str = "apply",
    allow_empty_y: bool = False,
) -> tuple[Optional[Complex], ReductionCertificate]:
    """Remove a square x together with the edges d_1^{1-b} x and d_2^b x
    and the corner vertex between them. Requires both edges to be free
    (in no other square) and the corner to meet no other edge."""
    _check_dimension(P)
    x = _require(P, cell_id, 2)
    e1 = P.face(x, 1, 1 - b)
    e2 = P.face(x, 2, b)
    corner = P.face(e1, 1, b)  # equals d_1^{1-b} d_2^b x

    conditions = [Condition("reg", core.is_regular(P, x))]

    other = sorted(
        set(_squares_with_edge(P, e1, exclude=x))
        | set(_squares_with_edge(P, e2, exclude=x))
    )
    conditions.append(Condition("i", not other, tuple(other)))

    extra = [e for e in _edges_at_vertex(P, corner) if e not in (e1, e2)]
    conditions.append(Condition("ii", not extra, tuple(extra)))

    removed = {x, e1, e2, corner}
    return _finish(
        P, SQUARE_ONE_FREE, x, {"b": b}, conditions, removed, {}, None, None,
        mode, allow_empty_y,
    )


def square_two_free(
    P: Complex,
    cell_id: str,
    a: int,
    b: int,
    mode: str = "apply",
    allow_empty_y: bool = False,
) -> tuple[Optional[Complex], ReductionCertificate]:
    """Remove a square x and its free edge d_{3-a}^b x. The edge
    d_a^{1-b} x survives and takes over the role of the removed one; the
    certificate records the subset R on which the homotopy is relative."""
    _check_dimension(P)
    x = _require(P, cell_id, 2)
    if a not in (1, 2):
        raise ValueError("a must be 1 or 2")
    e_keep = P.face(x, a, 1 - b)
    e_drop = P.face(x, 3 - a, b)

    conditions = [Condition("reg", core.is_regular(P, x))]

    other = sorted(
        set(_squares_with_edge(P, e_keep, exclude=x))
        | set(_squares_with_edge(P, e_drop, exclude=x))
    )
    conditions.append(Condition("i", not other, tuple(other)))

    v_keep = P.face(e_keep, 1, b)
    parallel = [
        yy
        for yy in P.cells(1)
        if yy != e_keep and P.face(yy, 1, b) == v_keep
    ]
    conditions.append(Condition("ii", not parallel, tuple(parallel)))

    v_drop = P.face(e_drop, 1, 1 - b)
    y = [
        yy
        for yy in P.cells(1)
        if yy != e_drop and P.face(yy, 1, 1 - b) == v_drop
    ]
    in_square = _square_boundary_edges(P)
    bad_y = [yy for yy in y if yy in in_square]
    conditions.append(Condition("iii", not bad_y, tuple(bad_y)))

    removed = {x, e_drop}
    r_excluded = {x, e_drop, v_drop, e_keep} | set(y)
    r_cells = [c for c in P.all_cells() if c not in r_excluded]
    return _finish(
        P, SQUARE_TWO_FREE, x, {"a": a, "b": b}, conditions, removed, {}, y,
        r_cells, mode, allow_empty_y,
    )


def check(P: Complex, kind: str, cell_id: str, a: Optional[int], b: int) -> ReductionCertificate:
    """Run one reduction in check mode and return its certificate."""
    _, cert = run(P, kind, cell_id, a, b, mode="check")
    return cert


def run(
    P: Complex,
    kind: str,
    cell_id: str,
    a: Optional[int],
    b: int,
    mode: str = "apply",
    allow_empty_y: bool = False,
) -> tuple[Optional[Complex], ReductionCertificate]:
    if kind == EDGE_COLLAPSE:
        return edge_collapse(P, cell_id, b, mode, allow_empty_y)
    if kind == SQUARE_ONE_FREE:
        return square_one_free(P, cell_id, b, mode, allow_empty_y)
    if kind == SQUARE_TWO_FREE:
        if a is None:
            raise ValueError("square-two-free needs parameter a")
        return square_two_free(P, cell_id, a, b, mode, allow_empty_y)
    raise ValueError(f"unknown reduction kind {kind!r}")


@dataclass(frozen=True)
class Step:
    """One entry of a reduction recipe."""

    kind: str
    cell: str
    b: int
    a: Optional[int] = None

    def __str__(self):
        if self.a is None:
            return f"{self.kind} {self.cell} {self.b}"
        return f"{self.kind} {self.cell} {self.a} {self.b}"


# Greedy scan order: square eliminations before edge collapses, matching
# the sequences used in worked reductions of grid-like complexes.
GREEDY_ATTEMPTS: tuple[tuple[str, Optional[int], int], ...] = (
    (SQUARE_ONE_FREE, None, 1),
    (SQUARE_ONE_FREE, None, 0),
    (SQUARE_TWO_FREE, 2, 0),
    (SQUARE_TWO_FREE, 1, 1),
    (SQUARE_TWO_FREE, 1, 0),
    (SQUARE_TWO_FREE, 2, 1),
    (EDGE_COLLAPSE, None, 0),
    (EDGE_COLLAPSE, None, 1),
)


def _greedy_step(P: Complex) -> Optional[tuple[Complex, ReductionCertificate]]:
    for kind, a, b in GREEDY_ATTEMPTS:
        degree = 1 if kind == EDGE_COLLAPSE else 2
        for cell in P.cells(degree):
            cert = check(P, kind, cell.id, a, b)
            if cert.all_conditions_hold and cert.fbg_guaranteed:
                Q, cert = run(P, kind, cell.id, a, b)
                return Q, cert
    return None


def auto_reduce(
    P: Complex,
    policy: str = "greedy",
    recipe: Optional[list[Step]] = None,
) -> tuple[Complex, list[ReductionCertificate]]:
    """Chain reductions: either replay an explicit recipe (failing on the
    first inapplicable step) or greedily apply guaranteed reductions in a
    fixed deterministic order until no further one applies."""
    trail: list[ReductionCertificate] = []
    if policy == "recipe":
        if recipe is None:
            raise ValueError("recipe policy needs a step list")
        for index, step in enumerate(recipe):
            try:
                Q, cert = run(P, step.kind, step.cell, step.a, step.b)
            except (ConditionsFailed, GuaranteeLost) as exc:
                raise RecipeStepFailed(index, step, exc.certificate) from exc
            except (UnknownCell, WrongDegree) as exc:
                raise RecipeStepFailed(index, step, None) from exc
            trail.append(cert)
            P = Q
        return P, trail
    if policy != "greedy":
        raise ValueError(f"unknown policy {policy!r}")
    while True:
        result = _greedy_step(P)
        if result is None:
            return P, trail
        P, cert = result
        trail.append(cert)
