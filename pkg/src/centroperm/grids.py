"""
Geometric grid classes.

A grid matrix has entries in {-1, 0, 1}; row 1 is the TOP row of the
displayed matrix and column 1 is leftmost. Its standard figure replaces
each 1 with a slope +1 segment, each -1 with a slope -1 segment, and each
0 with empty space. The class of the matrix consists of every permutation
whose diagram can be drawn by choosing points on the figure.

Enumeration works through the word image: once every column is given a
consistent position direction and every row a consistent value direction
(possible for any matrix after the x2 refinement), a word over the
non-zero cells of length n decodes to a member of size n by placing the
i-th point on its cell's segment at distance i from the segment's base
endpoint. Every member of size n, and every valid gridding, arises from
some word of length n.

Matrix text format: rows separated by ';', entries by ',', row 1 first,
e.g. "-1,1;1,-1". Brackets around the whole matrix are accepted.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .perms import Perm, is_centrosymmetric

Cell = tuple[int, int]  # (row, col), 1-based, row 1 = top


@dataclass(frozen=True)
class GridMatrix:
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if not self.entries or not self.entries[0]:
            raise ValueError("grid matrix needs at least one row and one column")
        width = len(self.entries[0])
        for row in self.entries:
            if len(row) != width:
                raise ValueError("grid matrix rows must have equal length")
            for e in row:
                if e not in (-1, 0, 1):
                    raise ValueError(f"grid entry {e!r} is not in {{-1, 0, 1}}")

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    def entry(self, cell: Cell) -> int:
        r, c = cell
        return self.entries[r - 1][c - 1]

    def nonzero_cells(self) -> tuple[Cell, ...]:
        return tuple(
            (r + 1, c + 1)
            for r, row in enumerate(self.entries)
            for c, e in enumerate(row)
            if e != 0
        )

    def __str__(self) -> str:
        return ";".join(",".join(str(e) for e in row) for row in self.entries)


def grid_matrix(rows) -> GridMatrix:
    return GridMatrix(tuple(tuple(int(e) for e in row) for row in rows))


def parse_matrix(text: str) -> GridMatrix:
    """Parse '-1,1;1,-1' (optionally wrapped in [...]) into a GridMatrix."""
    body = "".join(text.split())
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1]
    if not body:
        raise ValueError("empty grid matrix text")
    rows = []
    for row_text in body.split(";"):
        row = []
        for tok in row_text.split(","):
            if tok not in ("-1", "0", "1"):
                raise ValueError(f"grid entry {tok!r} is not -1, 0 or 1")
            row.append(int(tok))
        rows.append(tuple(row))
    return GridMatrix(tuple(rows))


def rc_cell(cell: Cell, rows: int, cols: int) -> Cell:
    r, c = cell
    return (rows + 1 - r, cols + 1 - c)


def matrix_rc(m: GridMatrix) -> GridMatrix:
    """Half-turn rotation of the entry array; segment slopes are preserved."""
    return GridMatrix(tuple(tuple(reversed(row)) for row in reversed(m.entries)))


def is_rc_matrix(m: GridMatrix) -> bool:
    return m == matrix_rc(m)


_REFINE = {
    1: ((0, 1), (1, 0)),
    -1: ((-1, 0), (0, -1)),
    0: ((0, 0), (0, 0)),
}


def refine_x2(m: GridMatrix) -> GridMatrix:
    """
    The 2r x 2c refinement: each entry is replaced by a 2x2 block that
    stretches the standard figure by a factor of 2, so the class is
    unchanged. The refined matrix always admits a consistent orientation.
    """
    out = []
    for row in m.entries:
        top = []
        bottom = []
        for e in row:
            block = _REFINE[e]
            top.extend(block[0])
            bottom.extend(block[1])
        out.append(tuple(top))
        out.append(tuple(bottom))
    return GridMatrix(tuple(out))


def _matrix_union(a: GridMatrix, b: GridMatrix) -> GridMatrix:
    if a.rows != b.rows or a.cols != b.cols:
        raise ValueError("cannot combine grid matrices of different shapes")
    rows = []
    for ra, rb in zip(a.entries, b.entries):
        row = []
        for ea, eb in zip(ra, rb):
            if ea != 0 and eb != 0:
                raise ValueError("grid matrices overlap in a non-zero cell")
            row.append(ea if ea != 0 else eb)
        rows.append(tuple(row))
    return GridMatrix(tuple(rows))


# ---------------------------------------------------------------------------
# Cell graph and the forest / component-pairing conditions


@dataclass(frozen=True)
class CellGraph:
    vertices: tuple[Cell, ...]
    edges: tuple[tuple[Cell, Cell], ...]

    def components(self) -> tuple[tuple[Cell, ...], ...]:
        adjacency: dict[Cell, list[Cell]] = {v: [] for v in self.vertices}
        for u, v in self.edges:
            adjacency[u].append(v)
            adjacency[v].append(u)
        seen: set[Cell] = set()
        comps = []
        for v in self.vertices:
            if v in seen:
                continue
            stack = [v]
            comp = []
            seen.add(v)
            while stack:
                u = stack.pop()
                comp.append(u)
                for w in adjacency[u]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            comps.append(tuple(sorted(comp)))
        return tuple(sorted(comps))


def cell_graph(m: GridMatrix) -> CellGraph:
    """
    Graph on the non-zero cells; two cells are adjacent when they share a
    row or column with no non-zero cell strictly between them.
    """
    cells = m.nonzero_cells()
    edges = []
    for r in range(1, m.rows + 1):
        in_row = sorted(c for c in cells if c[0] == r)
        edges.extend(zip(in_row, in_row[1:]))
    for c in range(1, m.cols + 1):
        in_col = sorted(v for v in cells if v[1] == c)
        edges.extend(zip(in_col, in_col[1:]))
    return CellGraph(tuple(sorted(cells)), tuple(sorted(edges)))


def is_forest(g: CellGraph) -> bool:
    """A graph is a forest exactly when #edges = #vertices - #components."""
    return len(g.edges) == len(g.vertices) - len(g.components())


@dataclass(frozen=True)
class GridConditions:
    """Outcome of the forest / rc-pairing checks for an rc-invariant matrix."""

    matrix: GridMatrix          # the matrix the checks ran on (refined if needed)
    refined: bool
    forest: bool
    pairing_ok: bool
    components: tuple[tuple[Cell, ...], ...]
    # pairs of component indices swapped by rc, when pairing_ok
    pairing: tuple[tuple[int, int], ...]


def rc_component_pairing(m: GridMatrix) -> GridConditions:
    """
    Check, on an rc-invariant matrix, whether the cell graph is a forest
    and whether rc maps every component onto a different component. The
    matrix is refined to even dimensions first when needed.
    """
    if not is_rc_matrix(m):
        raise ValueError("component pairing is only defined for rc-invariant matrices")
    refined = False
    work = m
    if work.rows % 2 or work.cols % 2:
        work = refine_x2(work)
        refined = True
    graph = cell_graph(work)
    comps = graph.components()
    comp_of = {cell: i for i, comp in enumerate(comps) for cell in comp}
    pairing = []
    ok = True
    for i, comp in enumerate(comps):
        j = comp_of[rc_cell(comp[0], work.rows, work.cols)]
        if j == i:
            ok = False
        elif i < j:
            pairing.append((i, j))
    return GridConditions(
        matrix=work,
        refined=refined,
        forest=is_forest(graph),
        pairing_ok=ok,
        components=comps,
        pairing=tuple(pairing) if ok else (),
    )


def split_XY(m: GridMatrix) -> tuple[GridMatrix, GridMatrix]:
    """
    Split an rc-invariant matrix whose components pair off under rc into
    (A_X, A_Y): A_X keeps one component of each pair (the one holding the
    lexicographically least cell, for determinism), A_Y is its rc image.
    No non-zero cell of A_X shares a row or column with one of A_Y.
    """
    conditions = rc_component_pairing(m)
    if not conditions.pairing_ok:
        raise ValueError("rc does not pair the cell-graph components off")
    work = conditions.matrix
    keep: set[Cell] = set()
    for i, j in conditions.pairing:
        a, b = conditions.components[i], conditions.components[j]
        keep.update(a if min(a) < min(b) else b)
    blank = [[0] * work.cols for _ in range(work.rows)]
    for r, c in keep:
        blank[r - 1][c - 1] = work.entries[r - 1][c - 1]
    a_x = GridMatrix(tuple(tuple(row) for row in blank))
    a_y = matrix_rc(a_x)
    x_rows = {r for r, _ in a_x.nonzero_cells()}
    x_cols = {c for _, c in a_x.nonzero_cells()}
    for r, c in a_y.nonzero_cells():
        if r in x_rows or c in x_cols:
            raise AssertionError("split halves share a row or column")
    return a_x, a_y


# ---------------------------------------------------------------------------
# Orientation (base endpoints) and the word image


@dataclass(frozen=True)
class _Orientation:
    xdir: tuple[int, ...]  # per column (index 0 = column 1), +1/-1/0 (0 = empty column)
    ydir: tuple[int, ...]  # per row, +1 means later points sit higher
    symmetric: bool        # directions invariant under rc of rows/columns


def _solve_signs(
    n_vars: int, constraints: list[tuple[int, int, int]]
) -> list[int] | None:
    """
    Solve sign(u)*sign(v) = e for variables 0..n_vars-1 by propagation.
    Propagation is complete for this system: returns None only when the
    constraints are genuinely inconsistent.
    """
    adjacency: dict[int, list[tuple[int, int]]] = {i: [] for i in range(n_vars)}
    for u, v, e in constraints:
        adjacency[u].append((v, e))
        adjacency[v].append((u, e))
    sign = [0] * n_vars
    for start in range(n_vars):
        if sign[start]:
            continue
        sign[start] = 1
        stack = [start]
        while stack:
            u = stack.pop()
            for v, e in adjacency[u]:
                want = sign[u] * e
                if sign[v] == 0:
                    sign[v] = want
                    stack.append(v)
                elif sign[v] != want:
                    return None
    return sign


def _orient(m: GridMatrix, symmetric: bool) -> _Orientation | None:
    cols, rows = m.cols, m.rows
    # variables: 0..cols-1 = column directions, cols..cols+rows-1 = row directions
    constraints = [
        (c - 1, cols + r - 1, m.entry((r, c))) for r, c in m.nonzero_cells()
    ]
    if symmetric:
        constraints += [(c - 1, cols - c, 1) for c in range(1, cols + 1)]
        constraints += [(cols + r - 1, cols + rows - r, 1) for r in range(1, rows + 1)]
    solution = _solve_signs(cols + rows, constraints)
    if solution is None:
        return None
    used_cols = {c for _, c in m.nonzero_cells()}
    used_rows = {r for r, _ in m.nonzero_cells()}
    xdir = tuple(solution[c - 1] if c in used_cols else 0 for c in range(1, cols + 1))
    ydir = tuple(solution[cols + r - 1] if r in used_rows else 0 for r in range(1, rows + 1))
    return _Orientation(xdir, ydir, symmetric)


@lru_cache(maxsize=None)
def _orientation(m: GridMatrix) -> _Orientation | None:
    """Column/row directions with x_c * y_r = entry on every non-zero cell."""
    if is_rc_matrix(m):
        oriented = _orient(m, symmetric=True)
        if oriented is not None:
            return oriented
    return _orient(m, symmetric=False)


@lru_cache(maxsize=None)
def _geometry(m: GridMatrix) -> tuple[GridMatrix, _Orientation, bool]:
    """The matrix actually used for word enumeration (refined when needed)."""
    oriented = _orientation(m)
    if oriented is not None:
        return m, oriented, False
    work = refine_x2(m)
    oriented = _orientation(work)
    if oriented is None:
        raise AssertionError("refined matrix must admit a consistent orientation")
    return work, oriented, True


def _decode(word, ori: _Orientation, rows: int) -> tuple[Perm, tuple[Cell, ...]]:
    """Place the i-th letter at distance i from its segment's base and read off the permutation."""
    pts = []
    for i, (r, c) in enumerate(word):
        xk = (c, i if ori.xdir[c - 1] > 0 else -i)
        yk = (rows - r, i if ori.ydir[r - 1] > 0 else -i)
        pts.append((xk, yk, (r, c)))
    pts.sort()
    by_value = sorted(range(len(pts)), key=lambda j: pts[j][1])
    values = [0] * len(pts)
    for rank, j in enumerate(by_value, 1):
        values[j] = rank
    return tuple(values), tuple(p[2] for p in pts)


@lru_cache(maxsize=None)
def enumerate_geom(m: GridMatrix, n: int) -> tuple[Perm, ...]:
    """
    Exactly the size-n members of the class of m, in lexicographic order,
    as the images of all cell words of length n.
    """
    work, ori, _ = _geometry(m)
    cells = work.nonzero_cells()
    out = {
        _decode(word, ori, work.rows)[0]
        for word in itertools.product(cells, repeat=n)
    }
    return tuple(sorted(out))


def geom_member(m: GridMatrix, p: Perm) -> bool:
    """Membership via the enumerated (cached) size-|p| slice."""
    return p in _geom_member_set(m, len(p))


@lru_cache(maxsize=None)
def _geom_member_set(m: GridMatrix, n: int) -> frozenset[Perm]:
    return frozenset(enumerate_geom(m, n))


# ---------------------------------------------------------------------------
# Gridded permutations


@dataclass(frozen=True)
class GriddedPermutation:
    """A permutation with a cell assignment, in position order."""

    matrix: GridMatrix
    perm: Perm
    cells: tuple[Cell, ...]

    def __post_init__(self) -> None:
        if len(self.perm) != len(self.cells):
            raise ValueError("one cell per permutation entry is required")
        rows, cols = self.matrix.rows, self.matrix.cols
        for r, c in self.cells:
            if not (1 <= r <= rows and 1 <= c <= cols) or self.matrix.entry((r, c)) == 0:
                raise ValueError(f"cell {(r, c)} is not a non-zero cell of the matrix")
        # necessary layout conditions: columns weakly increase with position,
        # rows weakly decrease with value (row 1 holds the largest values),
        # and each cell's points follow the slope of its segment
        for (_, ca), (_, cb) in zip(self.cells, self.cells[1:]):
            if ca > cb:
                raise ValueError("cell columns must not decrease along positions")
        by_value = sorted(range(len(self.perm)), key=lambda i: self.perm[i])
        for i, j in zip(by_value, by_value[1:]):
            if self.cells[i][0] < self.cells[j][0]:
                raise ValueError("cell rows must not increase along values")
        for i in range(len(self.perm)):
            for j in range(i + 1, len(self.perm)):
                if self.cells[i] == self.cells[j]:
                    slope = self.matrix.entry(self.cells[i])
                    if (self.perm[i] < self.perm[j]) != (slope == 1):
                        raise ValueError("points inside a cell must follow its slope")

    @property
    def size(self) -> int:
        return len(self.perm)


@lru_cache(maxsize=None)
def enumerate_gridded(m: GridMatrix, n: int) -> tuple[GriddedPermutation, ...]:
    """
    All valid size-n gridded permutations on m, via the word image. The
    matrix itself must admit a consistent orientation (refining would
    change the cells that griddings refer to).
    """
    ori = _orientation(m)
    if ori is None:
        raise ValueError(
            "matrix does not admit a consistent orientation; apply refine_x2 first"
        )
    cells = m.nonzero_cells()
    seen = {
        _decode(word, ori, m.rows) for word in itertools.product(cells, repeat=n)
    }
    return tuple(
        GriddedPermutation(m, perm, cell_seq) for perm, cell_seq in sorted(seen)
    )


def rc_gridded(g: GriddedPermutation) -> GriddedPermutation:
    """The half-turn image of a gridded permutation (it lives on rc of the matrix)."""
    target = matrix_rc(g.matrix)
    n = len(g.perm)
    perm = tuple(n + 1 - g.perm[n - 1 - i] for i in range(n))
    cells = tuple(
        rc_cell(g.cells[n - 1 - i], g.matrix.rows, g.matrix.cols) for i in range(n)
    )
    return GriddedPermutation(target, perm, cells)


def is_centro_gridded(g: GriddedPermutation) -> bool:
    """True when the gridded permutation is fixed by rc (needs an rc-invariant matrix)."""
    return rc_gridded(g) == g


@dataclass(frozen=True)
class CentroGriddingResult:
    in_class: bool
    has_gridding: bool

    def __bool__(self) -> bool:
        return self.has_gridding


def has_centrosymmetric_gridding(p: Perm, m: GridMatrix) -> CentroGriddingResult:
    """
    Whether some gridding of p on m is fixed by rc. A member of the class
    always has griddings, but possibly none of them centrosymmetric;
    in_class=False tags permutations outside the class.
    """
    if not is_rc_matrix(m):
        raise ValueError("centrosymmetric griddings need an rc-invariant matrix")
    if not is_centrosymmetric(p):
        raise ValueError("the permutation itself must be centrosymmetric")
    griddings = [g for g in enumerate_gridded(m, len(p)) if g.perm == p]
    if not griddings:
        return CentroGriddingResult(in_class=False, has_gridding=False)
    return CentroGriddingResult(
        in_class=True, has_gridding=any(is_centro_gridded(g) for g in griddings)
    )


def merge_griddings(gx: GriddedPermutation, gy: GriddedPermutation) -> GriddedPermutation:
    """
    Combine a gridding on A_X with a gridding on A_Y into the unique
    gridding on their union. Uniqueness holds because the halves share no
    row and no column, so the two point sets cannot interleave.
    """
    target = _matrix_union(gx.matrix, gy.matrix)
    rows = target.rows
    pts = []  # (position key, value key, cell)
    for g in (gx, gy):
        col_counter: dict[int, int] = {}
        row_values: dict[int, list[int]] = {}
        for (r, _c), v in zip(g.cells, g.perm):
            row_values.setdefault(r, []).append(v)
        row_rank = {
            (r, v): k for r, vs in row_values.items() for k, v in enumerate(sorted(vs))
        }
        for (r, c), v in zip(g.cells, g.perm):
            idx = col_counter.get(c, 0)
            col_counter[c] = idx + 1
            pts.append(((c, idx), (rows - r, row_rank[(r, v)]), (r, c)))
    pts.sort()
    by_value = sorted(range(len(pts)), key=lambda j: pts[j][1])
    values = [0] * len(pts)
    for rank, j in enumerate(by_value, 1):
        values[j] = rank
    return GriddedPermutation(target, tuple(values), tuple(p[2] for p in pts))


def centro_geom_counts(m: GridMatrix, max_n: int) -> list[int]:
    """
    Counts of centrosymmetric members of size 2n for n = 0..max_n, by
    plain filtering of the enumerated class (stays correct for matrices
    where the component pairing fails).
    """
    if not is_rc_matrix(m):
        raise ValueError("centrosymmetric counts need an rc-invariant matrix")
    return [
        sum(1 for p in enumerate_geom(m, 2 * n) if is_centrosymmetric(p))
        for n in range(max_n + 1)
    ]


@dataclass(frozen=True)
class GriddedCountIdentity:
    """Direct gridded counts against the two candidate split formulas."""

    direct: tuple[int, ...]
    convolution: tuple[int, ...]      # sum_k |X_k| * |Y_(n-k)|
    sum_of_squares: tuple[int, ...]   # sum_k |X_k|^2
    convolution_matches: bool
    sum_of_squares_matches: bool


def gridded_count_identity(m: GridMatrix, max_n: int) -> GriddedCountIdentity:
    """
    Compare |gridded(A)_n| with the convolution and sum-of-squares
    formulas over the split halves, reporting which one matches.
    """
    a_x, a_y = split_XY(m)
    work = _matrix_union(a_x, a_y)
    direct = tuple(len(enumerate_gridded(work, n)) for n in range(max_n + 1))
    x_counts = [len(enumerate_gridded(a_x, n)) for n in range(max_n + 1)]
    y_counts = [len(enumerate_gridded(a_y, n)) for n in range(max_n + 1)]
    convolution = tuple(
        sum(x_counts[k] * y_counts[n - k] for k in range(n + 1))
        for n in range(max_n + 1)
    )
    squares = tuple(
        sum(x_counts[k] ** 2 for k in range(n + 1)) for n in range(max_n + 1)
    )
    return GriddedCountIdentity(
        direct=direct,
        convolution=convolution,
        sum_of_squares=squares,
        convolution_matches=convolution == direct,
        sum_of_squares_matches=squares == direct,
    )
