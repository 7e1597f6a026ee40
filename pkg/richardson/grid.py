from typing import Dict, Iterable, List, NamedTuple, Tuple

from mypy_extensions import TypedDict

from richardson.indices import (
    SYMPLECTIC,
    IndexTuple,
    complement,
    mirror_index,
)


NEGATIVE = "negative"
POSITIVE = "positive"
SIGNS = (NEGATIVE, POSITIVE)


Cell = Tuple[int, int]


class GridError(Exception):
    pass


class UnsupportedModeError(GridError):
    pass


CellClass = TypedDict(
    "CellClass",
    {
        "sign": str,
        "diagonal": bool,
        "in_or": bool,
        "in_on": bool,
    },
)


class Grid(NamedTuple):
    beta: IndexTuple
    rows: Tuple[int, ...]
    cols: Tuple[int, ...]
    d: int
    ambient: int
    mode: str

    def has_cell(self, cell: Cell) -> bool:
        return cell[0] in self.rows and cell[1] in self.cols

    @property
    def symplectic(self) -> bool:
        return self.mode == SYMPLECTIC


def build_grid(beta: IndexTuple) -> Grid:
    return Grid(
        beta=beta,
        rows=complement(beta),
        cols=beta.entries,
        d=beta.d,
        ambient=beta.ambient,
        mode=beta.mode,
    )


def cells(grid: Grid) -> List[Cell]:
    return [(row, col) for row in grid.rows for col in grid.cols]


def cell_sign(cell: Cell) -> str:
    row, col = cell
    assert row != col, cell

    return NEGATIVE if row < col else POSITIVE


def transpose(cell: Cell) -> Cell:
    return (cell[1], cell[0])


def classify_cell(cell: Cell, grid: Grid) -> CellClass:
    _require_cell(cell, grid)

    row, col = cell
    sign = cell_sign(cell)
    if grid.symplectic:
        mirror = mirror_index(col, grid.d)
        diagonal = row == mirror
        in_or = row <= mirror
    else:
        diagonal = in_or = False

    return {
        "sign": sign,
        "diagonal": diagonal,
        "in_or": in_or,
        "in_on": in_or and sign == POSITIVE,
    }


def is_diagonal(cell: Cell, grid: Grid) -> bool:
    return grid.symplectic and cell[0] == mirror_index(cell[1], grid.d)


def diagonal_cells(grid: Grid) -> List[Cell]:
    if not grid.symplectic:
        return []

    return [(row, mirror_index(row, grid.d)) for row in grid.rows]


def sharp_cell(cell: Cell, grid: Grid) -> Cell:
    if not grid.symplectic:
        raise UnsupportedModeError("the # involution requires symplectic mode")

    _require_cell(cell, grid)
    row, col = cell

    return (mirror_index(col, grid.d), mirror_index(row, grid.d))


def sharp_set(values: Iterable[Cell], grid: Grid) -> Tuple[Cell, ...]:
    return tuple(sorted(sharp_cell(cell, grid) for cell in values))


def orbits(grid: Grid) -> List[Tuple[Cell, ...]]:
    if not grid.symplectic:
        return [(cell,) for cell in cells(grid)]

    result = {}  # type: Dict[Cell, Tuple[Cell, ...]]
    for cell in cells(grid):
        partner = sharp_cell(cell, grid)
        representative = min(cell, partner)
        result[representative] = tuple(sorted({cell, partner}))

    return [result[key] for key in sorted(result)]


def row_position(row: int, grid: Grid) -> int:
    return grid.rows.index(row)


def col_position(col: int, grid: Grid) -> int:
    return grid.cols.index(col)


def _require_cell(cell: Cell, grid: Grid) -> None:
    if not grid.has_cell(cell):
        raise GridError(f"{cell} is not a cell of the grid around {grid.beta}")
