import functools
import logging
import multiprocessing

from concurrent.futures import Executor, ProcessPoolExecutor, ThreadPoolExecutor
from typing import Dict, FrozenSet, List, NamedTuple, Optional, Tuple

from mypy_extensions import TypedDict

from richardson.attach import AttachedChains, is_star_set
from richardson.grid import (
    NEGATIVE,
    Cell,
    Grid,
    cell_sign,
    col_position,
    is_diagonal,
    row_position,
    sharp_cell,
)


logger = logging.getLogger(__name__)


class LatticePath(NamedTuple):
    anchor: Cell
    cells: Tuple[Cell, ...]


PathFamily = Dict[Cell, LatticePath]


Endpoints = TypedDict(
    "Endpoints",
    {
        "floor": Cell,
        "ceil": Cell,
    },
)


FamilyCount = TypedDict(
    "FamilyCount",
    {
        "count": int,
        "families": Optional[List[PathFamily]],
    },
)


# Paths chosen together for one #-orbit of anchors, and the cells they cover
_Choice = Tuple[Tuple[LatticePath, ...], FrozenSet[Cell]]


def path_endpoints(anchor: Cell, grid: Grid) -> Endpoints:
    row, col = anchor
    assert grid.has_cell(anchor), anchor

    if cell_sign(anchor) == NEGATIVE:
        floor = (row, min(y for y in grid.cols if y > row))
        ceil = (max(x for x in grid.rows if x < col), col)
    else:
        floor = (row, max(y for y in grid.cols if y < row))
        ceil = (min(x for x in grid.rows if x > col), col)

    return {"floor": floor, "ceil": ceil}


def enumerate_paths(anchor: Cell, grid: Grid) -> List[LatticePath]:
    sign = cell_sign(anchor)
    endpoints = path_endpoints(anchor, grid)
    # Negative paths move down or right, positive paths up or left
    step = 1 if sign == NEGATIVE else -1

    start = _position(endpoints["floor"], grid)
    target = _position(endpoints["ceil"], grid)

    found = []  # type: List[Tuple[Cell, ...]]

    def _walk(position: Tuple[int, int], trail: List[Cell]) -> None:
        if position == target:
            found.append(tuple(trail))
            return

        row_idx, col_idx = position
        for next_row, next_col in ((row_idx, col_idx + step), (row_idx + step, col_idx)):
            if (next_row - target[0]) * step > 0 or (next_col - target[1]) * step > 0:
                continue

            cell = (grid.rows[next_row], grid.cols[next_col])
            if cell_sign(cell) == sign:
                trail.append(cell)
                _walk((next_row, next_col), trail)
                trail.pop()

    _walk(start, [endpoints["floor"]])

    paths = [LatticePath(anchor=anchor, cells=cells) for cells in sorted(found)]
    if is_diagonal(anchor, grid):
        paths = [path for path in paths if is_star_set(path.cells, grid)]

    return paths


def sharp_path(path: LatticePath, grid: Grid) -> LatticePath:
    return LatticePath(
        anchor=sharp_cell(path.anchor, grid),
        cells=tuple(sharp_cell(cell, grid) for cell in reversed(path.cells)),
    )


def family_union(family: PathFamily) -> Tuple[Cell, ...]:
    return tuple(sorted(cell for path in family.values() for cell in path.cells))


def count_path_families(
    chains: AttachedChains, list_families: bool = False, jobs: int = 1
) -> FamilyCount:
    choices = _orbit_choices(chains)
    logger.debug(
        "searching %i anchor orbits with %s path choices",
        len(choices),
        [len(options) for options in choices],
    )

    if not choices:
        return {"count": 1, "families": [{}] if list_families else None}

    search_branch = functools.partial(_branch, choices, list_families)
    if jobs > 1:
        with _make_executor(jobs) as executor:
            branches = list(executor.map(search_branch, choices[0]))
    else:
        branches = [search_branch(choice) for choice in choices[0]]

    total = sum(count for count, _ in branches)
    families = None  # type: Optional[List[PathFamily]]
    if list_families:
        families = [
            {path.anchor: path for path in sorted(found)}
            for _, branch in branches
            for found in branch
        ]
        families.sort(key=_family_key)

    return {"count": total, "families": families}


def _branch(
    choices: List[List[_Choice]], list_families: bool, choice: _Choice
) -> Tuple[int, List[Tuple[LatticePath, ...]]]:
    paths, used = choice
    found = []  # type: List[Tuple[LatticePath, ...]]
    count = _search(choices, 1, used, list(paths), found if list_families else None)

    return count, found


def _make_executor(jobs: int) -> Executor:
    try:
        context = multiprocessing.get_context("fork")
    except ValueError:
        logger.warning("fork is unavailable; searching with %i threads", jobs)
        return ThreadPoolExecutor(max_workers=jobs)

    return ProcessPoolExecutor(max_workers=jobs, mp_context=context)


def _search(
    choices: List[List[_Choice]],
    index: int,
    occupied: FrozenSet[Cell],
    chosen: List[LatticePath],
    found: Optional[List[Tuple[LatticePath, ...]]],
) -> int:
    if index == len(choices):
        if found is not None:
            found.append(tuple(chosen))
        return 1

    total = 0
    for paths, used in choices[index]:
        if occupied.isdisjoint(used):
            chosen.extend(paths)
            total += _search(choices, index + 1, occupied | used, chosen, found)
            del chosen[-len(paths) :]

    return total


def _orbit_choices(chains: AttachedChains) -> List[List[_Choice]]:
    grid = chains.grid
    anchors = chains.anchors

    result = []
    for anchor in anchors:
        options = []  # type: List[_Choice]
        if not grid.symplectic or is_diagonal(anchor, grid):
            for path in enumerate_paths(anchor, grid):
                options.append(((path,), frozenset(path.cells)))
        else:
            partner = sharp_cell(anchor, grid)
            assert partner in anchors, (anchor, partner)
            if partner < anchor:
                continue

            for path in enumerate_paths(anchor, grid):
                mirrored = sharp_path(path, grid)
                if not set(path.cells) & set(mirrored.cells):
                    options.append(
                        ((path, mirrored), frozenset(path.cells + mirrored.cells))
                    )

        result.append(options)

    return result


def _family_key(family: PathFamily) -> Tuple[Tuple[Cell, ...], ...]:
    return tuple(family[anchor].cells for anchor in sorted(family))


def _position(cell: Cell, grid: Grid) -> Tuple[int, int]:
    return (row_position(cell[0], grid), col_position(cell[1], grid))
