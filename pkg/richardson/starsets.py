import logging

from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from mypy_extensions import TypedDict

from richardson.attach import AttachedChains, is_star_set
from richardson.chains import chain_bounded
from richardson.grid import (
    NEGATIVE,
    POSITIVE,
    Cell,
    Grid,
    cell_sign,
    is_diagonal,
    orbits,
    sharp_cell,
)


logger = logging.getLogger(__name__)


# maximum number of #-orbits (or raw cells in ordinary mode) searched exhaustively
DEFAULT_ORBIT_BUDGET = 24


class BudgetExceededError(Exception):
    pass


StarSetCount = TypedDict(
    "StarSetCount",
    {
        "max_degree": int,
        "count": int,
        "sets": Optional[List[Tuple[Cell, ...]]],
    },
)


SpecialMultiset = Dict[Cell, int]


def count_max_bounded_star_sets(
    chains: AttachedChains,
    list_sets: bool = False,
    budget: int = DEFAULT_ORBIT_BUDGET,
    prune: bool = True,
) -> StarSetCount:
    return _maximal_sets(chains, orbits(chains.grid), list_sets, budget, prune)


def max_negative_star_sets(
    chains: AttachedChains, budget: int = DEFAULT_ORBIT_BUDGET
) -> StarSetCount:
    candidates = [
        orbit for orbit in orbits(chains.grid) if cell_sign(orbit[0]) == NEGATIVE
    ]

    return _maximal_sets(chains, candidates, True, budget, True)


def max_positive_star_sets(
    chains: AttachedChains, budget: int = DEFAULT_ORBIT_BUDGET
) -> StarSetCount:
    candidates = [
        orbit for orbit in orbits(chains.grid) if cell_sign(orbit[0]) == POSITIVE
    ]

    return _maximal_sets(chains, candidates, True, budget, True)


def expand_to_special(values: Iterable[Cell], grid: Grid) -> SpecialMultiset:
    values = sorted(set(values))
    assert is_star_set(values, grid), values

    return {cell: 2 if is_diagonal(cell, grid) else 1 for cell in values}


def underlying_set(multiset: SpecialMultiset) -> Tuple[Cell, ...]:
    return tuple(sorted(cell for cell, count in multiset.items() if count > 0))


def is_special_multiset(multiset: SpecialMultiset, grid: Grid) -> bool:
    for cell, count in multiset.items():
        if count < 0 or multiset.get(sharp_cell(cell, grid), 0) != count:
            return False
        elif is_diagonal(cell, grid) and count % 2:
            return False

    return True


def is_star_star_multiset(multiset: SpecialMultiset, grid: Grid) -> bool:
    for cell, count in multiset.items():
        if sharp_cell(cell, grid) not in multiset:
            return False
        elif count != (2 if is_diagonal(cell, grid) else 1):
            return False

    return True


def _maximal_sets(
    chains: AttachedChains,
    candidates: Sequence[Tuple[Cell, ...]],
    list_sets: bool,
    budget: int,
    prune: bool,
) -> StarSetCount:
    if len(candidates) > budget:
        raise BudgetExceededError(
            f"{len(candidates)} orbits exceed the search budget of {budget}"
        )

    def _bounded(values: Sequence[Cell]) -> bool:
        return chain_bounded(values, chains.t_alpha, chains.w_gamma)

    if prune:
        # subsets of bounded sets are bounded
        candidates = [orbit for orbit in candidates if _bounded(orbit)]

    remaining = [0] * (len(candidates) + 1)
    for idx in reversed(range(len(candidates))):
        remaining[idx] = remaining[idx + 1] + len(candidates[idx])

    best = -1
    found = []  # type: List[Tuple[Cell, ...]]
    visited = 0

    def _visit(index: int, current: Tuple[Cell, ...]) -> None:
        nonlocal best, visited
        visited += 1
        if prune and len(current) + remaining[index] < best:
            return
        elif index == len(candidates):
            if not (prune or _bounded(current)):
                return
            elif len(current) > best:
                best = len(current)
                found.clear()

            if len(current) == best:
                found.append(tuple(sorted(current)))
            return

        extended = current + candidates[index]
        if not prune or _bounded(extended):
            _visit(index + 1, extended)
        _visit(index + 1, current)

    _visit(0, ())
    logger.debug(
        "visited %i nodes over %i orbits; %i sets of degree %i",
        visited,
        len(candidates),
        len(found),
        best,
    )

    return {
        "max_degree": best,
        "count": len(found),
        "sets": sorted(found) if list_sets else None,
    }
