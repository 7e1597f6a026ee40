from typing import Iterable, NamedTuple, Tuple

from richardson.chains import TwistedChain, lex_min_arrangement
from richardson.grid import (
    NEGATIVE,
    POSITIVE,
    Cell,
    Grid,
    UnsupportedModeError,
    build_grid,
    sharp_set,
    transpose,
)
from richardson.indices import IndexTuple, ShapeMismatchError


LOWER = "lower"
UPPER = "upper"


class AttachedChains(NamedTuple):
    t_alpha: TwistedChain
    w_gamma: TwistedChain
    grid: Grid

    @property
    def anchors(self) -> Tuple[Cell, ...]:
        return tuple(sorted(self.t_alpha.cells + self.w_gamma.cells))


def attach_chain(target: IndexTuple, beta: IndexTuple, side: str) -> TwistedChain:
    if (target.d, target.ambient, target.mode) != (beta.d, beta.ambient, beta.mode):
        raise ShapeMismatchError(f"{target} and {beta} have different shapes")
    elif side not in (LOWER, UPPER):
        raise ValueError(f"unknown side {side!r}")

    rows = set(target.entries) - set(beta.entries)
    cols = set(beta.entries) - set(target.entries)
    chain = lex_min_arrangement(rows, cols, NEGATIVE if side == LOWER else POSITIVE)

    assert (set(beta.entries) - set(chain.cols)) | set(chain.rows) == set(
        target.entries
    ), (target, beta, chain)

    return chain


def attach_chains(
    alpha: IndexTuple, beta: IndexTuple, gamma: IndexTuple
) -> AttachedChains:
    return AttachedChains(
        t_alpha=attach_chain(alpha, beta, LOWER),
        w_gamma=attach_chain(gamma, beta, UPPER),
        grid=build_grid(beta),
    )


def is_star_set(values: Iterable[Cell], grid: Grid) -> bool:
    if not grid.symplectic:
        raise UnsupportedModeError("star sets require symplectic mode")

    values = set(values)

    return set(sharp_set(values, grid)) == values


def is_distinguished(values: Iterable[Cell]) -> bool:
    """Conditions (A) and (B) for a subset of {(r, c) : r > c}."""
    values = sorted(values)
    if any(row <= col for row, col in values):
        return False

    rows = [row for row, _ in values]
    cols = [col for _, col in values]
    if len(set(rows)) != len(rows) or len(set(cols)) != len(cols):
        return False

    for (row, col), (_, next_col) in zip(values, values[1:]):
        if not (col > next_col or row < next_col):
            return False

    return True


def is_distinguished_chain(chain: TwistedChain) -> bool:
    if chain.sign == NEGATIVE:
        return is_distinguished(transpose(cell) for cell in chain.cells)

    return is_distinguished(chain.cells)
