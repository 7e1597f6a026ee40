import logging

from typing import Iterable, List, NamedTuple, Sequence, Tuple

from mypy_extensions import TypedDict

from richardson.grid import NEGATIVE, POSITIVE, SIGNS, Cell, cell_sign, transpose


logger = logging.getLogger(__name__)


class SignError(Exception):
    pass


class NoArrangementError(Exception):
    pass


class TwistedChain(NamedTuple):
    cells: Tuple[Cell, ...]
    sign: str

    @property
    def rows(self) -> Tuple[int, ...]:
        return tuple(sorted(row for row, _ in self.cells))

    @property
    def cols(self) -> Tuple[int, ...]:
        return tuple(sorted(col for _, col in self.cells))


CellComparison = TypedDict(
    "CellComparison",
    {
        "prec": bool,
        "dom": bool,
        "meet": Cell,
    },
)


def precedes(u: Cell, v: Cell) -> bool:
    """u ≺ v: v lies strictly to the right of and strictly above u."""
    return u[1] < v[1] and u[0] > v[0]


def dominated(u: Cell, v: Cell) -> bool:
    """u ⊴ v, the weak form of ≺."""
    return u[1] <= v[1] and u[0] >= v[0]


def meet(u: Cell, v: Cell) -> Cell:
    return (max(u[0], v[0]), min(u[1], v[1]))


def compare_cells(u: Cell, v: Cell) -> CellComparison:
    return {
        "prec": precedes(u, v),
        "dom": dominated(u, v),
        "meet": meet(u, v),
    }


def split_by_sign(values: Iterable[Cell]) -> Tuple[List[Cell], List[Cell]]:
    negative = []  # type: List[Cell]
    positive = []  # type: List[Cell]
    for cell in sorted(set(values)):
        if cell_sign(cell) == NEGATIVE:
            negative.append(cell)
        else:
            positive.append(cell)

    return negative, positive


def is_twisted_chain(values: Iterable[Cell], sign: str) -> bool:
    values = _require_sign(values, sign)
    if sign == POSITIVE:
        values = [transpose(cell) for cell in values]

    coordinates = [value for cell in values for value in cell]
    if len(set(coordinates)) != len(coordinates):
        return False

    for idx, u in enumerate(values):
        for v in values[idx + 1 :]:
            if not (precedes(u, v) or precedes(v, u) or meet(u, v)[0] >= meet(u, v)[1]):
                return False

    return True


def lex_min_arrangement(
    rows: Iterable[int], cols: Iterable[int], sign: str
) -> TwistedChain:
    if sign not in SIGNS:
        raise SignError(f"unknown sign {sign!r}")

    rows = sorted(set(rows))
    cols = sorted(set(cols))
    if sign == NEGATIVE:
        pairs = _arrange(rows, cols)
    else:
        pairs = [transpose(pair) for pair in _arrange(cols, rows)]

    chain = TwistedChain(cells=tuple(sorted(pairs)), sign=sign)
    assert is_twisted_chain(chain.cells, sign), chain

    return chain


def depth(values: Iterable[Cell], x: Cell) -> int:
    """Length of the longest ≺-chain u_1 ≺ … ≺ u_r in `values` with x ⊴ u_1.

    Every element of such a chain dominates x, so this is the longest chain
    in the up-set of x.
    """
    above = sorted(
        (cell for cell in set(values) if dominated(x, cell)),
        key=lambda cell: (cell[1], -cell[0]),
    )

    # longest chain ending in each element; ≺ strictly increases the column
    lengths = []  # type: List[int]
    for idx, v in enumerate(above):
        best = 0
        for u, length in zip(above[:idx], lengths):
            if length > best and precedes(u, v):
                best = length
        lengths.append(best + 1)

    return max(lengths, default=0)


def set_dominates(lower: Iterable[Cell], upper: Iterable[Cell], sign: str) -> bool:
    """lower ⊴ upper for one-signed sets.

    Positive sets are compared through the transpose, with the roles of the
    two sets exchanged.
    """
    lower = _require_sign(lower, sign)
    upper = _require_sign(upper, sign)
    if sign == POSITIVE:
        lower, upper = (
            [transpose(cell) for cell in upper],
            [transpose(cell) for cell in lower],
        )

    return all(depth(lower, x) >= depth(upper, x) for x in upper)


def chain_bounded(
    values: Iterable[Cell], lower: TwistedChain, upper: TwistedChain
) -> bool:
    assert lower.sign == NEGATIVE and upper.sign == POSITIVE
    negative, positive = split_by_sign(values)

    return set_dominates(lower.cells, negative, NEGATIVE) and set_dominates(
        positive, upper.cells, POSITIVE
    )


def _arrange(firsts: Sequence[int], seconds: Sequence[int]) -> List[Cell]:
    # Pairs every value of `seconds`, smallest first, with the largest unused
    # value of `firsts` that still leaves a pairing with first < second.
    if len(firsts) != len(seconds):
        raise NoArrangementError(
            f"cannot pair {len(firsts)} values with {len(seconds)} values"
        )
    elif not _pairable(firsts, seconds):
        raise NoArrangementError(f"no pairing of {list(firsts)} below {list(seconds)}")

    available = list(firsts)
    pairs = []
    for idx, second in enumerate(seconds):
        for first in sorted(available, reverse=True):
            remaining = [value for value in available if value != first]
            if first < second and _pairable(remaining, seconds[idx + 1 :]):
                pairs.append((first, second))
                available = remaining
                break
        else:
            raise AssertionError("pairing lost during arrangement")

    return pairs


def _pairable(firsts: Sequence[int], seconds: Sequence[int]) -> bool:
    return all(
        first < second for first, second in zip(sorted(firsts), sorted(seconds))
    )


def _require_sign(values: Iterable[Cell], sign: str) -> List[Cell]:
    if sign not in SIGNS:
        raise SignError(f"unknown sign {sign!r}")

    values = sorted(set(values))
    for cell in values:
        if cell_sign(cell) != sign:
            raise SignError(f"{cell} is not {sign}")

    return values
