import itertools
import logging

from typing import Iterable, List, NamedTuple, Optional, Tuple


logger = logging.getLogger(__name__)


SYMPLECTIC = "symplectic"
ORDINARY = "ordinary"
MODES = (SYMPLECTIC, ORDINARY)


class IndexTupleError(Exception):
    pass


class NotIncreasingError(IndexTupleError):
    pass


class OutOfRangeError(IndexTupleError):
    pass


class NotIsotropicError(IndexTupleError):
    pass


class ShapeMismatchError(IndexTupleError):
    pass


class IndexTuple(NamedTuple):
    entries: Tuple[int, ...]
    d: int
    ambient: int
    mode: str

    def __str__(self) -> str:
        return "(%s)" % (",".join(map(str, self.entries)),)


def mirror_index(j: int, d: int) -> int:
    if d < 1:
        raise OutOfRangeError(f"d must be positive, not {d}")
    elif not 1 <= j <= 2 * d:
        raise OutOfRangeError(f"index {j} outside 1..{2 * d}")

    return 2 * d + 1 - j


def validate_tuple(
    seq: Iterable[int], d: int, mode: str = SYMPLECTIC, ambient: Optional[int] = None
) -> IndexTuple:
    entries = tuple(int(value) for value in seq)

    if mode not in MODES:
        raise ShapeMismatchError(f"unknown mode {mode!r}")
    elif d < 1:
        raise ShapeMismatchError(f"d must be positive, not {d}")

    if ambient is None:
        ambient = 2 * d
    elif mode == SYMPLECTIC and ambient != 2 * d:
        raise ShapeMismatchError(f"symplectic ambient must be {2 * d}, not {ambient}")
    elif ambient < d:
        raise ShapeMismatchError(f"ambient {ambient} smaller than d={d}")

    if len(entries) != d:
        raise ShapeMismatchError(f"expected {d} entries, found {len(entries)}")

    for left, right in zip(entries, entries[1:]):
        if left >= right:
            raise NotIncreasingError(f"entries not strictly increasing: {entries}")

    for value in entries:
        if not 1 <= value <= ambient:
            raise OutOfRangeError(f"entry {value} outside 1..{ambient}")

    if mode == SYMPLECTIC:
        present = set(entries)
        for value in entries:
            if mirror_index(value, d) in present:
                raise NotIsotropicError(
                    f"{value} and its mirror {mirror_index(value, d)} both present"
                )

    return IndexTuple(entries=entries, d=d, ambient=ambient, mode=mode)


def bruhat_leq(a: IndexTuple, b: IndexTuple) -> bool:
    _check_shapes(a, b)

    return all(left <= right for left, right in zip(a.entries, b.entries))


def is_nonempty(alpha: IndexTuple, gamma: IndexTuple) -> bool:
    return bruhat_leq(alpha, gamma)


def contains_fixed_point(
    alpha: IndexTuple, beta: IndexTuple, gamma: IndexTuple
) -> bool:
    return bruhat_leq(alpha, beta) and bruhat_leq(beta, gamma)


def complement(value: IndexTuple) -> Tuple[int, ...]:
    present = set(value.entries)

    return tuple(j for j in range(1, value.ambient + 1) if j not in present)


def all_tuples(
    d: int, mode: str = SYMPLECTIC, ambient: Optional[int] = None
) -> List[IndexTuple]:
    if ambient is None:
        ambient = 2 * d

    result = []
    for entries in itertools.combinations(range(1, ambient + 1), d):
        try:
            result.append(validate_tuple(entries, d, mode=mode, ambient=ambient))
        except NotIsotropicError:
            continue

    logger.debug("%i index tuples for d=%i, ambient=%i", len(result), d, ambient)

    return result


def _check_shapes(a: IndexTuple, b: IndexTuple) -> None:
    if (a.d, a.ambient, a.mode) != (b.d, b.ambient, b.mode):
        raise ShapeMismatchError(f"cannot compare {a} with {b}: shapes differ")
