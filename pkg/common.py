from typing import List, Sequence, Tuple


def parse_index_list(value: str) -> List[int]:
    items = [item.strip() for item in value.replace(" ", "").split(",")]
    if not all(items):
        raise ValueError(value)

    return [int(item) for item in items]


def cell_label(cell: Sequence[int]) -> str:
    row, col = cell

    return "%i,%i" % (row, col)


def label_to_cell(value: str) -> Tuple[int, int]:
    row, col = value.split(",")

    return (int(row), int(col))
