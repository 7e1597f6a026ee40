import itertools
import multiprocessing

import pytest

from richardson.attach import attach_chains, is_star_set
from richardson.chains import precedes
from richardson.grid import build_grid, cell_sign, cells, sharp_cell
from richardson.indices import all_tuples, validate_tuple
from richardson.paths import (
    LatticePath,
    count_path_families,
    enumerate_paths,
    family_union,
    path_endpoints,
    sharp_path,
)

from instances import D5_FAMILIES


@pytest.mark.parametrize(
    "anchor, floor, ceil",
    [
        ((1, 5), (1, 2), (3, 5)),
        ((6, 10), (6, 8), (9, 10)),
        ((3, 2), (3, 2), (3, 2)),
        ((7, 4), (7, 5), (6, 4)),
        ((9, 8), (9, 8), (9, 8)),
    ],
)
def test_path_endpoints(d5_grid, anchor, floor, ceil):
    assert path_endpoints(anchor, d5_grid) == {"floor": floor, "ceil": ceil}


def test_enumerate_paths(d5_grid):
    assert [path.cells for path in enumerate_paths((1, 5), d5_grid)] == [
        ((1, 2), (1, 4), (1, 5), (3, 5)),
        ((1, 2), (1, 4), (3, 4), (3, 5)),
    ]
    assert [path.cells for path in enumerate_paths((7, 4), d5_grid)] == [
        ((7, 5), (6, 5), (6, 4)),
        ((7, 5), (7, 4), (6, 4)),
    ]
    assert enumerate_paths((3, 2), d5_grid) == [
        LatticePath(anchor=(3, 2), cells=((3, 2),))
    ]


def test_enumerate_paths__star_filter():
    grid = build_grid(validate_tuple((1, 2, 3), 3))
    paths = enumerate_paths((6, 1), grid)

    assert [path.cells for path in paths] == [
        ((6, 3), (5, 3), (4, 3), (4, 2), (4, 1)),
        ((6, 3), (5, 3), (5, 2), (4, 2), (4, 1)),
        ((6, 3), (6, 2), (5, 2), (5, 1), (4, 1)),
        ((6, 3), (6, 2), (6, 1), (5, 1), (4, 1)),
    ]
    assert all(is_star_set(path.cells, grid) for path in paths)


def test_sharp_path(d5_grid):
    path = LatticePath(anchor=(1, 5), cells=((1, 2), (1, 4), (3, 4), (3, 5)))

    assert sharp_path(path, d5_grid) == LatticePath(
        anchor=(6, 10), cells=((6, 8), (7, 8), (7, 10), (9, 10))
    )


def test_count_path_families(d5_chains):
    result = count_path_families(d5_chains, list_families=True)

    assert result["count"] == 4
    assert [
        tuple(family[anchor].cells for anchor in sorted(family))
        for family in result["families"]
    ] == D5_FAMILIES


def test_count_path_families__without_listing(d5_chains):
    assert count_path_families(d5_chains) == {"count": 4, "families": None}


def test_count_path_families__jobs(d5_chains):
    assert count_path_families(
        d5_chains, list_families=True, jobs=4
    ) == count_path_families(d5_chains, list_families=True)


def test_count_path_families__thread_fallback(d5_chains, monkeypatch, caplog):
    def _no_fork(method):
        raise ValueError("cannot find context for %r" % (method,))

    monkeypatch.setattr(multiprocessing, "get_context", _no_fork)
    result = count_path_families(d5_chains, list_families=True, jobs=2)

    assert "fork is unavailable" in caplog.text
    assert result == count_path_families(d5_chains, list_families=True)


def test_family_unions(d5_chains):
    grid = d5_chains.grid
    families = count_path_families(d5_chains, list_families=True)["families"]
    unions = [family_union(family) for family in families]

    assert len(set(unions)) == 4
    for union in unions:
        assert len(union) == 13
        assert is_star_set(union, grid)


def test_count_path_families__empty_chains(d5):
    _, beta, _ = d5
    chains = attach_chains(beta, beta, beta)

    assert count_path_families(chains, list_families=True) == {
        "count": 1,
        "families": [{}],
    }


def test_count_path_families__coupled_diagonal():
    beta = validate_tuple((1, 2, 3), 3)
    chains = attach_chains(beta, beta, validate_tuple((2, 4, 6), 3))

    assert chains.anchors == ((4, 3), (6, 1))
    assert count_path_families(chains)["count"] == 3


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_endpoints_commute_with_sharp(d):
    for beta in all_tuples(d):
        grid = build_grid(beta)
        for cell in cells(grid):
            ends = path_endpoints(cell, grid)
            mirrored = path_endpoints(sharp_cell(cell, grid), grid)

            assert sharp_cell(ends["floor"], grid) == mirrored["ceil"]
            assert sharp_cell(ends["ceil"], grid) == mirrored["floor"]


@pytest.mark.parametrize("d", [2, 3])
def test_paths_are_one_signed_antichains(d):
    for beta in all_tuples(d):
        grid = build_grid(beta)
        for anchor in cells(grid):
            ends = path_endpoints(anchor, grid)
            for path in enumerate_paths(anchor, grid):
                assert path.cells[0] == ends["floor"]
                assert path.cells[-1] == ends["ceil"]
                assert {cell_sign(cell) for cell in path.cells} == {cell_sign(anchor)}
                assert not any(
                    precedes(u, v) or precedes(v, u)
                    for u, v in itertools.combinations(path.cells, 2)
                )


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_sharp_paths_are_admissible(d):
    for beta in all_tuples(d):
        grid = build_grid(beta)
        for anchor in cells(grid):
            mirrored = enumerate_paths(sharp_cell(anchor, grid), grid)
            partner = {path.cells for path in mirrored}
            for path in enumerate_paths(anchor, grid):
                assert sharp_path(path, grid).cells in partner, (str(beta), anchor)


def test_enumerate_paths__diagonal_anchor():
    grid = build_grid(validate_tuple((1, 3), 2))

    assert enumerate_paths((4, 1), grid) == [
        LatticePath(anchor=(4, 1), cells=((4, 3), (4, 1), (2, 1)))
    ]


def test_count_path_families__small_instance():
    alpha, beta, gamma = (
        validate_tuple(values, 2) for values in ((1, 2), (1, 3), (3, 4))
    )
    chains = attach_chains(alpha, beta, gamma)
    result = count_path_families(chains, list_families=True)

    assert result["count"] == 1
    assert len(family_union(result["families"][0])) == 4
