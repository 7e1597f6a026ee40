import itertools

import pytest

from richardson.attach import (
    LOWER,
    UPPER,
    attach_chain,
    attach_chains,
    is_distinguished,
    is_distinguished_chain,
    is_star_set,
)
from richardson.chains import NoArrangementError
from richardson.grid import NEGATIVE, POSITIVE, UnsupportedModeError, build_grid
from richardson.indices import (
    ORDINARY,
    ShapeMismatchError,
    all_tuples,
    bruhat_leq,
    validate_tuple,
)

from instances import ordered_triples, triple_id


def test_attach_chains(d5, d5_chains):
    alpha, beta, gamma = d5

    assert attach_chain(alpha, beta, LOWER).cells == ((1, 5), (6, 10))
    assert attach_chain(gamma, beta, UPPER).cells == ((3, 2), (7, 4), (9, 8))
    assert d5_chains.t_alpha.sign == NEGATIVE
    assert d5_chains.w_gamma.sign == POSITIVE
    assert d5_chains.anchors == ((1, 5), (3, 2), (6, 10), (7, 4), (9, 8))


def test_attach_chain__equal_tuples(d5):
    _, beta, _ = d5

    assert attach_chain(beta, beta, LOWER).cells == ()
    assert attach_chain(beta, beta, UPPER).cells == ()


def test_attach_chain__not_comparable(d5):
    alpha, beta, gamma = d5

    with pytest.raises(NoArrangementError):
        attach_chain(gamma, beta, LOWER)

    with pytest.raises(NoArrangementError):
        attach_chain(alpha, beta, UPPER)


def test_attach_chain__bad_arguments(d5):
    _, beta, _ = d5

    with pytest.raises(ValueError):
        attach_chain(beta, beta, "middle")

    with pytest.raises(ShapeMismatchError):
        attach_chain(validate_tuple((1, 2), 2), beta, LOWER)


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_attach_chain_exists_iff_comparable(d):
    for target, beta in itertools.product(all_tuples(d), repeat=2):
        for side, comparable in (
            (LOWER, bruhat_leq(target, beta)),
            (UPPER, bruhat_leq(beta, target)),
        ):
            if comparable:
                chain = attach_chain(target, beta, side)
                assert len(chain.cells) == len(set(target.entries) - set(beta.entries))
            else:
                with pytest.raises(NoArrangementError):
                    attach_chain(target, beta, side)


@pytest.mark.parametrize("d", [2, 3, 4])
def test_attached_chains_are_distinguished_star_sets(d):
    for alpha, beta, gamma in ordered_triples(d):
        chains = attach_chains(alpha, beta, gamma)

        assert is_star_set(chains.t_alpha.cells, chains.grid), triple_id(
            (alpha, beta, gamma)
        )
        assert is_star_set(chains.w_gamma.cells, chains.grid)
        assert is_distinguished_chain(chains.t_alpha)
        assert is_distinguished_chain(chains.w_gamma)


def test_is_star_set(d5_grid):
    assert is_star_set([], d5_grid)
    assert is_star_set([(7, 4)], d5_grid)
    assert is_star_set([(1, 5), (6, 10)], d5_grid)
    assert not is_star_set([(1, 5)], d5_grid)


def test_is_star_set__ordinary():
    grid = build_grid(validate_tuple((1, 3), 2, mode=ORDINARY))

    with pytest.raises(UnsupportedModeError):
        is_star_set([], grid)


@pytest.mark.parametrize(
    "values, expected",
    [
        ([(3, 2), (7, 4), (9, 8)], True),
        ([(5, 1), (10, 6)], True),
        ([(5, 1), (7, 4)], False),
        ([(5, 1), (5, 2)], False),
        ([(2, 5)], False),
        ([], True),
    ],
)
def test_is_distinguished(values, expected):
    assert is_distinguished(values) is expected
