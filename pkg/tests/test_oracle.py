"""Tests for the finite-field oracle: shapes, Kirillov forms and r-matrices."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from meander_py.composition import SeaweedPair, parse_pair
from meander_py.enumeration import enumerate_pairs, random_pairs
from meander_py.errors import DegenerateTrials, InvalidModulus, SingularForm
from meander_py.index import Method, dk_index, is_frobenius
from meander_py.oracle import (
    DEFAULT_PRIME, build_rmatrix, check_prime, cybe_residual, frobenius_functional,
    functional_to_dict, inverse_mod_p, kirillov_form, oracle_index, oracle_report,
    perturb, random_functional, rank_mod_p, seaweed_shape, sl_basis,
)

from .strategies import pairs

P = DEFAULT_PRIME


def test_shape_borel_gl2():
    """Test the shape of the gl2 Borel."""
    shape = seaweed_shape(parse_pair("1,1|2"))
    assert shape.positions() == [(1, 1), (1, 2), (2, 2)]
    assert shape.dim_sl == 2


def test_shape_full_matrix():
    """Test the shape of the whole seaweed."""
    assert seaweed_shape(parse_pair("4|4")).dim_gl == 16


@pytest.mark.parametrize("a, b", [(1, 1), (2, 3), (4, 1), (3, 3)])
def test_shape_maximal_parabolic_dimension(a, b):
    """Test the dimension of maximal parabolics."""
    assert seaweed_shape(SeaweedPair.of((a, b), (a + b,))).dim_gl == a * a + a * b + b * b


def test_shape_mixed_flags():
    """Test a shape mixing both flags."""
    shape = seaweed_shape(parse_pair("3,1,3,2|4,2,3"))
    assert shape.dim_gl == 26
    rows = shape.picture().splitlines()
    assert rows[0] == "* * * * . . . . ."
    assert rows[6] == ". . . . * * * * *"


def test_sl_basis_dimension():
    """Test that the sl basis is one smaller."""
    shape = seaweed_shape(parse_pair("5,2,2|2,4,3"))
    basis = sl_basis(shape)
    assert len(basis) == shape.dim_sl
    assert basis.labels[-1] == "H(8)"


def test_rank_mod_p():
    """Test rank over F_p."""
    assert rank_mod_p(np.array([[1, 2], [2, 4]]), 7) == 1
    assert rank_mod_p(np.array([[1, 2], [3, 4]]), 7) == 2
    assert rank_mod_p(np.zeros((0, 0), dtype=np.int64), 7) == 0


def test_inverse_mod_p():
    """Test inverses over F_p."""
    matrix = np.array([[2, 1], [1, 1]], dtype=np.int64)
    inverse = inverse_mod_p(matrix, 101)
    assert ((matrix @ inverse) % 101 == np.eye(2, dtype=np.int64)).all()
    with pytest.raises(SingularForm):
        inverse_mod_p(np.array([[1, 2], [2, 4]], dtype=np.int64), 101)


def test_check_prime():
    """Test modulus validation."""
    check_prime(P, 12)
    with pytest.raises(InvalidModulus):
        check_prime(2 ** 31 + 11, 3)
    with pytest.raises(InvalidModulus):
        check_prime(7, 2)
    with pytest.raises(InvalidModulus):
        check_prime(10, 2)


def test_kirillov_form_on_the_sl2_borel():
    """Test B_F on the sl2 Borel."""
    form = kirillov_form(parse_pair("1,1|2"), {(1, 2): 1}, basis="sl")
    assert form.basis.labels == ("(1,2)", "H(1)")
    assert form.matrix.tolist() == [[0, P - 2], [2, 0]]
    assert form.is_nondegenerate()


def test_kirillov_form_is_skew():
    """Test skew-symmetry for a fixed functional."""
    form = kirillov_form(parse_pair("2,1|3"), {(1, 2): 3, (1, 3): 5, (2, 3): 7, (1, 1): 1})
    assert not ((form.matrix + form.matrix.T) % P).any()


@settings(max_examples=60, deadline=None)
@given(pairs(max_n=5), st.integers(0, 2**32 - 1), st.sampled_from(["gl", "sl"]))
def test_sampled_forms_are_skew_with_even_rank(pair, seed, basis):
    """Test that B_F is skew with zero diagonal and even rank for random F."""
    functional = random_functional(seaweed_shape(pair), np.random.default_rng(seed), P)
    form = kirillov_form(pair, functional, basis=basis)
    assert not ((form.matrix + form.matrix.T) % P).any()
    assert not np.diagonal(form.matrix).any()
    assert form.rank % 2 == 0


@pytest.mark.parametrize("text, expected", [
    ("1,1|2", (1, 0)),
    ("5,2,2|2,4,3", (3, 2)),
    ("3,2,2|2,5", (1, 0)),
    ("4|4", (4, 3)),
])
def test_oracle_index_golden(text, expected):
    """Test oracle indices of the worked examples."""
    result = oracle_index(parse_pair(text), trials=5)
    assert (result.index_gl, result.index_sl) == expected
    assert result.dim == seaweed_shape(parse_pair(text)).dim_gl


def test_oracle_index_sl_basis():
    """Test the oracle on the sl basis."""
    result = oracle_index(parse_pair("5,2,2|2,4,3"), basis="sl")
    assert result.index_sl == 2
    assert result.basis == "sl"


def test_oracle_index_is_seeded():
    """Test that the oracle is reproducible."""
    pair = parse_pair("3,2,2|2,5")
    assert oracle_index(pair, seed=7) == oracle_index(pair, seed=7)


def test_oracle_index_workers():
    """Test the oracle with worker processes."""
    pair = parse_pair("5,2,2|2,4,3")
    assert oracle_index(pair, trials=4, workers=2) == oracle_index(pair, trials=4)


def test_oracle_report():
    """Test the oracle report."""
    report = oracle_report(parse_pair("5,2,2|2,4,3"))
    assert report.index_sl == 2
    assert report.method is Method.ORACLE


def test_degenerate_trials():
    """Test that too few trials are reported."""
    with pytest.raises(DegenerateTrials):
        oracle_index(parse_pair("1,1|2"), certified_rank=3)


def test_oracle_agrees_with_meander():
    """Test agreement with the meander for n <= 4."""
    for n in range(1, 5):
        for pair in enumerate_pairs(n):
            assert oracle_index(pair).index_sl == dk_index(pair).index_sl, pair


@pytest.mark.slow
def test_oracle_agrees_with_meander_exhaustive():
    """Test agreement with the meander for n <= 6."""
    for n in range(5, 7):
        for pair in enumerate_pairs(n):
            assert oracle_index(pair).index_sl == dk_index(pair).index_sl, pair


@pytest.mark.slow
def test_oracle_agrees_with_meander_random():
    """Test agreement on random pairs."""
    for pair in random_pairs(200, 7, 9, seed=2024):
        assert oracle_index(pair).index_sl == dk_index(pair).index_sl, pair


def test_frobenius_functional():
    """Test finding a Frobenius functional."""
    assert frobenius_functional(parse_pair("5,2,2|2,4,3")) is None
    pair = parse_pair("2,3|5")
    functional = frobenius_functional(pair)
    assert functional is not None
    assert kirillov_form(pair, functional, basis="sl").is_nondegenerate()


def test_functional_to_dict():
    """Test the dictionary form of a functional."""
    assert functional_to_dict({(2, 3): 4, (1, 2): 1}) == {"(1,2)": 1, "(2,3)": 4}


def test_rmatrix_sl2_borel():
    """Test the r-matrix of the sl2 Borel."""
    r = build_rmatrix(parse_pair("1,1|2"), {(1, 2): 1})
    assert r.is_antisymmetric()
    assert r.wedge_terms() == {("(1,2)", "H(1)"): pow(2, -1, P)}
    assert cybe_residual(r, seaweed_shape(parse_pair("1,1|2"))) == 0


def test_rmatrix_singular_for_non_frobenius():
    """Test that a non-Frobenius form is singular."""
    with pytest.raises(SingularForm):
        build_rmatrix(parse_pair("2|2"), {(1, 2): 1, (2, 1): 1, (1, 1): 1})


def test_cybe_and_its_perturbation():
    """Test the CYBE residual and a perturbation."""
    pair = parse_pair("2,1|3")
    functional = frobenius_functional(pair)
    assert functional is not None
    r = build_rmatrix(pair, functional)
    shape = seaweed_shape(pair)
    assert cybe_residual(r, shape) == 0

    size = len(r.basis)
    residuals = [cybe_residual(perturb(r, u, v), shape)
                 for u in range(size) for v in range(u + 1, size)]
    assert any(residuals)


def frobenius_pairs_satisfy_cybe(max_n):
    for n in range(1, max_n + 1):
        for pair in enumerate_pairs(n):
            if not is_frobenius(pair):
                continue
            functional = frobenius_functional(pair)
            assert functional is not None, pair
            r = build_rmatrix(pair, functional)
            assert cybe_residual(r, seaweed_shape(pair)) == 0, pair


def test_frobenius_pairs_satisfy_cybe():
    """Test CYBE for Frobenius pairs with n <= 4."""
    frobenius_pairs_satisfy_cybe(4)


@pytest.mark.slow
def test_frobenius_pairs_satisfy_cybe_exhaustive():
    """Test CYBE for Frobenius pairs with n = 5."""
    frobenius_pairs_satisfy_cybe(5)
