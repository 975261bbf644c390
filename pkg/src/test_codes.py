"""Linear codes: duality, restrictions, recovery, shifted-dual spectra and Prange."""

import math

import numpy as np
import pytest

from codes import (
    BudgetExceeded,
    DegenerateTarget,
    InconsistentRestriction,
    LinearCode,
    NoHit,
    RankDeficient,
    coset_spectra,
    coset_spectrum,
    echelon_pivots,
    expected_coset_count,
    full_code,
    full_rank_probability_bound,
    prange_short_codeword,
    random_code,
    rank,
    repetition_code,
    row_reduce,
    second_moment_bound,
    solve,
    zero_code,
)
from gf import field_of_order, hamming_weight


@pytest.fixture
def binary():
    return field_of_order(2)


def test_random_code_is_reproducible(binary):
    a = random_code(binary, 4, 2, np.random.default_rng(11))
    b = random_code(binary, 4, 2, np.random.default_rng(11))
    assert a.generator.shape == (2, 4)
    assert np.array_equal(a.generator, b.generator)


def test_full_rank_probability(binary):
    rng = np.random.default_rng(5)
    k, m, draws = 5, 15, 2000
    full = sum(random_code(binary, m, k, rng).is_full_rank for _ in range(draws))
    bound = full_rank_probability_bound(2, k, m)
    sigma = math.sqrt(bound * (1 - bound) / draws)
    assert full / draws >= bound - 3 * sigma - 1e-3


def test_single_symbol_ternary_rank():
    field = field_of_order(3)
    ranks = [LinearCode(field, [[x]]).rank for x in range(3)]
    assert ranks == [0, 1, 1]


def test_generator_and_parity_check_are_orthogonal():
    for q in (2, 3, 4):
        field = field_of_order(q)
        code = random_code(field, 9, 4, np.random.default_rng(q))
        assert not np.any(field.matmul(code.generator, code.parity_check.T))
        assert code.parity_check.shape[0] == code.n - code.rank


def test_dual_involution():
    rng = np.random.default_rng(8)
    for q in (2, 3, 4):
        field = field_of_order(q)
        for _ in range(20):
            n = int(rng.integers(2, 7))
            code = random_code(field, n, int(rng.integers(1, n + 1)), rng)
            assert code.dual().dual().codeword_set() == code.codeword_set()


def test_full_code_and_repetition_duals(binary):
    assert full_code(binary, 4).dual().codeword_set() == {(0, 0, 0, 0)}
    even = repetition_code(binary, 3).dual().codeword_set()
    assert even == {(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 0)}


def test_puncture_and_shorten_duality():
    rng = np.random.default_rng(21)
    for q, n, k in ((2, 8, 3), (3, 6, 2)):
        field = field_of_order(q)
        code = random_code(field, n, k, rng)
        positions = np.sort(rng.choice(n, size=n // 2 + 1, replace=False))
        assert code.puncture(positions).dual().codeword_set() == code.dual().shorten(positions).codeword_set()
        assert code.shorten(positions).dual().codeword_set() == code.dual().puncture(positions).codeword_set()


def test_pseudo_inverse_identity(binary):
    code = full_code(binary, 3)
    assert np.array_equal(code.pseudo_inverse(range(3)), np.eye(3, dtype=np.int64))


def test_pseudo_inverse_property():
    field = field_of_order(3)
    rng = np.random.default_rng(4)
    code = random_code(field, 12, 4, rng)
    while not code.is_full_rank:
        code = random_code(field, 12, 4, rng)
    inverse = code.pseudo_inverse(range(12))
    messages = field.random_elements(rng, (100, 4))
    assert np.array_equal(field.matmul(code.encode(messages), inverse), messages)


def test_pseudo_inverse_of_zero_columns(binary):
    code = LinearCode(binary, [[1, 0, 0], [0, 1, 0]])
    with pytest.raises(RankDeficient):
        code.pseudo_inverse([2])


def test_recover_from_coordinates(binary):
    code = repetition_code(binary, 3)
    assert code.recover_from_coordinates([0], [1]).tolist() == [1, 1, 1]

    rng = np.random.default_rng(9)
    code = random_code(binary, 10, 4, rng)
    c = code.random_codeword(rng)
    assert np.array_equal(code.recover_from_coordinates(range(10), c), c)
    subset = None
    while subset is None:
        candidate = np.sort(rng.choice(10, size=6, replace=False))
        if rank(binary, code.generator[:, candidate]) == code.k:
            subset = candidate
    assert np.array_equal(code.recover_from_coordinates(subset, c[subset]), c)


def test_repetition_coset_spectra(binary):
    code = repetition_code(binary, 3)
    assert coset_spectrum(code, [0]).weights.tolist() == [1, 0, 3, 0]
    assert coset_spectrum(code, [1]).weights.tolist() == [0, 3, 0, 1]


def test_coset_spectra_partition():
    field = field_of_order(3)
    code = random_code(field, 6, 2, np.random.default_rng(2))
    table = coset_spectra(code)
    assert int(table.weights.sum()) == 3 ** 6
    assert table.weights[0, 0] == 1
    assert np.all(table.weights[1:, 0] == 0)
    for index in np.flatnonzero(table.nonempty):
        assert table.weights[index].sum() == 3 ** code.dimension_of_dual
        single = coset_spectrum(code, table.spectrum(index).syndrome)
        assert np.array_equal(single.weights, table.weights[index])


def test_coset_budget(binary):
    with pytest.raises(BudgetExceeded):
        coset_spectrum(zero_code(binary, 12), [], budget=100)


def test_expected_coset_count_values():
    assert expected_coset_count(2, 16, 8, 0) == pytest.approx(2 ** -8)
    assert expected_coset_count(2, 16, 8, 8) == pytest.approx(12870 / 256, rel=1e-12)
    with pytest.raises(ValueError):
        expected_coset_count(2, 16, 8, 17)


@pytest.fixture(scope="module")
def sampled_coset_weights():
    """a_s(t) for a fixed nonzero syndrome over 500 random [16, 8] binary codes."""
    field = field_of_order(2)
    rng = np.random.default_rng(17)
    syndrome = np.zeros(8, dtype=np.int64)
    syndrome[0] = 1
    return np.array([coset_spectrum(random_code(field, 16, 8, rng), syndrome).weights for _ in range(500)])


def test_coset_count_mean_matches_expectation(sampled_coset_weights):
    mean = sampled_coset_weights.mean(axis=0)
    for t in range(6, 11):
        assert mean[t] == pytest.approx(expected_coset_count(2, 16, 8, t), rel=0.05)


@pytest.mark.parametrize("epsilon", [0.25, 0.5])
def test_coset_counts_concentrate(sampled_coset_weights, epsilon):
    draws = sampled_coset_weights.shape[0]
    for t in range(6, 11):
        expected = expected_coset_count(2, 16, 8, t)
        bound = second_moment_bound(2, expected, epsilon)
        assert bound < 1.0
        deviations = np.abs(sampled_coset_weights[:, t] - expected) >= epsilon * expected
        slack = 3 * math.sqrt(bound * (1 - bound) / draws)
        assert deviations.mean() <= bound + slack, t


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_solve_random_systems(q):
    field = field_of_order(q)
    rng = np.random.default_rng(60 + q)
    for rows, cols in ((12, 7), (7, 12), (9, 9), (40, 25)):
        a = field.random_elements(rng, (rows, cols))
        b = field.matmul(a, field.random_elements(rng, cols))
        x, pivots = solve(field, a, b)
        assert np.array_equal(field.matmul(a, x), b)
        assert len(pivots) == rank(field, a)
        assert not np.any(np.delete(x, pivots))
    assert solve(field, np.zeros((2, 3), dtype=np.int64), np.array([0, 1])) is None


@pytest.mark.parametrize("q", [2, 3, 4])
def test_row_reduce_with_column_order(q):
    field = field_of_order(q)
    rng = np.random.default_rng(70 + q)
    matrix = field.random_elements(rng, (6, 10))
    matrix[:, 3] = 0
    order = [int(c) for c in rng.permutation(10)[:7]]
    reduced, pivots = row_reduce(field, matrix, column_order=order)
    r = len(pivots)
    assert pivots == [c for c in order if c in pivots]
    assert pivots == echelon_pivots(field, matrix, column_order=order)
    assert np.array_equal(reduced[:r][:, pivots], np.eye(r, dtype=np.int64))
    assert not np.any(reduced[r:][:, order])
    assert rank(field, np.vstack([matrix, reduced])) == rank(field, matrix)


def test_recovery_on_a_large_ternary_code():
    field = field_of_order(3)
    rng = np.random.default_rng(80)
    code = random_code(field, 600, 200, rng)
    c = code.random_codeword(rng)
    positions = np.sort(rng.choice(600, size=260, replace=False))
    assert np.array_equal(code.recover_from_coordinates(positions, c[positions]), c)
    tampered = c[positions].copy()
    tampered[0] = (tampered[0] + 1) % 3
    with pytest.raises(InconsistentRestriction):
        code.recover_from_coordinates(positions, tampered)


def test_prange_weight_one_target(binary):
    parity_check = np.array([[1, 0, 1, 0], [0, 1, 1, 0]])
    result = prange_short_codeword(binary, parity_check, np.random.default_rng(0))
    assert result.target_weight == 1
    assert hamming_weight(result.codeword) == 1
    assert not np.any(binary.matmul(parity_check, result.codeword))


@pytest.mark.parametrize("q,n,k,target", [(2, 20, 10, 5), (3, 30, 15, 10)])
def test_prange_exact_weight(q, n, k, target):
    field = field_of_order(q)
    rng = np.random.default_rng(q * n)
    parity_check = field.random_elements(rng, (n - k, n))
    result = prange_short_codeword(field, parity_check, rng)
    assert result.target_weight == target
    assert hamming_weight(result.codeword) == target
    assert not np.any(field.matmul(parity_check, result.codeword))


def test_prange_reports_histogram_on_failure(binary):
    parity_check = np.random.default_rng(1).integers(0, 2, (10, 20))
    with pytest.raises(NoHit) as err:
        prange_short_codeword(binary, parity_check, np.random.default_rng(1), max_rounds=0)
    assert err.value.result.rounds == 0


def test_prange_degenerate_target(binary):
    with pytest.raises(DegenerateTarget):
        prange_short_codeword(binary, np.eye(3, dtype=np.int64), np.random.default_rng(0))


@pytest.mark.slow
def test_prange_success_rate_at_n200(binary):
    rng = np.random.default_rng(200)
    hits = 0
    for _ in range(100):
        parity_check = binary.random_elements(rng, (100, 200))
        try:
            result = prange_short_codeword(binary, parity_check, rng)
        except NoHit:
            continue
        assert hamming_weight(result.codeword) == 50
        hits += 1
    assert hits >= 99


def test_code_json_round_trip(tmp_path):
    field = field_of_order(4)
    code = random_code(field, 5, 2, np.random.default_rng(3))
    path = tmp_path / "code.json"
    code.save(path)
    loaded = LinearCode.load(path)
    assert loaded.field == field
    assert np.array_equal(loaded.generator, code.generator)
