import random

import pytest

from pairweight import (
    BudgetError,
    ParameterError,
    Regime,
    WeightDistribution,
    ZERO,
    check_pair_identity,
    codeword,
    dimension,
    enumerate_code,
    hamming_weight,
    hamming_weight_distribution,
    is_mds_symbol_pair,
    make_params,
    pair_weight_distribution,
    puncture_half,
    symbol_pair_weight,
    t_count,
    t_value_distribution,
)


def test_make_params_examples():
    p1 = make_params(3, 1, 3, 2, 2)
    assert (p1.q, p1.r, p1.n) == (3, 27, 26)
    assert p1.regime is Regime.COPRIME
    p2 = make_params(2, 2, 4, 3, 3)
    assert (p2.q, p2.r, p2.n) == (4, 256, 255)
    assert p2.regime is Regime.COPRIME
    p3 = make_params(3, 1, 2, 2, 2)
    assert (p3.q, p3.n) == (3, 8)
    assert p3.regime is Regime.QUADRATIC_ODD
    p4 = make_params(3, 2, 2, 4, 2)  # q = 9, (q-1)/h = 2 even
    assert p4.regime is Regime.QUADRATIC_EVEN


def test_make_params_reports_all_violations():
    with pytest.raises(ParameterError) as err:
        make_params(3, 1, 2, 3, 3)  # h does not divide q-1 = 2
    assert any("h must divide" in v for v in err.value.violations)
    with pytest.raises(ParameterError) as err:
        make_params(3, 1, 2, 2, 1)  # e too small
    assert any("e must be > 1" in v for v in err.value.violations)
    with pytest.raises(ParameterError) as err:
        make_params(4, 1, 2, 3, 3)
    assert any("prime" in v for v in err.value.violations)
    with pytest.raises(ParameterError) as err:
        make_params(5, 1, 2, 4, 3)  # 3 does not divide 4
    assert any("e must divide h" in v for v in err.value.violations)


def test_derived_generators():
    params = make_params(3, 1, 3, 2, 2)
    ctx = params.ctx
    # g has multiplicative order n, beta has order e
    seen = {params.g.exp * i % (params.r - 1) for i in range(params.n)}
    assert len(seen) == params.n
    assert ctx.pow(params.beta, params.e) == ctx.one
    assert params.beta != ctx.one


def test_zero_codeword():
    params = make_params(3, 1, 3, 2, 2)
    c = codeword(params, ZERO, ZERO)
    assert hamming_weight(c) == 0
    assert symbol_pair_weight(c) == 0


def test_codeword_symbols_lie_in_subfield():
    params = make_params(2, 2, 2, 3, 3)
    ctx = params.ctx
    rng = random.Random(5)
    for _ in range(10):
        a = ctx.at_index(rng.randrange(params.r))
        b = ctx.at_index(rng.randrange(params.r))
        c = codeword(params, a, b)
        assert len(c) == params.n
        assert all(ctx.is_in_subfield(x, params.s) for x in c.symbols)


def test_single_nonzero_codeword_weight_18():
    # b = 0 rows of the first example family all have Hamming weight 18
    params = make_params(3, 1, 3, 2, 2)
    c = codeword(params, params.ctx.one, ZERO)
    assert hamming_weight(c) == 18
    assert symbol_pair_weight(c) == params.n - t_count(params, params.ctx.one, ZERO)


def test_cyclic_shift_closure():
    params = make_params(3, 1, 3, 2, 2)
    ctx = params.ctx
    bg = ctx.mul(params.beta, params.g)
    rng = random.Random(1)
    for _ in range(20):
        a = ctx.at_index(rng.randrange(params.r))
        b = ctx.at_index(rng.randrange(params.r))
        c0 = codeword(params, a, b).symbols
        c1 = codeword(params, ctx.mul(a, params.g), ctx.mul(b, bg)).symbols
        assert c1 == c0[1:] + c0[:1]


def test_pair_weight_of_synthetic_words():
    from pairweight import Codeword

    params = make_params(3, 1, 2, 2, 2)
    one = params.ctx.one
    n = params.n
    allzero = Codeword(symbols=(ZERO,) * n)
    assert symbol_pair_weight(allzero) == 0
    single = Codeword(symbols=(one,) + (ZERO,) * (n - 1))
    assert symbol_pair_weight(single) == 2  # touches two adjacent pairs
    dense = Codeword(symbols=(one,) * n)
    assert symbol_pair_weight(dense) == n


def test_t_count_cases_first_example():
    params = make_params(3, 1, 3, 2, 2)
    ctx = params.ctx
    assert t_count(params, ZERO, ZERO) == params.n
    assert t_count(params, ctx.one, ZERO) == 2
    assert t_count(params, ZERO, ctx.one) == 2
    # -a/b inside <beta> = {1, -1}
    assert t_count(params, ctx.one, ctx.neg(ctx.one)) == 8
    assert t_count(params, ctx.one, ctx.one) == 8


def test_t_count_matches_codeword_route_exhaustive_f27():
    params = make_params(3, 1, 3, 2, 2)
    ctx = params.ctx
    for ai in range(params.r):
        for bi in range(params.r):
            a, b = ctx.at_index(ai), ctx.at_index(bi)
            wp = symbol_pair_weight(codeword(params, a, b))
            assert wp == params.n - t_count(params, a, b)


def test_t_distribution_first_example():
    params = make_params(3, 1, 3, 2, 2)
    assert t_value_distribution(params) == {26: 1, 8: 52, 5: 104, 2: 572}


def test_pair_distribution_first_example():
    params = make_params(3, 1, 3, 2, 2)
    dist = pair_weight_distribution(params)
    assert dist.counts == {0: 1, 18: 52, 21: 104, 24: 572}
    assert dist.total == 729
    assert dist.enumerator() == "1 + 52z^18 + 104z^21 + 572z^24"


def test_pair_distribution_m2_example():
    params = make_params(3, 1, 2, 2, 2)
    dist = pair_weight_distribution(params)
    assert dist.counts == {0: 1, 4: 8, 6: 16, 8: 56}


def test_hamming_distribution_and_minimum():
    params = make_params(3, 1, 3, 2, 2)
    dist = hamming_weight_distribution(params)
    assert dist.total == 729
    assert dist.counts[0] == 1
    assert dist.min_nonzero_weight() == 9  # h q^(m-1) (e-1)/e


def test_dimension_examples():
    assert dimension(make_params(3, 1, 3, 2, 2)) == 6
    assert dimension(make_params(5, 1, 3, 4, 4)) == 6
    assert dimension(make_params(3, 1, 2, 2, 2)) == 4
    assert dimension(make_params(3, 1, 1, 2, 2)) == 2  # m = 1 degenerate family


def test_worker_invariance():
    params = make_params(3, 1, 3, 2, 2)
    serial = pair_weight_distribution(params, workers=1)
    parallel = pair_weight_distribution(params, workers=2)
    assert serial == parallel


def test_budget_guard():
    params = make_params(3, 1, 3, 2, 2)
    with pytest.raises(BudgetError) as err:
        pair_weight_distribution(params, budget=100)
    assert err.value.required == 27 * 27 * 26


def test_identity_dual_route_small_fields():
    for args in [(3, 1, 3, 2, 2), (3, 1, 2, 2, 2), (2, 2, 2, 3, 3), (5, 1, 2, 2, 2)]:
        assert check_pair_identity(make_params(*args)) == 0


def test_sandwich_property_enumerated():
    for args in [(3, 1, 3, 2, 2), (3, 1, 2, 2, 2), (5, 1, 2, 4, 2)]:
        summary = enumerate_code(make_params(*args))
        assert summary.sandwich_violations == 0


def test_puncture_requires_preconditions():
    with pytest.raises(ParameterError):
        puncture_half(make_params(3, 1, 3, 2, 2))  # n = 26 not 0 mod 4
    with pytest.raises(ParameterError):
        puncture_half(make_params(2, 2, 4, 3, 3))  # e = 3


def test_puncture_q9_h4_example():
    params = make_params(3, 2, 2, 4, 2)
    punctured = puncture_half(params)
    assert punctured.n == 20
    dist = punctured.pair_weight_distribution()
    assert dist.counts == {0: 1, 16: 80, 18: 640, 20: 5840}


def test_puncture_q17_h2_is_mds():
    params = make_params(17, 1, 2, 2, 2)
    punctured = puncture_half(params)
    assert punctured.n == 18
    summary = punctured.enumerate()
    dist = summary.punctured_pair
    assert dist.counts == {0: 1, 16: 288, 17: 4608, 18: 78624}
    assert dist.min_nonzero_weight() == 16
    assert summary.halving_violations == 0
    assert is_mds_symbol_pair(18, 4, 16, 17)


def test_puncture_halves_weights_codeword_by_codeword():
    params = make_params(5, 1, 2, 2, 2)  # [6,4] after puncturing
    summary = enumerate_code(params, punctured=True)
    assert summary.halving_violations == 0
    punctured = puncture_half(params)
    ctx = params.ctx
    rng = random.Random(2)
    for _ in range(25):
        a = ctx.at_index(rng.randrange(params.r))
        b = ctx.at_index(rng.randrange(params.r))
        full = symbol_pair_weight(codeword(params, a, b))
        half = symbol_pair_weight(punctured.codeword(a, b)) if punctured.n >= 2 else 0
        assert full == 2 * half


def test_is_mds_symbol_pair():
    assert is_mds_symbol_pair(18, 4, 16, 17)
    assert is_mds_symbol_pair(6, 2, 6, 7)  # constant-weight degenerate family
    assert not is_mds_symbol_pair(26, 6, 18, 3)
    with pytest.raises(ParameterError):
        is_mds_symbol_pair(10, 2, 11, 3)


def test_weight_distribution_validation():
    with pytest.raises(ValueError):
        WeightDistribution(counts={0: 1, 2: 3}, total=5)
    dist = WeightDistribution(counts={0: 1, 4: 8}, total=9)
    assert dist.support == [0, 4]
    assert dist.as_pairs() == [[0, 1], [4, 8]]
