from collections import Counter

import pytest

from pairweight import (
    NotApplicableError,
    ParameterError,
    ZERO,
    build_field,
    check_multiset_scaling,
    check_subfield_containment,
    class_of,
    class_size,
    cyclotomic_number,
    gaussian_period_closed_form_n2,
    gaussian_period_numeric,
    generalized_cyclotomic_number,
    generalized_cyclotomic_table,
)
from pairweight.cyclotomy import class_exponents, minus_one_class


def test_class_of_basics():
    ctx = build_field(3, 3)
    assert class_of(ctx, 2, ctx.one) == 0
    assert class_of(ctx, 2, ctx.element(5)) == 1
    with pytest.raises(ParameterError):
        class_of(ctx, 2, ZERO)
    with pytest.raises(ParameterError):
        class_of(ctx, 4, ctx.one)  # 4 does not divide 26


def test_class_sizes_f9():
    ctx = build_field(3, 2)
    assert class_size(ctx, 2) == 4
    per_class = Counter(class_of(ctx, 2, x) for x in ctx.nonzero_elements())
    assert per_class == {0: 4, 1: 4}


def test_order2_cyclotomic_numbers_r9():
    # r = 9 = 1 (mod 4)
    ctx = build_field(3, 2)
    assert cyclotomic_number(ctx, 2, 0, 0) == 1
    for i, j in [(0, 1), (1, 0), (1, 1)]:
        assert cyclotomic_number(ctx, 2, i, j) == 2


def test_order2_cyclotomic_numbers_r27():
    # r = 27 = 3 (mod 4)
    ctx = build_field(3, 3)
    for i, j in [(0, 0), (1, 0), (1, 1)]:
        assert cyclotomic_number(ctx, 2, i, j) == 6
    assert cyclotomic_number(ctx, 2, 0, 1) == 7


@pytest.mark.parametrize("p,d", [(3, 2), (5, 2), (7, 2), (3, 3), (11, 1), (13, 1)])
def test_order2_closed_form(p, d):
    r = p**d
    ctx = build_field(p, d)
    if r % 4 == 1:
        expected = {(0, 0): (r - 5) // 4}
        for ij in [(0, 1), (1, 0), (1, 1)]:
            expected[ij] = (r - 1) // 4
    else:
        expected = {(0, 1): (r + 1) // 4}
        for ij in [(0, 0), (1, 0), (1, 1)]:
            expected[ij] = (r - 3) // 4
    for (i, j), v in expected.items():
        assert cyclotomic_number(ctx, 2, i, j) == v


def test_order1_number_counts_everything():
    for p, d in [(3, 2), (2, 4), (5, 2)]:
        ctx = build_field(p, d)
        assert cyclotomic_number(ctx, 1, 0, 0) == ctx.r - 2


def test_total_mass_of_all_numbers():
    # every element of 1 + F_r^* except 0 lands in some class
    ctx = build_field(3, 3)
    for N in (1, 2, 13, 26):
        total = sum(
            cyclotomic_number(ctx, N, i, j) for i in range(N) for j in range(N)
        )
        assert total == ctx.r - 2


def test_generalized_consistent_with_plain():
    ctx = build_field(3, 2)
    for N in (1, 2, 4, 8):
        for i in range(N):
            for j in range(N):
                assert generalized_cyclotomic_number(
                    ctx, N, N, i, j
                ) == cyclotomic_number(ctx, N, i, j)


def test_generalized_table_matches_pointwise():
    ctx = build_field(5, 2)
    for l, f in [(6, 2), (12, 4), (24, 1), (8, 8)]:
        table = generalized_cyclotomic_table(ctx, l, f)
        for i in range(l):
            for j in range(f):
                assert table[i][j] == generalized_cyclotomic_number(ctx, l, f, i, j)


def test_shifted_even_class_square_counts():
    # constant square counts of 1 + C_2i in GF(q^2), order q+1
    ctx25 = build_field(5, 2)
    assert generalized_cyclotomic_number(ctx25, 6, 2, 2, 0) == 1
    assert generalized_cyclotomic_number(ctx25, 6, 2, 4, 0) == 1
    ctx81 = build_field(3, 4)  # q = 9
    for i in range(1, 5):
        assert generalized_cyclotomic_number(ctx81, 10, 2, 2 * i, 0) == 3
    ctx49 = build_field(7, 2)
    for i in range(1, 4):
        assert generalized_cyclotomic_number(ctx49, 8, 2, 2 * i, 0) == 2


def _check_symmetry_identities(ctx, l, f):
    r = ctx.r
    table = generalized_cyclotomic_table(ctx, l, f)
    neg_cls = minus_one_class(ctx, l)
    for i in range(l):
        for j in range(f):
            assert table[i][j] == table[(-i) % l][(j - i) % f]
    for j in range(f):
        assert sum(table[i][j] for i in range(l)) == (r - 1) // f - (1 if j == 0 else 0)
    for i in range(l):
        expected = (r - 1) // l - (1 if i % l == neg_cls else 0)
        assert sum(table[i][j] for j in range(f)) == expected


def test_symmetry_identities_small_fields():
    for p, d in [(3, 2), (3, 3), (2, 6), (5, 2), (7, 2)]:
        ctx = build_field(p, d)
        r1 = ctx.r - 1
        divisors = [n for n in range(1, r1 + 1) if r1 % n == 0]
        for l in divisors:
            for f in divisors:
                if l % f == 0:
                    _check_symmetry_identities(ctx, l, f)


def test_gaussian_periods_sum_to_minus_one():
    for p, d, N in [(3, 2, 2), (3, 3, 13), (5, 2, 6), (2, 4, 5)]:
        ctx = build_field(p, d)
        total = sum(gaussian_period_numeric(ctx, N, i) for i in range(N))
        assert abs(total - (-1)) < 1e-9


def test_order2_period_values():
    ctx9 = build_field(3, 2)
    assert abs(gaussian_period_numeric(ctx9, 2, 0) - 1) < 1e-9
    assert abs(gaussian_period_numeric(ctx9, 2, 1) - (-2)) < 1e-9
    ctx49 = build_field(7, 2)
    assert abs(gaussian_period_numeric(ctx49, 2, 0) - 3) < 1e-9


def test_closed_form_branches():
    eta0, eta1 = gaussian_period_closed_form_n2(3, 1, 2)
    assert eta0 == 1 and eta1 == -2
    eta0, _ = gaussian_period_closed_form_n2(5, 1, 2)
    assert eta0 == -3
    eta0, eta1 = gaussian_period_closed_form_n2(3, 1, 1)
    assert abs(eta0 - complex(-0.5, 0.8660254037844386)) < 1e-12
    assert abs(eta0 + eta1 + 1) < 1e-12
    with pytest.raises(ParameterError):
        gaussian_period_closed_form_n2(2, 1, 4)


def test_numeric_matches_closed_form_sample():
    for p, s, m in [(3, 1, 2), (3, 1, 3), (5, 1, 2), (7, 1, 2), (3, 2, 2), (11, 1, 2)]:
        ctx = build_field(p, s * m)
        eta0, eta1 = gaussian_period_closed_form_n2(p, s, m)
        assert abs(gaussian_period_numeric(ctx, 2, 0) - eta0) < 1e-6
        assert abs(gaussian_period_numeric(ctx, 2, 1) - eta1) < 1e-6


def test_multiset_scaling_identity_cases():
    ctx27 = build_field(3, 3)
    assert check_multiset_scaling(ctx27, 1, 2, 0)
    ctx256 = build_field(2, 8)
    assert check_multiset_scaling(ctx256, 2, 3, 1)
    ctx9 = build_field(3, 2)
    assert check_multiset_scaling(ctx9, 1, 2, 0)


def test_multiset_scaling_multiplicity_brute_force():
    # independent multiset construction for q=3, m=2, e=2, i=0:
    # every product must appear with multiplicity gcd(2,2)*(3-1)/2 = 2
    ctx = build_field(3, 2)
    step = ctx.subfield_exponent_step(1)
    products = Counter()
    for k in class_exponents(ctx, 2, 0):
        for t in range(2):  # F_3^* has two elements
            products[(k + t * step) % 8] += 1
    assert set(products.values()) == {2}
    assert set(products) == set(class_exponents(ctx, 2, 0))


def test_subfield_containment_cases():
    assert check_subfield_containment(build_field(3, 2), 1, 2)
    assert check_subfield_containment(build_field(5, 4), 1, 2)
    assert check_subfield_containment(build_field(2, 6), 2, 3)  # q=4, m=3, N=3
    with pytest.raises(NotApplicableError):
        check_subfield_containment(build_field(3, 3), 1, 2)  # m odd
