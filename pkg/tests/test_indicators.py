import math

import pytest

from primelab import indicators as ind

TRIAL_LIMIT = 3000


def trial_is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, math.isqrt(n) + 1))


def trial_divisors(n: int) -> list[int]:
    return [d for d in range(2, n) if n % d == 0]


def test_divisor_count_examples():
    assert ind.nontrivial_divisor_count(12) == 4  # 2, 3, 4, 6
    assert ind.nontrivial_divisor_count(7) == 0
    assert ind.nontrivial_divisor_count(9) == 1
    with pytest.raises(ValueError):
        ind.nontrivial_divisor_count(1)


def test_divisor_count_matches_enumeration():
    for n in range(2, TRIAL_LIMIT):
        assert ind.nontrivial_divisor_count(n) == len(trial_divisors(n))


def test_zero_remainder_examples():
    assert ind.cumulative_zero_remainders(4) == 1
    assert ind.cumulative_zero_remainders(3) == 0
    assert ind.cumulative_zero_remainders(2) == 0
    # Z(10) = Z(9) + P(10)
    assert ind.cumulative_zero_remainders(10) == ind.cumulative_zero_remainders(9) + 2


def test_zero_remainder_closed_forms_agree():
    for n in range(2, 400):
        z = ind.cumulative_zero_remainders(n)
        assert z == ind.cumulative_zero_remainders_alt(n)
        if n >= 4:
            assert z - ind.cumulative_zero_remainders(n - 1) == ind.nontrivial_divisor_count(n)
        if n >= 3 and n % 2 == 1:
            assert ind.divisor_count_odd_form(n) == ind.nontrivial_divisor_count(n)


def test_cumulative_equals_summed_divisor_counts():
    total = 0
    for n in range(4, 400):
        total += ind.nontrivial_divisor_count(n)
        assert ind.cumulative_zero_remainders(n) == total


def test_omega_examples():
    assert ind.omega_ratio(9) == pytest.approx(2.0 / 3.0)
    assert ind.omega_ratio(7) == 1.0
    assert ind.omega_ratio(4) == 0.0
    assert ind.omega_ratio(6) == 0.0
    # 4 and 6 are the only zeros (checked well past them)
    zeros = [n for n in range(4, 1000) if ind.omega_ratio(n) == 0.0]
    assert zeros == [4, 6]
    with pytest.raises(ValueError):
        ind.omega_ratio(3)


def test_indicator_matches_trial_division():
    for n in range(4, TRIAL_LIMIT):
        assert ind.prime_indicator(n) == int(trial_is_prime(n))


def test_extended_indicator_convention():
    assert ind.extended_indicator(2) == 1
    assert ind.extended_indicator(3) == 1
    assert ind.extended_indicator(1) == 0
    assert ind.extended_indicator(0) == 0
    assert ind.extended_indicator(4) == 0


def test_prime_count_route():
    assert ind.prime_count_from_indicators(10) == 4
    assert ind.prime_count_from_indicators(100) == 25


def test_common_divisors_examples():
    assert ind.common_divisor_count(12, 18) == 3  # 2, 3, 6
    assert ind.common_divisor_count(8, 9) == 0
    assert ind.common_divisor_count(7, 7) == 1
    # shared divisor equal to min(n, x) is not missed
    assert ind.common_divisor_count(2, 4) == 1
    assert ind.common_divisor_count(6, 3) == 1


def test_coprime_indicator_exhaustive():
    for n in range(2, 501):
        for x in range(2, 501):
            want = 1 if math.gcd(n, x) == 1 else 0
            assert ind.coprime_indicator(n, x) == want, (n, x)


def test_coprime_count_examples():
    assert ind.coprime_count(10, 10) == 4
    assert ind.coprime_count(7, 7) == 6
    assert ind.coprime_count(12, 12) == 4


def test_coprime_count_is_totient():
    for n in range(2, 1200):
        assert ind.coprime_count(n, n) == ind.totient(n)


def test_totient_envelopes():
    primorial = 2 * 3 * 5 * 7 * 11
    assert ind.phi_min(1000, 11) == pytest.approx(0.20779 * 1000, rel=1e-3)
    for n in range(2, primorial, 37):
        assert ind.phi_min(n, 11) <= ind.totient(n) <= ind.phi_max(n) + 1e-12


def test_pair_indicator_examples(table_small):
    assert ind.pair_indicator(5, 2, table_small) == 1  # both 3 and 7 prime: still 1
    assert ind.pair_indicator(9, 2, table_small) == 0
    assert ind.pair_indicator(23, 6, table_small) == 1
    with pytest.raises(ValueError):
        ind.pair_indicator(5, 3, table_small)
    with pytest.raises(ValueError):
        ind.pair_indicator(10**4, 2, table_small)


def test_pair_counts_examples(table_small):
    pc = ind.pair_counts(10, 2, table_small)
    assert pc.member_count == 3  # members 3, 5, 7 (gamma contributes the 3)
    assert pc.pair_count == 2  # (3,5), (5,7)
    assert pc.gamma == 1
    pc4 = ind.pair_counts(10, 4, table_small)
    assert pc4.pair_count == 1  # (3, 7)
    assert pc4.gamma == 1  # 3 and 7 both prime
    pc1000 = ind.pair_counts(1000, 2, table_small)
    assert pc1000.pair_count == 35


def test_pair_count_member_relation(table_small):
    # members of twin pairs vs unordered twin pairs: pi <= K <= 2 pi
    for n in (10, 100, 1000, 5000):
        pc = ind.pair_counts(n, 2, table_small)
        assert pc.pair_count <= pc.member_count <= 2 * pc.pair_count


def test_gamma_term(table_small):
    assert ind.pair_counts(100, 2, table_small).gamma == 1  # 3, 5
    assert ind.pair_counts(100, 6, table_small).gamma == 0  # 9 composite
    assert ind.pair_counts(100, 8, table_small).gamma == 1  # 3, 11
