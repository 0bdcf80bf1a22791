import pytest

from wilsonq.bernoulli import divided_set
from wilsonq.harness import enumerate_primes
from wilsonq.oracles import (
    factorial_mod,
    fermat_quotient,
    q_power_sum,
    qtilde,
    sh_mod,
    wilson_quotient,
)


def test_fermat_quotient_examples():
    assert fermat_quotient(1, 7, 3).value == 0
    assert fermat_quotient(2, 5, 2).value == 3  # (16-1)/5
    # (6^6 - 1)/7 = 6665 = 136*49 + 1
    assert (6**6 - 1) // 7 == 6665
    assert fermat_quotient(6, 7, 2).value == 1
    with pytest.raises(ValueError):
        fermat_quotient(14, 7, 2)


def test_fermat_quotient_log_property_exhaustive():
    # q_p(ab) = q_p(a) + q_p(b) mod p for the *integer* product; the quotient
    # itself is not invariant under reducing its argument mod p
    for p in enumerate_primes(3, 101):
        q = [None] + [fermat_quotient(a, p, 1).value for a in range(1, p)]
        for a in range(1, p):
            for b in range(a, p):
                assert fermat_quotient(a * b, p, 1).value == (q[a] + q[b]) % p, (p, a, b)


def test_fermat_quotient_shift_rule():
    # the exact failure of mod-p argument reduction: q_p(a + p) = q_p(a) - 1/a
    for p in (5, 7, 13):
        for a in range(1, p):
            shifted = fermat_quotient(a + p, p, 1)
            inv_a = pow(a, -1, p)
            assert shifted.value == (fermat_quotient(a, p, 1).value - inv_a) % p


def test_q_power_sum_examples():
    # q_5: 0, 3, 16, 51 -> sum 70
    assert sum((a ** 4 - 1) // 5 for a in range(1, 5)) == 70
    assert q_power_sum(1, 5, 2).value == 20
    # q_7: 0, 9, 104, 585, 2232, 6665 -> 9595
    assert sum((a ** 6 - 1) // 7 for a in range(1, 7)) == 9595
    assert q_power_sum(1, 7, 5).value == 9595
    assert q_power_sum(2, 3, 1).value == 1


def test_qtilde_small_cases():
    # n=1 is the plain sum; higher n scale by p^(n-1)/n
    assert qtilde(1, 7, 5) == q_power_sum(1, 7, 5)
    got = qtilde(2, 7, 4)
    direct = sum(((a ** 6 - 1) // 7) ** 2 for a in range(1, 7))
    assert got.value == 7 * direct * pow(2, -1, 7**4) % 7**4


def test_sh_examples():
    assert sh_mod(0, 11, 3).value == 0
    # (S_4(5) - S_0(5))/5 = (354 - 4)/5 = 70
    assert sum(v**4 for v in range(1, 5)) == 354
    assert sh_mod(4, 5, 1).value == 70 % 5 == 0
    assert sh_mod(4, 5, 2).value == 70 % 25
    for p in (5, 7, 11):
        assert sh_mod(p - 1, p, 3) == q_power_sum(1, p, 3)


def test_sh_rejects_off_grid_index():
    # away from multiples of p-1 the difference has no factor p
    with pytest.raises(ValueError, match="insufficient valuation"):
        sh_mod(2, 5, 2)


def test_factorial_examples():
    assert factorial_mod(5, 2).value == 24
    assert factorial_mod(7, 2).value == 34  # 720 mod 49
    assert factorial_mod(7, 6).value == 720
    for p in enumerate_primes(3, 200):
        assert factorial_mod(p, 1).value == p - 1  # Wilson base case


def test_wilson_quotient_examples():
    assert wilson_quotient(5, 3).quotient.value == 5
    assert wilson_quotient(7, 5).quotient.value == 103
    assert wilson_quotient(13, 8).quotient.value == 36846277  # (12! + 1)/13


def test_wilson_record_invariants():
    for p in (5, 7, 11, 13, 101):
        rec = wilson_quotient(p, 4)
        assert rec.digits[0] == p - 1
        assert (rec.quotient.mul_p_power(1) - 1).reduce_to(5) == rec.factorial
        assert rec.factorial.precision == 5 and rec.quotient.precision == 4


def test_wilson_matches_first_expansion_coefficient():
    # W_p = -(first divided Bernoulli value) mod p
    for p in (7, 11, 13, 17, 19):
        bs = divided_set(p)
        assert wilson_quotient(p, 1).quotient == -bs.b(1, 1), p
