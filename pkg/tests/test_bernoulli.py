from fractions import Fraction
from math import comb

import pytest

from wilsonq.bernoulli import (
    bernoulli_times_p,
    bnp,
    bnpd,
    divided_set,
    exact_bernoulli,
    power_sum_mod,
)
from wilsonq.differences import forward_difference
from wilsonq.residues import from_rational, make_modulus

F = Fraction


def test_exact_bernoulli_known_values():
    assert exact_bernoulli(0) == 1
    assert exact_bernoulli(1) == F(-1, 2)
    assert exact_bernoulli(2) == F(1, 6)
    assert exact_bernoulli(3) == 0
    assert exact_bernoulli(4) == F(-1, 30)
    assert exact_bernoulli(6) == F(1, 42)
    assert exact_bernoulli(12) == F(-691, 2730)


def test_exact_bernoulli_bound():
    with pytest.raises(ValueError):
        exact_bernoulli(3001)
    with pytest.raises(ValueError):
        exact_bernoulli(-1)


def test_power_sum_examples():
    assert power_sum_mod(1, make_modulus(5, 2)).value == 10  # 1+2+3+4
    assert power_sum_mod(0, make_modulus(7, 2)).value == 6
    # direct enumeration: 1^6 + ... + 6^6 = 67171
    total = sum(v**6 for v in range(1, 7))
    assert total == 67171
    assert power_sum_mod(6, make_modulus(7, 3)).value == total % 343 == 286


def test_engine_examples():
    # p*B_2 = 5/6
    assert bernoulli_times_p(2, 5, 3).value == 105
    assert bernoulli_times_p(3, 7, 4).value == 0
    # p*B_12 at p=7 against the exact oracle
    want = from_rational(7 * exact_bernoulli(12), make_modulus(7, 3))
    assert bernoulli_times_p(12, 7, 3) == want
    assert bernoulli_times_p(1, 7, 3) == from_rational(F(-7, 2), make_modulus(7, 3))
    assert bernoulli_times_p(0, 7, 3).value == 7


def test_engine_rejects_small_primes():
    with pytest.raises(ValueError, match="p > g"):
        bernoulli_times_p(10, 7, 7)
    with pytest.raises(ValueError, match="not prime"):
        bernoulli_times_p(2, 9, 2)


def test_engine_matches_exact_oracle_sample():
    # broad dense sample; the full mod-p^8 range lives in the acceptance suite
    for p, gmax in ((7, 6), (11, 8), (13, 8)):
        for m in range(0, 121, 2):
            want = 7  # placeholder overwritten below
            for g in (1, 3, gmax):
                want = from_rational(p * exact_bernoulli(m), make_modulus(p, g))
                assert bernoulli_times_p(m, p, g) == want, (p, m, g)


def test_dropped_recursion_terms_vanish():
    # terms beyond the cutoff K = min(m+1, g+1) have p-valuation >= g
    for p, g in ((7, 6), (11, 7), (13, 5)):
        for m in (10, 36, 60):
            for k in range(g + 2, min(m + 1, g + 12) + 1):
                term = comb(m, k - 1) * F(p ** (k - 1), k) * (p * exact_bernoulli(m + 1 - k))
                if term == 0:
                    continue
                num = term.numerator
                val = 0
                while num % p == 0:
                    num //= p
                    val += 1
                den_val = 0
                den = term.denominator
                while den % p == 0:
                    den //= p
                    den_val += 1
                assert val - den_val >= g, (p, g, m, k)


def test_von_staudt_clausen_structure():
    for p in (7, 11, 13, 17):
        for m in range(2, 80, 2):
            pb = bernoulli_times_p(m, p, 4)
            if m % (p - 1) == 0:
                assert (pb + 1).valuation() >= 1  # p*B_m = -1 mod p at the pole
            else:
                assert pb.valuation() >= 1


def test_bnp_examples():
    assert bnp(0, make_modulus(5, 2)).value == 0
    # p=5, m=4: pole case, value -5/6 has valuation 1
    assert bnp(4, make_modulus(5, 1)).value == 0
    got = bnp(8, make_modulus(5, 2))
    assert got == from_rational(F(-5, 6), make_modulus(5, 2))
    assert got.value == 20


def test_bnpd_examples():
    assert bnpd(-2, make_modulus(7, 2)).value == 0
    assert bnpd(0, make_modulus(7, 2)).value == 0
    # B_4/4 = -1/120 and 120 = 1 mod 7
    assert bnpd(4, make_modulus(7, 1)).value == 6
    # B_8/8 = -1/240, 240 = 2 mod 7, -inv(2) = -4 = 3
    assert bnpd(8, make_modulus(7, 1)).value == 3


def test_bnpd_matches_exact_rational():
    for p in (7, 11, 13):
        h = p - 1
        for m in list(range(2, 50, 2)) + [h, 2 * h, 3 * h, 4 * h]:
            r = 3 if p > 5 else 2
            if m % (p - 1) == 0:
                exact = (exact_bernoulli(m) + F(1, p) - 1) / m
            else:
                exact = exact_bernoulli(m) / m
            assert bnpd(m, make_modulus(p, r)) == from_rational(exact, make_modulus(p, r)), (p, m)


def test_bnpd_handles_index_divisible_by_p():
    # ord_7(98) = 2: numerator valuation must cover the division (Adams)
    got = bnpd(98, make_modulus(7, 3))
    assert got == from_rational(exact_bernoulli(98) / 98, make_modulus(7, 3))


def test_bnpd_kummer_class_step():
    for p in (7, 11):
        for m in range(2, 40, 2):
            if m % (p - 1) == 0 or (m + p - 1) % p == 0 or m % p == 0:
                continue
            a = bnpd(m, make_modulus(p, 1))
            b = bnpd(m + (p - 1), make_modulus(p, 1))
            assert a == b, (p, m)


def test_divided_set_defaults_and_values():
    bs7 = divided_set(7)
    assert set(bs7.bn) == {1, 2, 3, 4, 5}
    assert bs7.b(1).precision == 5
    # (B_6 + 1/7 - 1)/6 = -5/36 and -5*inv(36) = 23 mod 49
    assert bs7.b(1, 2) == from_rational(F(-5, 36), make_modulus(7, 2))
    assert bs7.b(1, 2).value == 23
    assert bs7.bd(1, 2, 1).value == 6  # same value as B_4/4 mod 7

    bs11 = divided_set(11)
    assert set(bs11.bn) == {1, 2, 3, 4, 5, 6}
    assert set(bs11.bnd) == {(1, 2), (2, 2), (3, 2), (4, 2), (1, 4), (2, 4)}
    assert bs11.b(1).precision == 6 and bs11.bd(1, 2).precision == 4


def test_divided_set_kummer_pairs():
    for p in (7, 11, 13):
        bs = divided_set(p)
        first = bs.b(1, 1)
        for n in bs.bn:
            assert bs.b(n, 1) == first, (p, n)


def test_divided_set_missing_entry_and_bounds():
    bs = divided_set(7)
    with pytest.raises(ValueError, match="missing cache entry"):
        bs.b(6)
    with pytest.raises(ValueError, match="missing cache entry"):
        bs.bd(2, 4)
    with pytest.raises(ValueError):
        divided_set(5)


def test_kummer_congruence_cases():
    # r-fold differences of the divided values vanish mod p^r:
    # indices off the (p-1)-grid need n > r; on-grid needs p > r + n/(p-1)
    for p in (7, 11, 13):
        h = p - 1
        for r in (1, 2, 3):
            modulus = make_modulus(p, r)
            for n in range(2, 61, 2):
                if n % h == 0:
                    if p <= r + n // h:
                        continue
                elif n <= r:
                    continue
                diff = forward_difference(lambda nu: bnpd(nu, modulus), h, r, start=n)
                assert diff.is_zero(), (p, r, n)


def test_power_sum_tables_match_direct():
    from wilsonq.bernoulli import _PrimeTables

    p, g = 101, 5
    tables = _PrimeTables(p, g)
    m = make_modulus(p, g)
    for j in (0, 1, 2, 50, 99, 100, 200, 357, 600, 6 * 100):
        assert tables.power_sum(j, g) == power_sum_mod(j, m).value, j
