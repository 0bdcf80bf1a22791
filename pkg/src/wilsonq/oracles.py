"""Brute-force ground truth: Fermat quotients, their power sums, factorials
and the Wilson quotient, all modulo prime powers.

Nothing in this module knows about Bernoulli numbers; every value is obtained
by direct summation or multiplication so it can serve as the independent side
of each verification.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from threading import Lock

from .residues import Residue, from_rational, make_modulus

# q_p(a) values are shared heavily across n and across checks; keep the last
# few primes' tables, each at the highest precision requested so far.
_fq_tables: dict[int, tuple[int, tuple[int, ...]]] = {}
_fq_lock = Lock()
_FQ_MAX_PRIMES = 4


def _fq_values(p: int, r: int) -> tuple[int, ...]:
    """(q_p(1), ..., q_p(p-1)) mod p^s for some s >= r."""
    with _fq_lock:
        entry = _fq_tables.get(p)
        if entry is not None and entry[0] >= r:
            return entry[1]
        mod_up = p ** (r + 1)
        values = tuple((pow(a, p - 1, mod_up) - 1) // p for a in range(1, p))
        if len(_fq_tables) >= _FQ_MAX_PRIMES and p not in _fq_tables:
            _fq_tables.pop(next(iter(_fq_tables)))
        _fq_tables[p] = (r, values)
        return values


def fermat_quotient(a: int, p: int, r: int) -> Residue:
    """q_p(a) = (a^(p-1) - 1)/p mod p^r."""
    if a % p == 0:
        raise ValueError(f"{a} is divisible by {p}")
    if a < 1:
        raise ValueError("base must be positive")
    modulus = make_modulus(p, r)
    if a < p:
        return Residue(_fq_values(p, r)[a - 1], modulus)
    power = Residue(pow(a, p - 1, p ** (r + 1)), make_modulus(p, r + 1))
    return (power - 1).shift_down(1)


def q_power_sum(n: int, p: int, r: int) -> Residue:
    """Q_p(n) = sum of n-th powers of all Fermat quotients, mod p^r."""
    if n < 1:
        raise ValueError("power must be >= 1")
    modulus = make_modulus(p, r)
    m = modulus.value
    return Residue(sum(pow(q, n, m) for q in _fq_values(p, r)) % m, modulus)


def qtilde(n: int, p: int, r: int) -> Residue:
    """The scaled sum (p^(n-1)/n) * Q_p(n) mod p^r, from the direct oracle."""
    if n >= r + 1:
        return Residue(0, make_modulus(p, r))
    base = q_power_sum(n, p, r - (n - 1))
    return from_rational(Fraction(1, n), make_modulus(p, r)) * base.mul_p_power(n - 1)


def sh_mod(n: int, p: int, r: int) -> Residue:
    """Modified power sum (S_n(p) - S_0(p))/p mod p^r, with value 0 at n=0.

    Only defined (p-adically) when S_n(p) = S_0(p) mod p, which holds exactly
    when p-1 divides n -- the indices the difference operators sample.
    """
    from .bernoulli import power_sum_mod  # local import: no cycle at module load

    modulus = make_modulus(p, r)
    if n == 0:
        return Residue(0, modulus)
    up = make_modulus(p, r + 1)
    diff = power_sum_mod(n, up) - power_sum_mod(0, up)
    return diff.shift_down(1)


def factorial_mod(p: int, r: int) -> Residue:
    """(p-1)! mod p^r by sequential multiplication."""
    modulus = make_modulus(p, r)
    m = modulus.value
    acc = 1
    for v in range(2, p):
        acc = acc * v % m
    return Residue(acc, modulus)


@dataclass(frozen=True)
class WilsonRecord:
    """(p-1)! mod p^(r+1), the Wilson quotient mod p^r, and the base-p digits
    of the factorial value."""

    p: int
    factorial: Residue
    quotient: Residue
    digits: tuple[int, ...]


def wilson_quotient(p: int, r: int) -> WilsonRecord:
    """W_p = ((p-1)! + 1)/p mod p^r, from the factorial at one extra digit."""
    if r < 1:
        raise ValueError("precision must be >= 1")
    fact = factorial_mod(p, r + 1)
    quotient = (fact + 1).shift_down(1)
    return WilsonRecord(p=p, factorial=fact, quotient=quotient, digits=tuple(fact.digits()))
