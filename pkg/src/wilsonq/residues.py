"""Exact arithmetic in Z/p^r Z with explicit precision tracking.

A ``Residue`` is a canonical representative in [0, p^r) together with its
``Modulus`` (p, r).  All operations are pure; mixed-precision operands with
the same p are silently reduced to the smaller precision, which is how
congruences are weakened when moving down a chain of moduli.  Division by p
is only available through :meth:`Residue.shift_down`, which spends precision
explicitly, and its inverse :meth:`Residue.mul_p_power`, which gains it.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin (exact for n < 3.3e24 with these bases)."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Modulus:
    """A prime power p^r with p >= 3 prime and r >= 1."""

    __slots__ = ("p", "r", "value")

    def __init__(self, p: int, r: int):
        if r < 1:
            raise ValueError(f"precision exponent must be >= 1, got {r}")
        if p < 3 or not is_prime(p):
            raise ValueError(f"modulus base must be an odd prime, got {p}")
        self.p = p
        self.r = r
        self.value = p**r

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Modulus) and self.p == other.p and self.r == other.r

    def __hash__(self) -> int:
        return hash((self.p, self.r))

    def __repr__(self) -> str:
        return f"Modulus({self.p}, {self.r})"


@lru_cache(maxsize=4096)
def make_modulus(p: int, r: int) -> Modulus:
    """Validated, cached construction of p^r."""
    return Modulus(p, r)


class Residue:
    """A class modulo p^r, stored as the least non-negative representative."""

    __slots__ = ("value", "modulus")

    def __init__(self, value: int, modulus: Modulus):
        self.value = value % modulus.value
        self.modulus = modulus

    @property
    def p(self) -> int:
        return self.modulus.p

    @property
    def precision(self) -> int:
        return self.modulus.r

    # -- coercion ---------------------------------------------------------

    def _pair(self, other) -> tuple[int, int, Modulus] | None:
        """Return (self value, other value, shared modulus), or None.

        Integers and p-integral Fractions embed at self's modulus; two
        residues must share p and are reduced to the smaller precision.
        """
        if isinstance(other, Residue):
            if other.p != self.p:
                raise ValueError(f"prime mismatch: {self.p} vs {other.p}")
            if other.precision == self.precision:
                return self.value, other.value, self.modulus
            m = make_modulus(self.p, min(self.precision, other.precision))
            return self.value % m.value, other.value % m.value, m
        if isinstance(other, int):
            return self.value, other % self.modulus.value, self.modulus
        if isinstance(other, Fraction):
            return self.value, from_rational(other, self.modulus).value, self.modulus
        return None

    # -- ring operations --------------------------------------------------

    def __add__(self, other) -> Residue:
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b, m = pair
        return Residue(a + b, m)

    __radd__ = __add__

    def __sub__(self, other) -> Residue:
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b, m = pair
        return Residue(a - b, m)

    def __rsub__(self, other) -> Residue:
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b, m = pair
        return Residue(b - a, m)

    def __mul__(self, other) -> Residue:
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b, m = pair
        return Residue(a * b, m)

    __rmul__ = __mul__

    def __neg__(self) -> Residue:
        return Residue(-self.value, self.modulus)

    def __pow__(self, n: int) -> Residue:
        if n < 0:
            raise ValueError("negative exponent; use inv() for unit inverses")
        return Residue(pow(self.value, n, self.modulus.value), self.modulus)

    def inv(self) -> Residue:
        """Multiplicative inverse; the value must be a unit (not divisible by p)."""
        if self.value % self.p == 0:
            raise ValueError(f"{self.value} is not a unit mod {self.p}^{self.precision}")
        return Residue(pow(self.value, -1, self.modulus.value), self.modulus)

    # -- p-adic structure -------------------------------------------------

    def valuation(self) -> int:
        """Largest k <= r with p^k dividing the value; r itself means 'at least r'."""
        if self.value == 0:
            return self.precision
        v, k = self.value, 0
        while v % self.p == 0:
            v //= self.p
            k += 1
        return k

    def shift_down(self, k: int) -> Residue:
        """Exact division by p^k, spending k digits of precision.

        The class must have valuation >= k and k must be < r, so the result
        is a well-defined class modulo p^(r-k).
        """
        if k == 0:
            return self
        if k < 0:
            raise ValueError("shift must be non-negative")
        if k >= self.precision:
            raise ValueError(f"cannot shift by {k}: only {self.precision} digits held")
        pk = self.p**k
        if self.value % pk != 0:
            raise ValueError(
                f"insufficient valuation: {self.value} not divisible by {self.p}^{k}"
            )
        return Residue(self.value // pk, make_modulus(self.p, self.precision - k))

    def mul_p_power(self, k: int) -> Residue:
        """Exact multiplication by p^k, gaining k digits of precision."""
        if k < 0:
            raise ValueError("power must be non-negative")
        if k == 0:
            return self
        return Residue(self.value * self.p**k, make_modulus(self.p, self.precision + k))

    def reduce_to(self, r: int) -> Residue:
        """Weaken to precision r <= current precision."""
        if r == self.precision:
            return self
        if r > self.precision:
            raise ValueError(f"cannot raise precision from {self.precision} to {r}")
        return Residue(self.value, make_modulus(self.p, r))

    def digits(self) -> list[int]:
        """Base-p digits, least significant first, exactly r of them."""
        out, v = [], self.value
        for _ in range(self.precision):
            v, d = divmod(v, self.p)
            out.append(d)
        return out

    def is_zero(self) -> bool:
        return self.value == 0

    # -- comparison -------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Residue):
            return (
                self.p == other.p
                and self.precision == other.precision
                and self.value == other.value
            )
        if isinstance(other, int):
            return self.value == other % self.modulus.value
        return NotImplemented

    __hash__ = None  # mutable-by-convention value type; not meant for hashing

    def __repr__(self) -> str:
        return f"Residue({self.value} mod {self.p}^{self.precision})"


def from_rational(q: Fraction | int, modulus: Modulus) -> Residue:
    """Embed a p-integral rational: numerator times inverse denominator."""
    if isinstance(q, int):
        return Residue(q, modulus)
    if q.denominator % modulus.p == 0:
        raise ValueError(f"denominator {q.denominator} not coprime to {modulus.p}")
    den_inv = pow(q.denominator, -1, modulus.value)
    return Residue(q.numerator * den_inv, modulus)
