"""Exact integer and modular arithmetic: factorization, orders, CRT.

Everything here works on plain Python integers, so results are exact at any
size.  Factorization is deterministic trial division and deliberately capped
at 10**9; this library targets desk-scale moduli, not cryptographic ones.
"""

from dataclasses import dataclass
from math import gcd, isqrt

from .errors import EvenKernel, NotInvertible

FACTOR_LIMIT = 10**9


@dataclass(frozen=True)
class Factorization:
    """Canonical prime-power decomposition n = p_1^e_1 * ... * p_l^e_l.

    `factors` is a tuple of (prime, exponent) pairs with primes strictly
    ascending.  factorize(1) yields the empty product.
    """

    n: int
    factors: tuple[tuple[int, int], ...]

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    @property
    def num_primes(self) -> int:
        return len(self.factors)

    @property
    def smallest_prime(self) -> int:
        if not self.factors:
            raise ValueError("1 has no prime factors")
        return self.factors[0][0]


def factorize(n: int) -> Factorization:
    """Factor n >= 1 by trial division up to sqrt(n)."""
    if n < 1:
        raise ValueError(f"cannot factor {n}: need n >= 1")
    if n > FACTOR_LIMIT:
        raise ValueError(f"n = {n} exceeds the supported limit {FACTOR_LIMIT}")
    m = n
    factors = []
    p = 2
    while p <= isqrt(m):
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors.append((p, e))
        p += 1 if p == 2 else 2
    if m > 1:
        factors.append((m, 1))
    return Factorization(n, tuple(factors))


def mod_pow(a: int, k: int, m: int) -> int:
    """a**k mod m for k >= 0, m >= 2."""
    if m < 2:
        raise ValueError(f"modulus {m} must be >= 2")
    if k < 0:
        raise ValueError(f"exponent {k} must be >= 0")
    return pow(a, k, m)


def mod_inverse(a: int, m: int) -> int:
    """Inverse of a modulo m; requires gcd(a, m) = 1."""
    if m < 2:
        raise ValueError(f"modulus {m} must be >= 2")
    if gcd(a, m) != 1:
        raise NotInvertible(f"{a} is not invertible mod {m}")
    return pow(a, -1, m)


def euler_phi(f: Factorization) -> int:
    phi = 1
    for p, e in f.factors:
        phi *= p ** (e - 1) * (p - 1)
    return phi


def multiplicative_order(a: int, m: int) -> int:
    """Least k >= 1 with a**k = 1 (mod m).

    Computed by starting from the group order phi(m) and stripping prime
    factors, not by linear scan.
    """
    if m < 2:
        raise ValueError(f"modulus {m} must be >= 2")
    if gcd(a, m) != 1:
        raise NotInvertible(f"{a} is not a unit mod {m}")
    order = euler_phi(factorize(m))
    for p, _ in factorize(order).factors:
        while order % p == 0 and pow(a, order // p, m) == 1:
            order //= p
    return order


def primitive_root(p: int, e: int = 1) -> int:
    """Smallest generator (>= 2) of the unit group modulo p**e, p an odd prime.

    A primitive root modulo p**e is automatically one modulo p as well.
    """
    if p == 2:
        raise EvenKernel("primitive roots are only needed for odd prime powers here")
    if e < 1:
        raise ValueError(f"exponent {e} must be >= 1")
    m = p**e
    phi = p ** (e - 1) * (p - 1)
    prime_parts = [q for q, _ in factorize(phi).factors]
    for eta in range(2, m):
        if eta % p == 0:
            continue
        if all(pow(eta, phi // q, m) != 1 for q in prime_parts):
            return eta
    raise ValueError(f"no primitive root found mod {p}^{e}")  # unreachable for odd p


def crt_combine(residues: list[tuple[int, int]]) -> int:
    """Unique x mod prod(m_i) with x = r_i (mod m_i), for pairwise coprime m_i.

    Implemented as x = sum (n/m_i) * b_i * r_i with b_i * (n/m_i) = 1 (mod m_i).
    """
    if not residues:
        raise ValueError("need at least one residue")
    n = 1
    for _, m in residues:
        if m < 2:
            raise ValueError(f"modulus {m} must be >= 2")
        if gcd(n, m) != 1:
            raise ValueError("moduli are not pairwise coprime")
        n *= m
    x = 0
    for r, m in residues:
        ni = n // m
        b = mod_inverse(ni, m) if m > 1 else 0
        x = (x + ni * b * r) % n
    return x


def ord_p(n: int, p: int) -> int:
    """Exponent of the prime p in the factorization of n != 0."""
    if n == 0:
        raise ValueError("ord_p(0) is undefined")
    if p < 2:
        raise ValueError(f"{p} is not a prime")
    n = abs(n)
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k
