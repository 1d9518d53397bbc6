"""
Arithmetic over Z_m.

Every residue is kept reduced in [0, m). Searches are exhaustive and return
the smallest witness, which keeps family parameters reproducible.
"""

from math import gcd
from typing import Optional

from ..exceptions import NotAUnit, UnsupportedParameter


def is_prime(n: int) -> bool:
    """Trial-division primality test for desk-scale integers."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n, ascending."""
    factors = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            factors.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        factors.append(n)
    return factors


def require_prime(p: int) -> int:
    """Return p, raising UnsupportedParameter if it is not prime."""
    if not is_prime(p):
        raise UnsupportedParameter(f"{p} is not a prime")
    return p


def unit_inverse(x: int, m: int) -> int:
    """
    Inverse of a unit modulo m.

    Raises:
        NotAUnit: if gcd(x, m) != 1
    """
    if m < 2 or gcd(x % m, m) != 1:
        raise NotAUnit(f"{x} is not a unit modulo {m}")
    return pow(x, -1, m)


def multiplicative_order(x: int, m: int) -> int:
    """Order of the unit x in (Z_m)^*."""
    x %= m
    if gcd(x, m) != 1:
        raise NotAUnit(f"{x} is not a unit modulo {m}")
    order = 1
    power = x
    while power != 1 % m:
        power = (power * x) % m
        order += 1
    return order


def has_order(x: int, r: int, m: int) -> bool:
    """True when the unit x has multiplicative order exactly r modulo m."""
    if gcd(x % m, m) != 1 or pow(x, r, m) != 1 % m:
        return False
    return all(pow(x, r // q, m) != 1 % m for q in prime_factors(r))


def element_of_order(r: int, m: int) -> Optional[int]:
    """Smallest unit of multiplicative order exactly r modulo m, or None."""
    if r < 1:
        raise UnsupportedParameter(f"order must be positive, got {r}")
    for x in range(1, m):
        if has_order(x, r, m):
            return x
    return None


def elements_of_order(r: int, m: int) -> list[int]:
    """All units of multiplicative order exactly r modulo m, ascending."""
    return [x for x in range(1, m) if has_order(x, r, m)]


def sqrt5(p: int) -> Optional[int]:
    """Smaller square root of 5 modulo p, or None when 5 is a non-residue."""
    target = 5 % p
    for x in range(1, p):
        if (x * x) % p == target:
            return x
    return None
