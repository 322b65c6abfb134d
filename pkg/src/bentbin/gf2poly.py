"""Polynomials over GF(2), bit-packed into Python ints.

Bit i of the integer is the coefficient of x^i, so the polynomial
x^4 + x + 1 is 0b10011 = 19.  Addition is XOR; the zero polynomial is 0.
Provides carry-less multiplication, remainders, gcds, irreducibility
testing and a complete deterministic factorization (squarefree split,
distinct-degree split, then equal-degree split by trace maps).
"""

from __future__ import annotations


def degree(f: int) -> int:
    """Degree of f, with degree(0) = -1."""
    return f.bit_length() - 1


def mul(a: int, b: int) -> int:
    """Carry-less product of a and b."""
    if a.bit_count() > b.bit_count():
        a, b = b, a
    r = 0
    while a:
        low = a & -a
        r ^= b * low
        a ^= low
    return r


def mod(a: int, m: int) -> int:
    """Remainder of a modulo m (m nonzero)."""
    if m == 0:
        raise ZeroDivisionError("zero modulus polynomial")
    dm = m.bit_length()
    da = a.bit_length()
    while da >= dm:
        a ^= m << (da - dm)
        da = a.bit_length()
    return a


def divmod_(a: int, m: int) -> tuple[int, int]:
    """Quotient and remainder of a by m."""
    if m == 0:
        raise ZeroDivisionError("zero modulus polynomial")
    q = 0
    dm = m.bit_length()
    da = a.bit_length()
    while da >= dm:
        q ^= 1 << (da - dm)
        a ^= m << (da - dm)
        da = a.bit_length()
    return q, a


def mulmod(a: int, b: int, m: int) -> int:
    return mod(mul(a, b), m)


def gcd(a: int, b: int) -> int:
    while b:
        a, b = b, mod(a, b)
    return a


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of a positive integer, ascending."""
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def pow_x_2k_mod(k: int, m: int) -> int:
    """x^(2^k) mod m, by k successive squarings."""
    r = mod(2, m)
    for _ in range(k):
        r = mulmod(r, r, m)
    return r


def is_irreducible(f: int) -> bool:
    """Irreducibility over GF(2) via the Frobenius criterion."""
    n = degree(f)
    if n <= 0:
        return False
    if n == 1:
        return True
    if not f & 1:
        return False
    x = mod(2, f)
    if pow_x_2k_mod(n, f) != x:
        return False
    for p in prime_factors(n):
        if gcd(pow_x_2k_mod(n // p, f) ^ x, f) != 1:
            return False
    return True


def smallest_irreducible(n: int) -> int:
    """Least degree-n irreducible polynomial in integer encoding order."""
    for f in range(1 << n, 1 << (n + 1)):
        if is_irreducible(f):
            return f
    raise AssertionError("unreachable: irreducibles exist in every degree")


def derivative(f: int) -> int:
    """Formal derivative: keeps coefficients of odd powers, shifted down."""
    g = f >> 1
    r = 0
    i = 0
    while g >> i:
        if (g >> i) & 1 and i % 2 == 0:
            r |= 1 << i
        i += 1
    return r


def _sqrt_of_square(f: int) -> int:
    """Inverse of squaring for polynomials with only even exponents."""
    r = 0
    i = 0
    while f >> (2 * i):
        if (f >> (2 * i)) & 1:
            r |= 1 << i
        i += 1
    return r


def _trace_map(h: int, k: int, g: int) -> int:
    """h + h^2 + h^4 + ... + h^(2^(k-1)) mod g."""
    t = h
    s = h
    for _ in range(k - 1):
        s = mulmod(s, s, g)
        t ^= s
    return t


def _split_equal_degree(g: int, k: int, out: list[int]) -> None:
    """Split a product of distinct degree-k irreducibles; deterministic.

    Trace patterns of the basis polynomials x^t separate any two distinct
    factors, so scanning t = 1, 2, ... always finds a proper gcd split.
    """
    if degree(g) == k:
        out.append(g)
        return
    for t in range(1, degree(g)):
        d = gcd(g, _trace_map(mod(1 << t, g), k, g))
        if 0 < degree(d) < degree(g):
            _split_equal_degree(d, k, out)
            _split_equal_degree(divmod_(g, d)[0], k, out)
            return
    raise AssertionError("equal-degree split failed")  # pragma: no cover


def _factor_squarefree(f: int) -> list[int]:
    """Irreducible factors of a squarefree f (distinct-degree first)."""
    out: list[int] = []
    k = 1
    while degree(f) >= 2 * k:
        d = gcd(f, pow_x_2k_mod(k, f) ^ mod(2, f))
        if degree(d) > 0:
            _split_equal_degree(d, k, out)
            f = divmod_(f, d)[0]
        k += 1
    if degree(f) > 0:
        out.append(f)
    return out


def factor(f: int) -> dict[int, int]:
    """Full factorization: map irreducible -> multiplicity."""
    if f == 0:
        raise ValueError("cannot factor the zero polynomial")
    result: dict[int, int] = {}
    _factor_into(f, 1, result)
    return result


def _factor_into(f: int, mult: int, result: dict[int, int]) -> None:
    if degree(f) < 1:
        return
    d = derivative(f)
    if d == 0:
        _factor_into(_sqrt_of_square(f), 2 * mult, result)
        return
    g = gcd(f, d)
    rest = divmod_(f, g)[0]  # squarefree part
    for p in _factor_squarefree(rest):
        e = 0
        while mod(f, p) == 0:
            f = divmod_(f, p)[0]
            e += 1
        result[p] = result.get(p, 0) + e * mult
    if degree(f) >= 1:
        _factor_into(f, mult, result)


def divisors(f: int) -> list[int]:
    """All monic divisors of f, sorted by (degree, integer value)."""
    fac = sorted(factor(f).items())
    divs = [1]
    for p, e in fac:
        powers = [1]
        for _ in range(e):
            powers.append(mul(powers[-1], p))
        divs = [mul(d, q) for d in divs for q in powers]
    divs.sort(key=lambda d: (degree(d), d))
    return divs
