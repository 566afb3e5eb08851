"""Independent brute-force oracles used across the test modules.

Everything here is deliberately naive — plain recurrences, linear scans,
trial division — so the library's fast paths are checked against code that
shares none of their structure.
"""

from math import isqrt


def fib_upto(n: int) -> list[int]:
    """[u_0, u_1, ..., u_n] by the plain additive recurrence."""
    values = [0, 1]
    while len(values) <= n:
        values.append(values[-1] + values[-2])
    return values[: n + 1]


def is_prime_trial(n: int) -> bool:
    if n < 2:
        return False
    for d in range(2, isqrt(n) + 1):
        if n % d == 0:
            return False
    return True


def pisano_scan(m: int) -> int:
    """Period of the Fibonacci sequence mod m by scanning pairs."""
    if m == 1:
        return 1
    a, b = 0, 1
    for l in range(1, 6 * m + 1):
        a, b = b, (a + b) % m
        if (a, b) == (0, 1):
            return l
    raise AssertionError(f"no period below 6*{m}")


def rank_scan(m: int) -> int:
    """Least z >= 1 with u_z == 0 mod m, by scanning."""
    a, b = 1, 1  # (u_1, u_2)
    z = 1
    while a % m != 0:
        a, b = b, a + b
        z += 1
    return z


def zero_scan(m: int) -> int:
    """Zeros of (u_i mod m) over one full period, by scanning."""
    period = pisano_scan(m)
    a, b = 0, 1
    zeros = 0
    for _ in range(period):
        if a == 0:
            zeros += 1
        a, b = b, (a + b) % m
    return zeros
