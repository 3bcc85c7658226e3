"""Exact integer primitives: square roots, the 4^s(8t+7) test, three-square splits."""

from __future__ import annotations

import math
from typing import NamedTuple, Optional

U64_MAX = 2**64 - 1


def check_natural(n: int, what: str = "value") -> int:
    """Validate that ``n`` is an int in the unsigned 64-bit range and return it."""
    if isinstance(n, bool) or not isinstance(n, int):
        raise TypeError(f"{what} must be an integer, got {type(n).__name__}")
    if n < 0:
        raise ValueError(f"{what} must be non-negative, got {n}")
    if n > U64_MAX:
        raise OverflowError(f"{what} = {n} exceeds the 64-bit range")
    return n


def checked_mul_add(a: int, n: int, r: int = 0) -> int:
    """Return ``a*n + r``, raising OverflowError if it leaves the 64-bit range."""
    value = a * n + r
    if value > U64_MAX:
        raise OverflowError(f"{a}*{n}+{r} exceeds the 64-bit range")
    return value


def isqrt(n: int) -> int:
    """Largest m with m*m <= n.

    >>> isqrt(17)
    4
    """
    # math.isqrt is exact for arbitrary ints; no float rounding involved
    return math.isqrt(check_natural(n))


def is_perfect_square(n: int) -> bool:
    m = isqrt(n)
    return m * m == n


def is_forbidden_form(n: int) -> bool:
    """True iff n = 4**s * (8t + 7) for some s, t >= 0."""
    check_natural(n)
    if n == 0:
        return False
    while n % 4 == 0:
        n //= 4
    return n % 8 == 7


class SquareTriple(NamedTuple):
    """Square roots (A, B, C) with A >= B >= C >= 0."""

    a_: int
    b_: int
    c_: int

    @classmethod
    def canonical(cls, x: int, y: int, z: int) -> "SquareTriple":
        for v in (x, y, z):
            check_natural(v, "triple entry")
        return cls(*sorted((x, y, z), reverse=True))

    def square_sum(self) -> int:
        return self.a_ ** 2 + self.b_ ** 2 + self.c_ ** 2


def three_square_decompose(n: int) -> Optional[SquareTriple]:
    """Write n as A**2 + B**2 + C**2 with A >= B >= C, or return None.

    A is taken as large as possible, then B. No shortcut through
    :func:`is_forbidden_form` is taken, so a None result is a genuine
    exhaustive miss.

    >>> three_square_decompose(11)
    SquareTriple(a_=3, b_=1, c_=1)
    >>> three_square_decompose(7) is None
    True
    """
    check_natural(n)
    isq = math.isqrt
    a = isq(n)
    # A >= B >= C forces 3*A**2 >= n
    while 3 * a * a >= n:
        rest = n - a * a
        b = min(a, isq(rest))
        # B >= C forces 2*B**2 >= rest
        while 2 * b * b >= rest:
            c2 = rest - b * b
            c = isq(c2)
            if c * c == c2:
                return SquareTriple(a, b, c)
            b -= 1
        if a == 0:
            break
        a -= 1
    return None
