"""Dense polynomial arithmetic over an exact coefficient domain.

Polynomials are tuples of coefficients in ascending degree with no trailing
zeros; the zero polynomial is ``()``.  Every routine takes a coefficient
domain object as its first argument, so the same code serves ``Z[x]`` and
``Z[s][t]`` (coefficients that are themselves dense integer polynomials).
"""

from __future__ import annotations

import math
from typing import Any, Sequence


class IntDomain:
    """The integers."""

    zero = 0
    one = 1

    @staticmethod
    def is_zero(a: int) -> bool:
        return a == 0

    @staticmethod
    def add(a: int, b: int) -> int:
        return a + b

    @staticmethod
    def sub(a: int, b: int) -> int:
        return a - b

    @staticmethod
    def mul(a: int, b: int) -> int:
        return a * b

    @staticmethod
    def neg(a: int) -> int:
        return -a

    @staticmethod
    def exact_div(a: int, b: int) -> int | None:
        q, r = divmod(a, b)
        return q if r == 0 else None

    @staticmethod
    def gcd(a: int, b: int) -> int:
        return math.gcd(a, b)

    @staticmethod
    def is_negative(a: int) -> bool:
        return a < 0


class IntPolyDomain:
    """Dense univariate integer polynomials, used as coefficients."""

    zero: tuple = ()
    one: tuple = (1,)

    @staticmethod
    def is_zero(a: tuple) -> bool:
        return not a

    @staticmethod
    def add(a: tuple, b: tuple) -> tuple:
        return add(ZZ, a, b)

    @staticmethod
    def sub(a: tuple, b: tuple) -> tuple:
        return sub(ZZ, a, b)

    @staticmethod
    def mul(a: tuple, b: tuple) -> tuple:
        return mul(ZZ, a, b)

    @staticmethod
    def neg(a: tuple) -> tuple:
        return tuple(-c for c in a)

    @staticmethod
    def exact_div(a: tuple, b: tuple) -> tuple | None:
        return exact_div(ZZ, a, b)

    @staticmethod
    def gcd(a: tuple, b: tuple) -> tuple:
        return gcd(ZZ, a, b)

    @staticmethod
    def is_negative(a: tuple) -> bool:
        return bool(a) and a[-1] < 0


ZZ = IntDomain()
ZZ_POLY = IntPolyDomain()


def trim(R: Any, coeffs: Sequence) -> tuple:
    coeffs = list(coeffs)
    while coeffs and R.is_zero(coeffs[-1]):
        coeffs.pop()
    return tuple(coeffs)


def add(R: Any, a: tuple, b: tuple) -> tuple:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = R.add(out[i], c)
    return trim(R, out)


def sub(R: Any, a: tuple, b: tuple) -> tuple:
    out = list(a) + [R.zero] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] = R.sub(out[i], c)
    return trim(R, out)


def mul(R: Any, a: tuple, b: tuple) -> tuple:
    if not a or not b:
        return ()
    out = [R.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if R.is_zero(x):
            continue
        for j, y in enumerate(b):
            if not R.is_zero(y):
                out[i + j] = R.add(out[i + j], R.mul(x, y))
    return trim(R, out)


def scale(R: Any, c: Any, a: tuple) -> tuple:
    return trim(R, [R.mul(c, x) for x in a])


def neg(R: Any, a: tuple) -> tuple:
    return tuple(R.neg(x) for x in a)


def exact_div(R: Any, a: tuple, b: tuple) -> tuple | None:
    """Return ``q`` with ``a == b*q``, or ``None`` if no such ``q`` exists."""
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    if not a:
        return ()
    if len(a) < len(b):
        return None
    rem = list(a)
    lead = b[-1]
    q = [R.zero] * (len(a) - len(b) + 1)
    for k in range(len(q) - 1, -1, -1):
        top = rem[k + len(b) - 1]
        if R.is_zero(top):
            continue
        c = R.exact_div(top, lead)
        if c is None:
            return None
        q[k] = c
        for j, y in enumerate(b):
            rem[k + j] = R.sub(rem[k + j], R.mul(c, y))
    if any(not R.is_zero(x) for x in rem):
        return None
    return trim(R, q)


def pseudo_rem(R: Any, a: tuple, b: tuple) -> tuple:
    """Pseudo-remainder of ``a`` by ``b``: remainder of ``lc(b)^k * a``."""
    rem = list(a)
    lead = b[-1]
    db = len(b) - 1
    while len(rem) - 1 >= db and rem:
        top = rem[-1]
        shift = len(rem) - 1 - db
        rem = [R.mul(lead, x) for x in rem]
        for j, y in enumerate(b):
            rem[shift + j] = R.sub(rem[shift + j], R.mul(top, y))
        rem = list(trim(R, rem))
    return tuple(rem)


def content(R: Any, a: tuple) -> Any:
    c = R.zero
    for x in a:
        c = R.gcd(c, x)
    return c


def primitive_part(R: Any, a: tuple) -> tuple:
    if not a:
        return ()
    c = content(R, a)
    if R.is_negative(a[-1]):
        c = R.neg(c)
    return tuple(R.exact_div(x, c) for x in a)


def gcd(R: Any, a: tuple, b: tuple) -> tuple:
    """Greatest common divisor with positive leading coefficient.

    Content gcd times the last nonzero term of the primitive remainder
    sequence.
    """
    if not a and not b:
        return ()
    if not a:
        return _positive(R, b)
    if not b:
        return _positive(R, a)
    c = R.gcd(content(R, a), content(R, b))
    a, b = primitive_part(R, a), primitive_part(R, b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = pseudo_rem(R, a, b)
        a, b = b, primitive_part(R, r)
    return scale(R, c, a)


def _positive(R: Any, a: tuple) -> tuple:
    return neg(R, a) if R.is_negative(a[-1]) else a
