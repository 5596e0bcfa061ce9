"""The polynomial family u_n used for rotation powers and order tests.

u_0 = 0, u_1 = u_2 = 1, u_3 = X - 1, and u_{n+2} = (X - 2)*u_n - u_{n-2};
u_{-1} = -1 closes the recurrence downward. At X = 4*cos(t)^2 the value is
sin(n*t)/sin(t) for odd n and sin(n*t)/sin(2*t) for even n, so a rotation
whose pair parameter equals X has order exactly n iff u_n vanishes there and
no earlier u_k does.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import BadInput


@lru_cache(maxsize=None)
def u_poly(n: int) -> tuple[Fraction, ...]:
    """Coefficients of u_n, constant term first. Defined for n >= -1."""
    if n < -1:
        raise BadInput("u_n is defined for n >= -1")
    if n == -1:
        return (Fraction(-1),)
    if n == 0:
        return ()
    if n == 1 or n == 2:
        return (Fraction(1),)
    if n == 3:
        return (Fraction(-1), Fraction(1))
    prev = list(u_poly(n - 4))
    mid = u_poly(n - 2)
    out = [Fraction(0)] * (len(mid) + 1)
    for i, a in enumerate(mid):
        out[i] -= 2 * a
        out[i + 1] += a
    for i, a in enumerate(prev):
        out[i] -= a
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def eval_poly(coeffs, x):
    """Horner evaluation; x may be a FieldElem or a number."""
    acc = x * 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def u_eval(n: int, x):
    return eval_poly(u_poly(n), x)


def is_exact_rotation_order(x, n: int) -> bool:
    """True iff u_n(x) = 0 and u_k(x) != 0 for 1 <= k < n."""
    if n < 1:
        raise BadInput("order must be at least 1")
    if u_eval(n, x):
        return False
    return all(u_eval(k, x) for k in range(1, n))


def rotation_order(x, max_order: int = 64):
    """Smallest n with u_n(x) = 0, or None if none exists up to max_order."""
    for n in range(2, max_order + 1):
        if not u_eval(n, x):
            return n
    return None


def halfturn_identities(x, p: int):
    """The even-order value identities at half order, as (name, lhs, rhs).

    x is the pair parameter of an order-p rotation with p = 2*p1. Which
    square identity applies depends on the parity of p1.
    """
    if p % 2:
        raise BadInput("half-turn identities need an even order")
    p1 = p // 2
    up1 = u_eval(p1, x)
    um1 = u_eval(p1 - 1, x)
    four = x * 0 + 4
    out = []
    if p1 % 2 == 0:
        out.append(("square-even-half", x * (four - x) * up1 * up1, x * 0 + 4))
    else:
        out.append(("square-odd-half", (four - x) * up1 * up1, x * 0 + 4))
    out.append(("cross-product", (four - x) * up1 * um1, x * 0 + 2))
    out.append(("mirror-index", u_eval(p1 + 1, x), um1))
    return out
