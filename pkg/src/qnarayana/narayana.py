"""Narayana and Catalan polynomial families over t.

The central object is the signed-specialization family c_n(t): the row
polynomials whose coefficients are products of two floor-halved binomials.
It is computed by three permanently distinct routes (closed form,
recursion, and the q-row specialization in :mod:`qcomb`); the cross-checks
between the routes are the point of this package, so none of them is ever
consolidated away.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .exactalg import Polynomial

TVAR = "t"

_ONE = Polynomial.one(TVAR)
_T = Polynomial.gen(TVAR)
_ONE_PLUS_T = Polynomial(TVAR, (1, 1))


def binomial(n: int, k: int) -> int:
    """binom(n, k), zero outside 0 <= k <= n."""
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def catalan_number(n: int) -> int:
    """binom(2n, n) / (n + 1), the division exact."""
    if n < 0:
        raise ValueError("Catalan numbers need n >= 0")
    q, r = divmod(math.comb(2 * n, n), n + 1)
    assert r == 0
    return q


def narayana_number(n: int, k: int) -> int:
    """binom(n,k) * binom(n-1,k) / (k+1); zero outside 0 <= k <= n-1."""
    if n < 1:
        raise ValueError("Narayana numbers need n >= 1")
    if k < 0 or k > n - 1:
        return 0
    q, r = divmod(binomial(n, k) * binomial(n - 1, k), k + 1)
    assert r == 0
    return q


def narayana_poly(n: int) -> Polynomial:
    """Row polynomial with Narayana-number coefficients; 1 for n = 0."""
    if n < 0:
        raise ValueError("index must be >= 0")
    if n == 0:
        return _ONE
    return Polynomial(TVAR, (narayana_number(n, k) for k in range(n)))


def narayana_b_poly(n: int) -> Polynomial:
    """Type-B analogue: coefficients are the squared binomials binom(n,k)^2."""
    if n < 0:
        raise ValueError("index must be >= 0")
    return Polynomial(TVAR, (binomial(n, k) ** 2 for k in range(n + 1)))


def v_coeff(n: int, k: int) -> int:
    """binom(floor((n-1)/2), floor(k/2)) * binom(floor(n/2), floor((k+1)/2))."""
    if n < 1:
        raise ValueError("v coefficients need n >= 1")
    if k < 0:
        return 0
    return binomial((n - 1) // 2, k // 2) * binomial(n // 2, (k + 1) // 2)


def c_poly(n: int) -> Polynomial:
    """c_n(t) from the closed-form coefficients; 1 for n = 0.

    The sum runs k = 0..n; the top terms vanish on their own, leaving
    degree n - 1 for n >= 1.
    """
    if n < 0:
        raise ValueError("index must be >= 0")
    if n == 0:
        return _ONE
    return Polynomial(TVAR, (v_coeff(n, k) for k in range(n + 1)))


def c_poly_recursive(n: int) -> Polynomial:
    """c_n(t) built purely from the even/odd recursion.

    c_0 = c_1 = 1; c_{2m} = (1+t) c_{2m-1};
    c_{2m+1} = (1+t) c_{2m} - t * narayana_poly(m)(t^2).
    The result is asserted against the closed form.
    """
    if n < 0:
        raise ValueError("index must be >= 0")
    polys = [_ONE, _ONE]
    for m in range(2, n + 1):
        if m % 2 == 0:
            polys.append(_ONE_PLUS_T * polys[m - 1])
        else:
            half = m // 2
            polys.append(_ONE_PLUS_T * polys[m - 1] - _T * narayana_poly(half).subs_square())
    result = polys[n]
    assert result == c_poly(n), f"recursion and closed form disagree at n={n}"
    return result


def c_odd_closed(n: int) -> Polynomial:
    """The odd-index member c_{2n+1}(t) as narayana_b_poly(n)(t^2) + n*t*narayana_poly(n)(t^2).

    Note the explicit factor t on the second summand: the even powers of
    c_{2n+1} carry the squared binomials and the odd powers carry
    binom(n,k)binom(n,k+1), so the Narayana part must sit on odd powers.
    Asserted against the closed-form route.
    """
    if n < 0:
        raise ValueError("index must be >= 0")
    even_part = narayana_b_poly(n).subs_square()
    odd_part = _T * narayana_poly(n).subs_square() * n
    result = even_part + odd_part
    assert result == c_poly(2 * n + 1), f"odd closed form disagrees at n={n}"
    return result


def special_values(n: int) -> tuple[int, int]:
    """(c_n(1), c_n(-1)) from the closed forms, asserted against evaluation.

    c_n(1) = binom(n, floor(n/2)); c_n(-1) is 0 for even n >= 2 and the
    Catalan number with index (n-1)/2 for odd n.
    """
    if n < 0:
        raise ValueError("index must be >= 0")
    at_one = binomial(n, n // 2)
    if n == 0:
        at_minus_one = 1
    elif n % 2 == 0:
        at_minus_one = 0
    else:
        at_minus_one = catalan_number((n - 1) // 2)
    p = c_poly(n)
    assert at_one == p(1) and at_minus_one == p(-1), f"special values disagree at n={n}"
    return at_one, at_minus_one


FAMILIES = ("catalan_C", "narayana_poly", "narayana_B", "small_c")

_FAMILY_BUILDERS = {
    "catalan_C": lambda n: Polynomial.constant(TVAR, catalan_number(n)),
    "narayana_poly": narayana_poly,
    "narayana_B": narayana_b_poly,
    "small_c": c_poly,
}


@dataclass(frozen=True)
class PolySequence:
    """A named family prefix: entry n is the n-th member polynomial."""

    family: str
    entries: tuple[Polynomial, ...]


def poly_sequence(family: str, length: int) -> PolySequence:
    """The first ``length`` members of a family."""
    if family not in _FAMILY_BUILDERS:
        raise ValueError(f"unknown family {family!r} (expected one of {FAMILIES})")
    if length < 0:
        raise ValueError("length must be >= 0")
    build = _FAMILY_BUILDERS[family]
    return PolySequence(family, tuple(build(n) for n in range(length)))
