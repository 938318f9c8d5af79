"""Bailey pairs as data: the defining relation, numeric specializations of
Bailey's lemma, and the double-derivative identity that generates the
restricted smallest-parts series.

A pair stores alpha_n and beta_n as truncated series for 0 <= n <= n_max,
relative to the parameter a = 1 (the only value this package needs).  The
defining relation

    beta_n = sum_{r=0..n} alpha_r / ((aq;q)_{n+r} (q;q)_{n-r})

is verified, never assumed.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from pathlib import Path

from .series import Series, lambert, monomial, one, poch, zero


class DegenerateParameterError(ValueError):
    """A lemma specialization where (z;q)_n or (y;q)_n vanishes identically."""


@dataclass(frozen=True)
class BaileyPair:
    alpha: tuple[Series, ...]
    beta: tuple[Series, ...]
    a: Fraction = Fraction(1)

    def __post_init__(self):
        if len(self.alpha) != len(self.beta) or not self.alpha:
            raise ValueError("alpha and beta must be tabulated for the same 0..n_max")
        orders = {s.order for s in self.alpha} | {s.order for s in self.beta}
        if len(orders) != 1:
            raise ValueError("all tabulated series must share one truncation order")

    @property
    def n_max(self) -> int:
        return len(self.alpha) - 1

    @property
    def order(self) -> int:
        return self.alpha[0].order


@lru_cache(maxsize=None)
def slater_j1(n_max: int, order: int, literal_alpha0: bool = False) -> BaileyPair:
    """The J(1) pair from Slater's list, relative to a = 1.

    alpha_0 = 1 and beta_0 = 1 by convention: the tabulated formulas
    alpha_{3k} = (-1)^k q^(3k(3k-1)/2) (1 + q^(3k)) and
    beta_n = (q^3;q^3)_{n-1} / ((q;q)_n (q;q)_{2n-1})
    are used verbatim for n >= 1, with alpha vanishing off multiples of 3.
    ``literal_alpha0=True`` instead reads the alpha formula at k = 0, which
    gives alpha_0 = 2 and breaks the defining relation at n = 1; it exists
    as a deliberately failing diagnostic.
    """
    if n_max < 1:
        raise ValueError("tabulate at least n = 1")
    alpha = [monomial(2 if literal_alpha0 else 1, 0, order)]
    beta = [one(order)]
    for n in range(1, n_max + 1):
        if n % 3:
            alpha.append(zero(order))
        else:
            k = n // 3
            sign = 1 if k % 2 == 0 else -1
            e = n * (n - 1) // 2  # 3k(3k-1)/2 at n = 3k
            cs = [0] * (order + 1)
            if e <= order:
                cs[e] += sign
            if e + n <= order:
                cs[e + n] += sign
            alpha.append(Series(cs))
        num = poch(1, 3, 3, n - 1, order)
        den = poch(1, 1, 1, n, order) * poch(1, 1, 1, 2 * n - 1, order)
        beta.append(num * den.invert())
    return BaileyPair(tuple(alpha), tuple(beta))


def verify_pair(pair: BaileyPair, order: int | None = None):
    """Check the defining relation for every 1 <= n <= n_max.

    Returns None on success, else (n, k, left, right): the first pair index
    n and coefficient exponent k where beta_n differs from the alpha sum.
    """
    if pair.a != 1:
        raise ValueError("only pairs relative to a = 1 are supported")
    order = pair.order if order is None else min(order, pair.order)
    for n in range(1, pair.n_max + 1):
        rhs = zero(order)
        for r in range(n + 1):
            if pair.alpha[r].is_zero():
                continue
            den = poch(1, 1, 1, n + r, order) * poch(1, 1, 1, n - r, order)
            rhs += pair.alpha[r] * den.invert()
        k = pair.beta[n].equal_up_to(rhs, order)
        if k is not None:
            return (n, k, pair.beta[n][k], rhs[k])
    return None


def lemma_sides(pair: BaileyPair, z, y, order: int) -> tuple[Series, Series]:
    """Both sides of Bailey's lemma at the numeric specialization (z, y), a = 1.

    Left:  sum_n (z;q)_n (y;q)_n (q/zy)^n beta_n
    Right: [(q/z)_inf (q/y)_inf / ((q)_inf (q/zy)_inf)]
           * sum_n (z;q)_n (y;q)_n (q/zy)^n alpha_n / ((q/z;q)_n (q/y;q)_n)

    z = 1 or y = 1 makes (z;q)_n or (y;q)_n vanish for n >= 1, so both sides
    collapse to their n = 0 terms; that is flagged as degenerate rather than
    reported as a meaningful match.  Every summand is O(q^n), so the pair
    must be tabulated to n_max >= order.
    """
    z, y = Fraction(z), Fraction(y)
    if z == 0 or y == 0:
        raise ValueError("z and y must be nonzero")
    if z == 1 or y == 1:
        raise DegenerateParameterError(
            "z = 1 or y = 1 zeroes every term with n >= 1 on both sides"
        )
    if pair.n_max < order:
        raise ValueError(
            f"truncation shortfall: n_max={pair.n_max} < order={order}"
        )
    w = 1 / (z * y)  # (q/zy)^n contributes w^n q^n

    lhs = zero(order)
    for n in range(min(pair.n_max, order) + 1):
        term = poch(z, 0, 1, n, order) * poch(y, 0, 1, n, order) * pair.beta[n]
        term = term * w**n
        if n:
            term = term * monomial(1, n, order)
        lhs += term

    prefactor = (
        poch(1 / z, 1, 1, None, order)
        * poch(1 / y, 1, 1, None, order)
        * (poch(1, 1, 1, None, order) * poch(w, 1, 1, None, order)).invert()
    )
    total = zero(order)
    for n in range(min(pair.n_max, order) + 1):
        if pair.alpha[n].is_zero():
            continue
        num = poch(z, 0, 1, n, order) * poch(y, 0, 1, n, order) * pair.alpha[n]
        den = poch(1 / z, 1, 1, n, order) * poch(1 / y, 1, 1, n, order)
        term = num * den.invert() * w**n
        if n:
            term = term * monomial(1, n, order)
        total += term
    return lhs, prefactor * total


def derivative_identity_sides(pair: BaileyPair, order: int) -> tuple[Series, Series]:
    """Both sides of the lemma differentiated in z and y at z = y = a = 1:

    sum_{n>=1} (q;q)_{n-1}^2 beta_n q^n
        = alpha_0 sum_{n>=1} n q^n/(1-q^n) + sum_{n>=1} alpha_n q^n/(1-q^n)^2.

    Summand n is O(q^n) on both sides, so n_max >= order suffices.
    """
    if pair.n_max < order:
        raise ValueError(
            f"truncation shortfall: n_max={pair.n_max} < order={order}"
        )
    lhs = zero(order)
    for n in range(1, order + 1):
        pref = poch(1, 1, 1, n - 1, order)
        lhs += pref * pref * pair.beta[n] * monomial(1, n, order)

    rhs = pair.alpha[0] * lambert(1, 1, order)
    for n in range(1, order + 1):
        if pair.alpha[n].is_zero():
            continue
        geom = (one(order) - monomial(1, n, order)).invert()
        rhs += pair.alpha[n] * monomial(1, n, order) * geom * geom
    return lhs, rhs


def pair_from_json(source) -> BaileyPair:
    """Load a pair from the declarative JSON format.

    The object carries "n_max", "order", and "alpha"/"beta" as arrays of
    coefficient-string arrays ("num/den", indexed from q^0).
    """
    if isinstance(source, (str, Path)):
        data = json.loads(Path(source).read_text())
    else:
        data = source
    order = int(data["order"])
    n_max = int(data["n_max"])
    alpha = tuple(Series.from_strings(row, order) for row in data["alpha"])
    beta = tuple(Series.from_strings(row, order) for row in data["beta"])
    if len(alpha) != n_max + 1 or len(beta) != n_max + 1:
        raise ValueError("alpha/beta tables must carry n_max + 1 rows")
    return BaileyPair(alpha, beta)


def pair_to_json(pair: BaileyPair) -> dict:
    """Dump a pair to the declarative JSON format (as a plain dict)."""
    return {
        "n_max": pair.n_max,
        "order": pair.order,
        "alpha": [s.to_strings() for s in pair.alpha],
        "beta": [s.to_strings() for s in pair.beta],
    }
