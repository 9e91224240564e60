"""Truncation brackets and explicit families of ideals with known thresholds.

A power series is only ever seen through its truncations ``a + m^d``. Since
``a`` is contained in ``a + m^d``, ``lct(a) <= lct(a + m^d)``, and adding
``m^d`` raises the threshold by at most ``n/d``; every statement about a
series is therefore a bracket of width ``n/d`` around a truncation.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence

from .algebra import INF, ExtRational, Ideal, Polynomial, is_infinite, monomials_of_degree
from .estimator import LctBracket, estimate_lct
from .newton import minimalize_generators, monomial_lct


class NotHypersurfaceThresholdError(ValueError):
    pass


class UncertifiedValueError(ValueError):
    """A value needed to be exact but only a bracket was available."""


class MonotonicityError(AssertionError):
    pass


def truncate_ideal(a: Ideal, d: int) -> Ideal:
    """Generators of ``a + m^d``: each generator with its terms of degree
    ``>= d`` removed, followed by every monomial of degree ``d``."""
    if d < 1:
        raise ValueError("truncation degree must be at least 1")
    gens = [g.truncate_below(d) for g in a.generators]
    gens = [g for g in gens if g]
    gens += [Polynomial.monomial(e) for e in monomials_of_degree(a.n, d)]
    return Ideal(a.n, gens)


@dataclass(frozen=True)
class TruncationSeries:
    """Finitely many truncations ``a + m^d`` of one (possibly infinite) series."""

    n: int
    truncations: Mapping[int, Ideal]

    @classmethod
    def from_ideal(cls, a: Ideal, degrees: Iterable[int]) -> "TruncationSeries":
        return cls(a.n, {d: truncate_ideal(a, d) for d in sorted(set(degrees))})

    @classmethod
    def from_polynomials(cls, n: int, truncations: Mapping[int, Sequence[Polynomial]]):
        """Series given by user-supplied generator lists per degree; each list
        is taken modulo ``m^d``."""
        return cls(n, {d: truncate_ideal(Ideal(n, gens), d)
                       for d, gens in sorted(truncations.items())})

    def is_compatible(self) -> bool:
        degrees = sorted(self.truncations)
        for hi, lo in itertools.combinations(reversed(degrees), 2):
            if truncate_ideal(self.truncations[hi], lo) != self.truncations[lo]:
                return False
        return True

    def brackets(self, inner=None) -> dict[int, LctBracket]:
        out = {}
        for d, t in self.truncations.items():
            c = (inner or estimate_lct)(t)
            out[d] = _widen(c, self.n, d)
        return out


def _widen(c: LctBracket, n: int, d: int) -> LctBracket:
    width = Fraction(n, d)
    lower = max(Fraction(0), c.lower - width)
    upper = min(Fraction(n), c.upper)
    notes = c.notes
    if not c.exact:
        notes = notes + ("truncation value itself only bracketed; width exceeds n/d",)
    return LctBracket(lower, upper, lower == upper, f"truncation-degree-{d}",
                      f"truncation-degree-{d}/{c.upper_provenance}", None, notes)


def truncation_bracket(a: Ideal, d: int,
                       inner_estimator: Callable[[Ideal], LctBracket] | None = None) -> LctBracket:
    """Certified bracket for ``lct(a)`` from the truncation at degree ``d``.

    If the inner estimator pins ``c = lct(a + m^d)`` exactly the result is
    ``[c - n/d, c]``; otherwise the inner uncertainty widens it.
    """
    if not a.vanishes_at_origin:
        raise ValueError("ideal does not vanish at the origin")
    inner = inner_estimator or estimate_lct
    return _widen(inner(truncate_ideal(a, d)), a.n, d)


def _exact_value(a: Ideal, inner) -> ExtRational:
    b = (inner or estimate_lct)(a)
    if not b.exact:
        raise UncertifiedValueError(f"lct of {a} only known within [{b.lower}, {b.upper}]")
    return b.lower


def truncation_monotone_check(a: Ideal, degrees: Iterable[int], inner=None) -> list[ExtRational]:
    """Exact ``lct(a + m^d)`` for each degree, checked to be non-increasing
    in ``d`` and never below a certified lower bound for ``lct(a)``."""
    degrees = sorted(set(degrees))
    values = [_exact_value(truncate_ideal(a, d), inner) for d in degrees]
    for (d1, v1), (d2, v2) in zip(zip(degrees, values), zip(degrees[1:], values[1:])):
        if v2 > v1:
            raise MonotonicityError(f"lct(a + m^{d2}) = {v2} exceeds lct(a + m^{d1}) = {v1}")
    floor = (inner or estimate_lct)(a).lower
    for d, v in zip(degrees, values):
        if v < floor:
            raise MonotonicityError(f"lct(a + m^{d}) = {v} is below the lower bound {floor}")
    return values


# -- explicit constructions --------------------------------------------------

def diagonal_exponents(f: Polynomial) -> list[int] | None:
    """Exponents ``b_i`` if ``f`` is a sum of pure powers of distinct
    variables (any nonzero coefficients), else None."""
    seen = set()
    out = []
    for e in f.terms:
        support = [j for j, x in enumerate(e) if x]
        if len(support) != 1 or support[0] in seen:
            return None
        seen.add(support[0])
        out.append(e[support[0]])
    return out


def diagonal_lct(f: Polynomial) -> Fraction | None:
    """Threshold of a diagonal hypersurface ``sum c_i x_i^b_i``.

    Equals ``min(1, lct(x_1^b_1, ..., x_k^b_k))``, the second term read off
    the Newton oracle. Returns None when ``f`` is not diagonal.
    """
    exps = diagonal_exponents(f)
    if not exps:
        return None
    value, _ = monomial_lct(Ideal(f.n, [Polynomial.monomial(e) for e in f.terms]))
    return min(Fraction(1), value)


def _as_fraction(c) -> Fraction:
    if is_infinite(c):
        raise ValueError("threshold must be finite")
    return Fraction(c)


def thom_sebastiani_shift(f: Polynomial, c) -> tuple[Polynomial, Fraction]:
    """``g = f + y_1^b + ... + y_{b-a}^b`` for ``c = lct(f) = a/b``.

    The new variables are appended after those of ``f``; the prediction is
    ``min(1, c + (b-a)/b)``.
    """
    c = _as_fraction(c)
    if c > 1:
        raise NotHypersurfaceThresholdError(f"hypersurface thresholds are at most 1, got {c}")
    if c <= 0:
        raise ValueError(f"threshold must be positive, got {c}")
    num, den = c.numerator, c.denominator
    extra = den - num
    N = f.n + extra
    g = f.embed(N)
    for i in range(extra):
        exp = [0] * N
        exp[f.n + i] = den
        g = g + Polynomial.monomial(exp)
    return g, min(Fraction(1), c + Fraction(extra, den))


def t_power_shift(a: Ideal, m: int, c=None) -> tuple[Ideal, ExtRational]:
    """``a + (t^m)`` with ``t`` a new last variable; predicts ``c + 1/m``.

    ``c`` defaults to the oracle value when ``a`` is monomial.
    """
    if m < 1:
        raise ValueError("m must be a positive integer")
    if c is None:
        c = _oracle_or_none(a)
        if c is None:
            raise UncertifiedValueError("supply lct(a) for a non-monomial ideal")
    N = a.n + 1
    gens = [g.embed(N) for g in a.generators]
    t = [0] * N
    t[a.n] = m
    gens.append(Polynomial.monomial(t))
    predicted = c if is_infinite(c) else Fraction(c) + Fraction(1, m)
    return Ideal(N, gens), predicted


def cylinder_extend(a: Ideal) -> Ideal:
    """The same generators in one more (unused) variable."""
    return Ideal(a.n + 1, [g.embed(a.n + 1) for g in a.generators])


def power_scale(a: Ideal, m: int, c=None) -> tuple[Ideal, ExtRational | None]:
    """``a^m`` generated by all m-fold products; predicts ``lct(a)/m``."""
    if m < 1:
        raise ValueError("m must be a positive integer")
    gens = a.nonzero_generators()
    if a.is_monomial():
        exps = [next(iter(g.terms)) for g in gens]
        prods = {tuple(map(sum, zip(*combo)))
                 for combo in itertools.combinations_with_replacement(exps, m)}
        out = Ideal.monomial(a.n, minimalize_generators(prods))
    else:
        seen = []
        for combo in itertools.combinations_with_replacement(range(len(gens)), m):
            p = Polynomial.constant(a.n, 1)
            for k in combo:
                p = p * gens[k]
            if p not in seen:
                seen.append(p)
        out = Ideal(a.n, seen)
    if c is None:
        c = _oracle_or_none(a)
    predicted = None if c is None else (c if is_infinite(c) else Fraction(c) / m)
    return out, predicted


def _oracle_or_none(a: Ideal) -> ExtRational | None:
    if a.is_monomial():
        return monomial_lct(a)[0]
    return None


@dataclass(frozen=True)
class LadderState:
    ordF_a: int
    kappaF: int
    ordF0_a: int
    kappaF0: int
    m: int = 0

    def __post_init__(self):
        if self.ordF_a < 1:
            raise ValueError("ordF_a must be at least 1")
        if min(self.kappaF, self.ordF0_a, self.kappaF0, self.m) < 0:
            raise ValueError("ladder data must be nonnegative")

    def step(self, m: int) -> "LadderState":
        return LadderState(self.ordF_a, self.kappaF, self.ordF0_a, self.kappaF0, m)


def blowup_ladder(state: LadderState) -> Fraction:
    """Discrepancy quotient of the m-th divisor in the ladder of blow-ups
    along ``F`` meeting ``F_0``: ``(m(1+kF) + (1+kF0)) / (m ordF + ordF0)``."""
    den = state.m * state.ordF_a + state.ordF0_a
    if den == 0:
        raise ValueError("F_0 contribution undefined when ordF0_a = 0")
    return Fraction(state.m * (1 + state.kappaF) + (1 + state.kappaF0), den)


def ladder_limit(state: LadderState) -> Fraction:
    return Fraction(1 + state.kappaF, state.ordF_a)


def ladder_convergence_index(state: LadderState, eps) -> int:
    """Smallest ``M`` such that every ``m > M`` (with ``m >= 1``) has
    ``|q_m - limit| < eps``, from the closed form
    ``|q_m - limit| = |o(1+kF0) - o0(1+kF)| / (o (m o + o0))``."""
    eps = Fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    o, o0 = state.ordF_a, state.ordF0_a
    delta = abs(o * (1 + state.kappaF0) - o0 * (1 + state.kappaF))
    if delta == 0:
        return 0
    # need m*o + o0 > delta / (o * eps)
    bound = (Fraction(delta) / (o * eps) - o0) / o
    return max(0, math.floor(bound))
