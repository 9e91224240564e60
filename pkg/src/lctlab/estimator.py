"""Certified brackets for the lct at the origin.

Upper bounds come from jet fibers: for every order ``m``,
``lct <= n - dim(fiber of m-jets over 0) / (m+1)``, and the infimum over
``m`` is the lct. Lower bounds come from degenerating to monomial initial
ideals (lct can only drop in the limit) and from ``lct >= 1/ord``.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .algebra import INF, ExtRational, Ideal, Polynomial, is_infinite, order_at_origin
from .groebner import Budget, BudgetExceededError, buchberger, monomial_dimension
from .jets import fiber_over_origin, jet_ideal
from .newton import monomial_lct

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class LctBracket:
    lower: ExtRational
    upper: ExtRational
    exact: bool
    lower_provenance: str
    upper_provenance: str
    candidate: Fraction | None = None
    notes: tuple = ()

    def __post_init__(self):
        if self.lower > self.upper:
            raise ValueError(f"empty bracket [{self.lower}, {self.upper}]")
        if self.exact and self.lower != self.upper:
            raise ValueError("an exact bracket must have lower == upper")

    @property
    def width(self) -> ExtRational:
        if is_infinite(self.upper) and is_infinite(self.lower):
            return Fraction(0)
        return self.upper - self.lower

    def __contains__(self, value) -> bool:
        return self.lower <= value <= self.upper

    @classmethod
    def point(cls, value: ExtRational, provenance: str) -> "LctBracket":
        return cls(value, value, True, provenance, provenance)


@dataclass(frozen=True)
class JetRecord:
    m: int
    fiber_dim: int | None
    bound: ExtRational | None
    error: str | None = None
    diagnostics: dict = field(default_factory=dict, compare=False)


@dataclass(frozen=True)
class JetProfile:
    n: int
    records: tuple

    def best(self) -> tuple[ExtRational, int | None]:
        """Running minimum over completed orders, and the order attaining it."""
        best, arg = Fraction(self.n), None
        for r in self.records:
            if r.bound is not None and (arg is None or r.bound < best):
                best, arg = r.bound, r.m
        return best, arg

    def running_minimum(self) -> list[ExtRational]:
        out, cur = [], Fraction(self.n)
        for r in self.records:
            if r.bound is not None and r.bound < cur:
                cur = r.bound
            out.append(cur)
        return out


def _require_proper(a: Ideal):
    if a.is_zero():
        raise ValueError("the zero ideal has lct 0 by convention; no jets needed")


def jet_fiber_dimension(a: Ideal, m: int, budget: Budget | None = None) -> tuple[int, dict]:
    """Dimension of the m-jets of V(a) lying over the origin.

    Measured inside the ``n*m`` variables of jet levels ``1..m``; order 0 is
    the point itself and has dimension 0.
    """
    if m == 0:
        jet_ideal(a, 0)  # validates vanishing at the origin
        return 0, {}
    fiber = fiber_over_origin(jet_ideal(a, m))
    ideal = fiber.ideal
    budget = budget or Budget()
    diag = {"fiber_vars": fiber.nvars, "fiber_generators": len(ideal.generators),
            "dropped_generators": fiber.dropped}
    if ideal.is_zero():
        return fiber.nvars, diag
    if ideal.is_monomial():
        leads = ideal.exponents()
    else:
        gb = buchberger(ideal, budget=budget)
        diag.update(gb.diagnostics)
        leads = gb.leading_exponents()
    return monomial_dimension(fiber.nvars, leads, budget.max_subsets), diag


def jet_upper_bound(a: Ideal, m: int, budget: Budget | None = None) -> Fraction:
    _require_proper(a)
    dim, _ = jet_fiber_dimension(a, m, budget)
    return Fraction(a.n) - Fraction(dim, m + 1)


def jet_profile(a: Ideal, m_max: int, budget: Budget | None = None,
                m_min: int = 1) -> JetProfile:
    """Jet bounds for ``m_min <= m <= m_max``; budget failures are recorded
    per order and the remaining orders still run."""
    _require_proper(a)
    records = []
    for m in range(m_min, m_max + 1):
        try:
            dim, diag = jet_fiber_dimension(a, m, budget)
        except BudgetExceededError as exc:
            log.info("jet order %d over budget: %s", m, exc)
            records.append(JetRecord(m, None, None, str(exc), exc.diagnostics))
            continue
        records.append(JetRecord(m, dim, Fraction(a.n) - Fraction(dim, m + 1), None, diag))
    return JetProfile(a.n, tuple(records))


def stable_candidate(profile: JetProfile) -> Fraction | None:
    """Heuristic guess at the limit: a bound repeated at orders m1 < m2 with
    (m1+1) | (m2+1) and its denominator dividing m1+1. Never a certificate."""
    done = [r for r in profile.records if r.bound is not None]
    best = None
    for r1, r2 in itertools.combinations(done, 2):
        if (r1.bound == r2.bound and (r2.m + 1) % (r1.m + 1) == 0
                and (r1.m + 1) % r1.bound.denominator == 0):
            if best is None or r1.bound < best:
                best = r1.bound
    return best


def initial_ideal(a: Ideal, weight: Sequence[int]) -> Ideal:
    """Lowest weighted-degree part of each generator.

    This generates a subideal of the true initial ideal, which is enough for
    a lower bound since lct is monotone under inclusion.
    """
    if len(weight) != a.n:
        raise ValueError(f"weight {tuple(weight)} has wrong length for n={a.n}")
    if any(w < 0 for w in weight) or not any(weight):
        raise ValueError("weights must be nonnegative and not all zero")
    gens = []
    for g in a.nonzero_generators():
        wdeg = {e: sum(w * x for w, x in zip(weight, e)) for e in g.terms}
        low = min(wdeg.values())
        gens.append(Polynomial(a.n, {e: c for e, c in g.items() if wdeg[e] == low}))
    return Ideal(a.n, gens)


def default_weights(n: int) -> list[tuple]:
    ws = [(1,) * n]
    if n <= 3:
        for bits in itertools.product((0, 1), repeat=n):
            if any(bits) and bits not in ws:
                ws.append(bits)
    return ws


def degeneration_lower_bound_with_weight(
        a: Ideal, weights: Iterable[Sequence[int]]) -> tuple[ExtRational, tuple | None]:
    best, arg = Fraction(0), None
    for w in weights:
        ini = initial_ideal(a, w)
        if not ini.is_monomial():
            continue
        value, _ = monomial_lct(ini)
        if value > best or arg is None and value == best:
            best, arg = value, tuple(w)
    return best, arg


def degeneration_lower_bound(a: Ideal, weights: Iterable[Sequence[int]] | None = None) -> ExtRational:
    if weights is None:
        weights = default_weights(a.n)
    return degeneration_lower_bound_with_weight(a, weights)[0]


def estimate_lct(a: Ideal, m_max: int = 5, weights: Iterable[Sequence[int]] | None = None,
                 budget: Budget | None = None, profile_out: list | None = None) -> LctBracket:
    """Bracket the lct of ``a`` at the origin.

    Monomial ideals are answered exactly by the Newton oracle. Otherwise the
    lower end is the best of monomial degenerations and ``1/ord``; the upper
    end is the best of the jet profile, ``n/ord`` and ``n``. Exactness is only
    claimed when the two ends meet.
    """
    n = a.n
    if a.is_zero():
        return LctBracket.point(Fraction(0), "convention")
    if not a.vanishes_at_origin:
        return LctBracket.point(INF, "convention")
    if a.is_monomial():
        value, _ = monomial_lct(a)
        return LctBracket.point(value, "newton-oracle")

    order = order_at_origin(a)
    lower, lower_tag = Fraction(0), "trivial"
    if weights is None:
        weights = default_weights(n)
    deg, w = degeneration_lower_bound_with_weight(a, list(weights))
    if w is not None and deg > lower:
        lower, lower_tag = deg, "degeneration-weight-" + ",".join(map(str, w))
    if Fraction(1, order) > lower:
        lower, lower_tag = Fraction(1, order), "multiplicity"

    upper, upper_tag = Fraction(n), "dimension-bound"
    if Fraction(n, order) < upper:
        upper, upper_tag = Fraction(n, order), "multiplicity"
    profile = jet_profile(a, m_max, budget)
    if profile_out is not None:
        profile_out.append(profile)
    best, arg = profile.best()
    if arg is not None and best < upper:
        upper, upper_tag = best, f"jet-order-{arg}"
    assert upper <= Fraction(n, order) <= n

    notes = []
    candidate = stable_candidate(profile)
    if candidate is not None and not lower <= candidate <= upper:
        candidate = None
    if candidate is not None:
        notes.append("candidate is a conjecture from repeated jet bounds, not certified")
    errors = [r.m for r in profile.records if r.error]
    if errors:
        notes.append(f"jet orders over budget: {errors}")
    return LctBracket(lower, upper, lower == upper, lower_tag, upper_tag, candidate, tuple(notes))


Estimator = Callable[[Ideal], LctBracket]
