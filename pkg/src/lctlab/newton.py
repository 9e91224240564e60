"""Log canonical thresholds of monomial ideals from the Newton polyhedron.

For a monomial ideal the threshold at the origin is ``1/mu`` where ``mu`` is
the least ``t`` with ``t*(1,...,1)`` in the Newton polyhedron (Howald). The
value is found by exact simplex and returned with a certificate that is
re-checked in exact arithmetic before it leaves this module.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import simplex
from .algebra import INF, ExtRational, Ideal, grevlex_key

log = logging.getLogger(__name__)


class NotMonomialIdealError(ValueError):
    pass


class CertificateError(AssertionError):
    """The LP solution failed exact re-verification (a bug, never expected)."""


@dataclass(frozen=True)
class NewtonPolyhedron:
    n: int
    generators: tuple

    @classmethod
    def of(cls, n: int, exponents: Iterable[Sequence[int]]) -> "NewtonPolyhedron":
        return cls(n, tuple(minimalize_generators(exponents)))

    def contains(self, point: Sequence) -> bool:
        """Membership of a rational point (solves a feasibility LP)."""
        k, n = len(self.generators), self.n
        if k == 0:
            return False
        A = [[v[j] for v in self.generators] + [int(i == j) for i in range(n)] for j in range(n)]
        A.append([1] * k + [0] * n)
        try:
            simplex.solve([0] * (k + n), A, list(point) + [1])
        except simplex.InfeasibleError:
            return False
        return True


@dataclass(frozen=True)
class LpCertificate:
    """``sum(weights[v] * v) + slack == mu * (1,...,1)``, weights convex."""

    mu: Fraction
    generators: tuple
    weights: tuple
    slack: tuple

    def verify(self) -> bool:
        if any(w < 0 for w in self.weights) or any(s < 0 for s in self.slack):
            return False
        if sum(self.weights) != 1 or self.mu < 0:
            return False
        n = len(self.slack)
        for j in range(n):
            lhs = sum(w * v[j] for w, v in zip(self.weights, self.generators)) + self.slack[j]
            if lhs != self.mu:
                return False
        return True

    def as_dict(self) -> dict:
        return {"mu": self.mu, "generators": [list(v) for v in self.generators],
                "weights": list(self.weights), "slack": list(self.slack)}


def minimalize_generators(gens: Iterable[Sequence[int]]) -> list[tuple]:
    """Drop every exponent vector that dominates another one.

    The result is the minimal monomial generating set, sorted by degree and
    then descending grevlex so that it can serve as a canonical identifier.
    """
    vecs = sorted({tuple(v) for v in gens}, key=lambda v: (sum(v), grevlex_key(v)))
    out: list[tuple] = []
    for v in vecs:
        if not any(all(a >= b for a, b in zip(v, u)) for u in out):
            out.append(v)
    return sorted(out, key=lambda v: (sum(v), [-x for x in grevlex_key(v)[1]]))


def newton_mu(n: int, exponents: Sequence[Sequence[int]]) -> LpCertificate:
    """Solve ``min mu : sum(l_v v) + s = mu*1, sum(l_v) = 1, l, s >= 0``."""
    gens = [tuple(v) for v in exponents]
    k = len(gens)
    if k == 0:
        raise ValueError("empty generator set has no Newton polyhedron")
    # columns: l_1..l_k, s_1..s_n, mu
    A = []
    for j in range(n):
        A.append([v[j] for v in gens] + [int(i == j) for i in range(n)] + [-1])
    A.append([1] * k + [0] * n + [0])
    b = [0] * n + [1]
    c = [0] * (k + n) + [1]
    sol = simplex.solve(c, A, b)
    cert = LpCertificate(sol.value, tuple(gens), sol.x[:k], sol.x[k:k + n])
    if not cert.verify() or sol.x[-1] != sol.value:
        raise CertificateError(f"LP certificate failed re-verification: {cert}")
    return cert


def monomial_lct(a: Ideal) -> tuple[ExtRational, LpCertificate | None]:
    """Exact lct at the origin of a monomial ideal, with its LP certificate.

    The zero ideal gives 0 and an ideal containing a nonzero constant gives
    +inf; neither comes with a certificate.
    """
    gens = a.nonzero_generators()
    if not gens:
        return Fraction(0), None
    for g in gens:
        if not g.is_monomial():
            raise NotMonomialIdealError(f"generator {g} is not a monomial")
    if any(c != 1 for g in gens for c in g.terms.values()):
        log.warning("monomial generator coefficients are ignored")
    exps = [next(iter(g.terms)) for g in gens]
    if any(not any(e) for e in exps):
        return INF, None
    cert = newton_mu(a.n, minimalize_generators(exps))
    return 1 / cert.mu, cert


def monomial_lct_value(n: int, exponents: Iterable[Sequence[int]]) -> ExtRational:
    """Convenience wrapper taking exponent vectors directly."""
    return monomial_lct(Ideal.monomial(n, exponents))[0]
