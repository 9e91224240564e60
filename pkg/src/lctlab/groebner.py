"""Reduced Groebner bases over the rationals (grevlex) and Krull dimension.

The engine works on primitive integer polynomials whose monomials are stored
as grevlex keys ``(deg, -e[n-1], ..., -e[0])``, so plain tuple comparison is
the monomial order and divisibility is a componentwise test. The final basis
is returned monic over ``Fraction``.

``s_polynomial`` and ``normal_form`` are a separate, deliberately simple
implementation on :class:`Polynomial`; they certify engine output.
"""

from __future__ import annotations

import heapq
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Sequence

from .algebra import Ideal, Polynomial, grevlex_key

log = logging.getLogger(__name__)

GREVLEX = "grevlex"

DEFAULT_MAX_SPAIRS = 200_000
DEFAULT_MAX_TERMS = 200_000
DEFAULT_MAX_SUBSETS = 2_000_000


class BudgetExceededError(RuntimeError):
    """A computation budget ran out; no partial answer is returned."""

    def __init__(self, message: str, diagnostics: dict | None = None):
        super().__init__(message)
        self.diagnostics = dict(diagnostics or {})


class UndefinedCodimensionError(ValueError):
    pass


@dataclass(frozen=True)
class Budget:
    max_spairs: int = DEFAULT_MAX_SPAIRS
    max_terms: int = DEFAULT_MAX_TERMS
    max_subsets: int = DEFAULT_MAX_SUBSETS


@dataclass(frozen=True)
class GroebnerBasis:
    n: int
    elements: tuple
    order: str = GREVLEX
    diagnostics: dict = field(default_factory=dict, compare=False)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def is_unit(self) -> bool:
        return any(g.is_constant() for g in self.elements)

    def leading_exponents(self) -> list[tuple]:
        return [g.leading_term()[0] for g in self.elements]


# -- key-space helpers -----------------------------------------------------

def _to_key(e: Sequence[int]) -> tuple:
    return (sum(e),) + tuple(-a for a in reversed(e))


def _from_key(k: tuple) -> tuple:
    return tuple(-a for a in reversed(k[1:]))


def _divides(a: tuple, b: tuple) -> bool:
    # key a divides key b  <=>  every exponent of a <= that of b
    for x, y in zip(a[1:], b[1:]):
        if x < y:
            return False
    return True


def _kmul(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def _kdiv(b: tuple, a: tuple) -> tuple:
    return tuple(y - x for x, y in zip(a, b))


def _klcm(a: tuple, b: tuple) -> tuple:
    rest = tuple(x if x < y else y for x, y in zip(a[1:], b[1:]))
    return (-sum(rest),) + rest


def _coprime(a: tuple, b: tuple) -> bool:
    for x, y in zip(a[1:], b[1:]):
        if x and y:
            return False
    return True


class _Poly:
    """Primitive integer polynomial in key space with cached leading term."""

    __slots__ = ("terms", "lm", "lc")

    def __init__(self, terms: dict):
        self.terms = terms
        self.lm = max(terms)
        self.lc = terms[self.lm]


def _primitive(terms: dict) -> dict:
    g = 0
    for c in terms.values():
        g = gcd(g, c)
        if g == 1:
            break
    lead = terms[max(terms)]
    if lead < 0:
        g = -g
    if g != 1:
        terms = {k: c // g for k, c in terms.items()}
    return terms


def _from_polynomial(p: Polynomial) -> dict:
    den = 1
    for c in p.terms.values():
        den = den * c.denominator // gcd(den, c.denominator)
    return {_to_key(e): int(c * den) for e, c in p.items()}


class _Engine:
    def __init__(self, n: int, budget: Budget):
        self.n = n
        self.budget = budget
        self.polys: list[_Poly] = []
        self.stats = {"pairs_processed": 0, "reductions": 0, "zero_reductions": 0,
                      "pairs_created": 0, "max_terms_seen": 0}

    def _check_terms(self, terms: dict):
        size = len(terms)
        if size > self.stats["max_terms_seen"]:
            self.stats["max_terms_seen"] = size
            if size > self.budget.max_terms:
                raise BudgetExceededError(
                    f"intermediate polynomial exceeded {self.budget.max_terms} terms",
                    self.stats)

    def reduce(self, terms: dict, basis: list, full: bool) -> dict:
        """Reduce ``terms`` by the polynomials indexed by ``basis`` (indices or
        ``_Poly`` objects). With ``full`` every term is reduced, otherwise only
        leading terms."""
        divisors = [self.polys[i] if isinstance(i, int) else i for i in basis]
        f = dict(terms)
        rem: dict = {}
        steps = 0
        while f:
            lt = max(f)
            c = f[lt]
            for g in divisors:
                if _divides(g.lm, lt):
                    break
            else:
                if not full:
                    rem.update(f)
                    break
                rem[lt] = c
                del f[lt]
                continue
            q = gcd(c, g.lc)
            mf, mg = g.lc // q, c // q
            if mf != 1:
                for k in f:
                    f[k] *= mf
                for k in rem:
                    rem[k] *= mf
            shift = _kdiv(lt, g.lm)
            for k, gc in g.terms.items():
                key = _kmul(k, shift)
                v = f.get(key, 0) - mg * gc
                if v:
                    f[key] = v
                else:
                    f.pop(key, None)
            steps += 1
            if steps % 16 == 0:
                self._check_terms(f)
                if f or rem:
                    both = {**f, **rem}
                    g_all = 0
                    for v in both.values():
                        g_all = gcd(g_all, v)
                        if g_all == 1:
                            break
                    if g_all > 1:
                        f = {k: v // g_all for k, v in f.items()}
                        rem = {k: v // g_all for k, v in rem.items()}
        self.stats["reductions"] += steps
        if not rem:
            return {}
        self._check_terms(rem)
        return _primitive(rem)

    def add(self, terms: dict) -> int:
        self.polys.append(_Poly(terms))
        return len(self.polys) - 1

    def spoly(self, i: int, j: int) -> dict:
        f, g = self.polys[i], self.polys[j]
        lcm = _klcm(f.lm, g.lm)
        sf, sg = _kdiv(lcm, f.lm), _kdiv(lcm, g.lm)
        q = gcd(f.lc, g.lc)
        cf, cg = g.lc // q, f.lc // q
        out: dict = {}
        for k, c in f.terms.items():
            out[_kmul(k, sf)] = cf * c
        for k, c in g.terms.items():
            key = _kmul(k, sg)
            v = out.get(key, 0) - cg * c
            if v:
                out[key] = v
            else:
                out.pop(key, None)
        return out


def buchberger(a: Ideal | Sequence[Polynomial], order: str = GREVLEX,
               budget: Budget | None = None, n: int | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of ``a`` under grevlex.

    Uses normal pair selection (least lcm, ties by creation index) and the
    Gebauer-Moeller installation of the product and chain criteria.
    """
    if order != GREVLEX:
        raise ValueError(f"unsupported monomial order {order!r}")
    if isinstance(a, Ideal):
        n, gens = a.n, a.generators
    else:
        gens = tuple(a)
        if n is None:
            if not gens:
                raise ValueError("variable count needed for an empty generator list")
            n = gens[0].n
    budget = budget or Budget()
    eng = _Engine(n, budget)

    # interreduce the input until no leading monomial divides another
    current = [_Poly(_primitive(_from_polynomial(g))) for g in gens if g]
    changed = True
    while changed:
        changed = False
        current.sort(key=lambda p: p.lm)
        kept: list[_Poly] = []
        for i, p in enumerate(current):
            r = eng.reduce(p.terms, kept + current[i + 1:], full=False)
            if not r:
                changed = True
                continue
            if max(r)[0] == 0:
                return _finish_unit(n, eng)
            if r != p.terms:
                changed = True
                p = _Poly(r)
            kept.append(p)
        current = kept
    basis_idx = [eng.add(p.terms) for p in current]

    G: list[int] = []
    pairs: list = []  # heap of (lcm key, creation index, i, j)
    counter = [0]

    def update(h: int):
        nonlocal G, pairs
        mh = eng.polys[h].lm
        cands = []
        for g in G:
            mg = eng.polys[g].lm
            cands.append((g, _klcm(mh, mg), _coprime(mh, mg)))
        # chain criterion among the new pairs: drop a pair whose lcm is a
        # multiple of another pending or accepted lcm (equal lcms keep one)
        accepted = []
        while cands:
            g, lcm, cop = cands.pop(0)
            if cop or not (any(_divides(c[1], lcm) for c in cands)
                           or any(_divides(c[1], lcm) for c in accepted)):
                accepted.append((g, lcm, cop))
        # product criterion
        new_pairs = [(g, lcm) for g, lcm, cop in accepted if not cop]
        # criterion B on old pairs
        old = []
        for lcm, cidx, i, j in pairs:
            if (_divides(mh, lcm)
                    and _klcm(eng.polys[i].lm, mh) != lcm
                    and _klcm(eng.polys[j].lm, mh) != lcm):
                continue
            old.append((lcm, cidx, i, j))
        for g, lcm in new_pairs:
            counter[0] += 1
            old.append((lcm, counter[0], g, h))
        eng.stats["pairs_created"] = counter[0]
        heapq.heapify(old)
        pairs = old
        G = [g for g in G if not _divides(mh, eng.polys[g].lm)]
        G.append(h)

    for h in sorted(basis_idx, key=lambda i: eng.polys[i].lm):
        update(h)

    while pairs:
        lcm, _, i, j = heapq.heappop(pairs)
        eng.stats["pairs_processed"] += 1
        if eng.stats["pairs_processed"] > budget.max_spairs:
            raise BudgetExceededError(
                f"exceeded {budget.max_spairs} S-pairs", eng.stats)
        s = eng.spoly(i, j)
        if not s:
            eng.stats["zero_reductions"] += 1
            continue
        divisors = sorted(G, key=lambda g: eng.polys[g].lm)
        r = eng.reduce(s, divisors, full=False)
        if not r:
            eng.stats["zero_reductions"] += 1
            continue
        if max(r)[0] == 0:
            return _finish_unit(n, eng)
        update(eng.add(r))

    return _finish(n, eng, G)


def _finish_unit(n: int, eng: _Engine) -> GroebnerBasis:
    return GroebnerBasis(n, (Polynomial.constant(n, 1),), GREVLEX, dict(eng.stats))


def _finish(n: int, eng: _Engine, G: list[int]) -> GroebnerBasis:
    # G has pairwise non-dividing leading monomials; tail-reduce each element
    reduced = []
    for g in G:
        others = [h for h in G if h != g]
        r = eng.reduce(eng.polys[g].terms, others, full=True)
        reduced.append(r)
    elements = []
    for terms in reduced:
        lead = terms[max(terms)]
        poly = Polynomial._trusted(
            n, {_from_key(k): Fraction(c, lead) for k, c in terms.items()})
        elements.append(poly)
    elements.sort(key=lambda p: grevlex_key(p.leading_term()[0]), reverse=True)
    stats = dict(eng.stats)
    stats["basis_size"] = len(elements)
    log.debug("groebner: %s", stats)
    return GroebnerBasis(n, tuple(elements), GREVLEX, stats)


# -- independent certificate machinery ---------------------------------------

def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    ef, cf = f.leading_term()
    eg, cg = g.leading_term()
    lcm = tuple(max(a, b) for a, b in zip(ef, eg))
    mf = Polynomial.monomial(tuple(l - a for l, a in zip(lcm, ef)), 1 / cf)
    mg = Polynomial.monomial(tuple(l - b for l, b in zip(lcm, eg)), 1 / cg)
    return mf * f - mg * g


def normal_form(f: Polynomial, divisors: Sequence[Polynomial]) -> Polynomial:
    """Remainder of multivariate division (every term reduced)."""
    leads = [(d.leading_term(), d) for d in divisors if d]
    p = f
    rem = Polynomial.zero(f.n)
    while p:
        e, c = p.leading_term()
        for (ed, cd), d in leads:
            if all(a >= b for a, b in zip(e, ed)):
                shift = tuple(a - b for a, b in zip(e, ed))
                p = p - Polynomial.monomial(shift, c / cd) * d
                break
        else:
            lt = Polynomial.monomial(e, c)
            rem = rem + lt
            p = p - lt
    return rem


def is_groebner_basis(elements: Sequence[Polynomial]) -> bool:
    """Buchberger's criterion: every S-polynomial reduces to zero."""
    elements = [g for g in elements if g]
    for i in range(len(elements)):
        for j in range(i + 1, len(elements)):
            if normal_form(s_polynomial(elements[i], elements[j]), elements):
                return False
    return True


def is_reduced(elements: Sequence[Polynomial]) -> bool:
    leads = [g.leading_term() for g in elements]
    if any(c != 1 for _, c in leads):
        return False
    for i, g in enumerate(elements):
        for j, (e, _) in enumerate(leads):
            if i == j:
                continue
            for t in g.terms:
                if all(a >= b for a, b in zip(t, e)):
                    return False
    return True


def certify(basis: GroebnerBasis, generators: Sequence[Polynomial]) -> bool:
    """Full correctness certificate: basis is Groebner, reduced, and every
    input generator lies in the span it describes."""
    els = list(basis.elements)
    if not is_groebner_basis(els) or not is_reduced(els):
        return False
    return all(not normal_form(g, els) for g in generators)


# -- dimension ---------------------------------------------------------------

def _min_hitting_set(sets: list[int], budget: int) -> int:
    """Size of a smallest variable set meeting every bitmask in ``sets``."""
    nodes = [0]
    memo: dict = {}

    def solve(family: frozenset, bound: int) -> int:
        if not family:
            return 0
        if bound <= 0:
            return 1  # caller only needs to know it cannot beat the bound
        cached = memo.get(family)
        if cached is not None:
            return cached
        nodes[0] += 1
        if nodes[0] > budget:
            raise BudgetExceededError(
                f"independent-set search exceeded {budget} nodes",
                {"subsets_explored": nodes[0]})
        pivot = min(family, key=lambda s: (bin(s).count("1"), s))
        best = bound
        bits = pivot
        while bits:
            low = bits & -bits
            bits ^= low
            rest = frozenset(s for s in family if not s & low)
            sub = 1 + solve(rest, best - 1)
            if sub < best:
                best = sub
        if best < bound:
            memo[family] = best
        return best

    family = _minimal_sets(sets)
    return solve(frozenset(family), len(family) + 1)


def _minimal_sets(sets: list[int]) -> list[int]:
    out: list[int] = []
    for s in sorted(set(sets), key=lambda s: bin(s).count("1")):
        if not any(t & s == t for t in out):
            out.append(s)
    return out


def monomial_dimension(n: int, exponents: Sequence[Sequence[int]],
                       max_subsets: int = DEFAULT_MAX_SUBSETS) -> int:
    """Dimension of ``k[x]/(monomials)``: the largest variable set containing
    no monomial's support. -1 if a monomial is 1."""
    supports = []
    for e in exponents:
        mask = 0
        for j, a in enumerate(e):
            if a:
                mask |= 1 << j
        if mask == 0:
            return -1
        supports.append(mask)
    if not supports:
        return n
    return n - _min_hitting_set(supports, max_subsets)


def dimension(a: Ideal, budget: Budget | None = None) -> int:
    budget = budget or Budget()
    if a.is_zero():
        return a.n
    if a.is_monomial():
        return monomial_dimension(a.n, a.exponents(), budget.max_subsets)
    gb = buchberger(a, budget=budget)
    return monomial_dimension(a.n, gb.leading_exponents(), budget.max_subsets)


def codimension(a: Ideal, budget: Budget | None = None) -> int:
    d = dimension(a, budget)
    if d < 0:
        raise UndefinedCodimensionError("the unit ideal has no codimension")
    return a.n - d
