"""Finite slices of the set of lcts: monomial ideals of bounded generator
degree, their threshold spectra, and scans of decreasing families.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .algebra import ExtRational, Ideal, grevlex_key, monomials_of_degree
from .groebner import BudgetExceededError
from .limits import t_power_shift
from .newton import monomial_lct

MAX_N = 3
MAX_DEGREE = 6
MAX_IDEALS = 500_000


class UncertifiedSequenceError(ValueError):
    pass


def _check_guards(n: int, d: int, max_n: int, max_degree: int):
    if n < 0 or d < 1:
        raise ValueError("need n >= 0 and d >= 1")
    if n > max_n or d > max_degree:
        raise BudgetExceededError(
            f"(n={n}, d={d}) exceeds desk-scale guard (n <= {max_n}, d <= {max_degree})",
            {"n": n, "d": d, "max_n": max_n, "max_degree": max_degree})


def enumerate_antichains(n: int, d: int, max_ideals: int = MAX_IDEALS) -> Iterator[tuple]:
    """Minimal generating sets of the nonzero monomial ideals inside ``m``
    generated in degree ``<= d``, each once, as tuples of exponent vectors
    sorted by (degree, descending grevlex)."""
    mons = [e for k in range(1, d + 1) for e in monomials_of_degree(n, k)]
    count = 0

    # monomials come in nondecreasing degree, so a later one can never divide
    # an earlier one; only "divisible by a chosen one" needs checking
    def rec(i: int, chosen: list):
        nonlocal count
        if i == len(mons):
            if chosen:
                count += 1
                if count > max_ideals:
                    raise BudgetExceededError(
                        f"more than {max_ideals} ideals enumerated", {"count": count})
                yield tuple(chosen)
            return
        e = mons[i]
        if not any(all(a >= b for a, b in zip(e, c)) for c in chosen):
            chosen.append(e)
            yield from rec(i + 1, chosen)
            chosen.pop()
        yield from rec(i + 1, chosen)

    yield from rec(0, [])


def enumerate_monomial_ideals(n: int, d: int, max_n: int = MAX_N, max_degree: int = MAX_DEGREE,
                              max_ideals: int = MAX_IDEALS) -> Iterator[Ideal]:
    _check_guards(n, d, max_n, max_degree)
    for gens in enumerate_antichains(n, d, max_ideals):
        yield Ideal.monomial(n, gens)


def canonical_id(exponents: Sequence[Sequence[int]]) -> tuple:
    return tuple(sorted((tuple(e) for e in exponents),
                        key=lambda e: (sum(e), [-x for x in grevlex_key(e)[1]])))


@dataclass(frozen=True)
class Spectrum:
    n: int
    d: int
    values: tuple
    count: int

    def __contains__(self, value) -> bool:
        return value in self.values


def _lct_of_antichain(args) -> tuple:
    n, gens = args
    value, cert = monomial_lct(Ideal.monomial(n, gens))
    if cert is not None and not cert.verify():
        raise AssertionError(f"certificate failed for {gens}")
    return canonical_id(gens), value


def lct_spectrum(n: int, d: int, jobs: int = 1, max_n: int = MAX_N,
                 max_degree: int = MAX_DEGREE, max_ideals: int = MAX_IDEALS,
                 with_ideals: bool = False):
    """Sorted distinct oracle lcts over all enumerated monomial ideals.

    Results are merged by canonical ideal id, so the output does not depend
    on ``jobs``. ``n = 0`` gives ``{0}``: the only proper ideal of the ground
    field is 0. With ``with_ideals`` a ``{id: lct}`` map is also returned.
    """
    if n == 0:
        spec = Spectrum(0, d, (Fraction(0),), 1)
        return (spec, {(): Fraction(0)}) if with_ideals else spec
    _check_guards(n, d, max_n, max_degree)
    work = [(n, gens) for gens in enumerate_antichains(n, d, max_ideals)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_lct_of_antichain, work,
                                    chunksize=max(1, len(work) // (4 * jobs))))
    else:
        results = [_lct_of_antichain(w) for w in work]
    table = dict(sorted(results))
    values = tuple(sorted(set(table.values())))
    spec = Spectrum(n, d, values, len(table))
    return (spec, table) if with_ideals else spec


# -- accumulation ---------------------------------------------------------------

@dataclass(frozen=True)
class ConstructedSequence:
    """Values of a constructed family in ambient dimension ``dimension``.

    ``values`` holds ``(parameter, value, certified)`` triples; ``limit`` is
    the claimed limit together with an optional ideal witnessing it in
    dimension ``dimension - 1``.
    """

    tag: str
    dimension: int
    values: tuple
    limit: ExtRational
    limit_witness: Ideal | None = None


@dataclass(frozen=True)
class AccumulationReport:
    target: ExtRational
    direction: str
    witness: tuple
    verdict: str
    confirmed: bool = field(default=False)

    def __post_init__(self):
        vals = [v for _, v in self.witness]
        step = (lambda x, y: y < x) if self.direction == "from-above" else (lambda x, y: y > x)
        if any(not step(x, y) for x, y in zip(vals, vals[1:])):
            raise ValueError("witness values must move strictly toward the target")
        toward = (lambda v: v > self.target) if self.direction == "from-above" \
            else (lambda v: v < self.target)
        if not all(toward(v) for v in vals):
            raise ValueError("witness values must lie on the stated side of the target")


def t_power_family(a: Ideal, m_max: int) -> ConstructedSequence:
    """Oracle-certified family ``lct(a + (t^m))`` for a monomial ideal."""
    c, _ = monomial_lct(a)
    rows = []
    for m in range(1, m_max + 1):
        b, predicted = t_power_shift(a, m, c)
        value, _ = monomial_lct(b)
        if value != predicted:
            raise AssertionError(f"oracle {value} disagrees with predicted {predicted} at m={m}")
        rows.append((m, value, True))
    return ConstructedSequence(f"t-power[{a.to_string()}]", a.n + 1, tuple(rows), c, a)


def _scan_sequence(seq: ConstructedSequence, spectra: Sequence[Spectrum]) -> AccumulationReport:
    for param, value, certified in seq.values:
        if not certified:
            raise UncertifiedSequenceError(
                f"{seq.tag}: value at parameter {param} is not certified")
    vals = [v for _, v, _ in seq.values]
    if all(y < x for x, y in zip(vals, vals[1:])):
        direction = "from-above"
    elif all(y > x for x, y in zip(vals, vals[1:])):
        direction = "from-below"
    else:
        raise UncertifiedSequenceError(f"{seq.tag}: values are not strictly monotone")
    target = seq.limit
    lower_dims = [s for s in spectra if s.n <= seq.dimension - 1]
    hits = [f"spectrum(n={s.n}, d={s.d})" for s in lower_dims if target in s]
    witness_ok = False
    if seq.limit_witness is not None and seq.limit_witness.n <= seq.dimension - 1:
        if seq.limit_witness.is_monomial():
            witness_ok = monomial_lct(seq.limit_witness)[0] == target
    confirmed = bool(hits) or witness_ok
    if confirmed:
        where = ", ".join(hits) if hits else "direct oracle witness"
        verdict = (f"{seq.tag}: strictly decreasing in dimension {seq.dimension} "
                   f"toward {target}, which is an lct in dimension "
                   f"{seq.dimension - 1} ({where})") if direction == "from-above" else (
            f"{seq.tag}: strictly increasing toward {target} ({where})")
    else:
        verdict = f"{seq.tag}: limit {target} not found in any lower-dimensional slice"
    return AccumulationReport(target, direction,
                              tuple((f"{seq.tag}@{p}", v) for p, v, _ in seq.values),
                              verdict, confirmed)


def spectrum_accumulation(spectra: Sequence[Spectrum]) -> list[AccumulationReport]:
    """Desk-scale accumulation behaviour across slices ``d = 1, 2, ...`` of one
    dimension: the smallest positive values (moving toward 0) and the largest
    values below 1 (an approach to 1 from below would contradict ACC)."""
    if not spectra:
        return []
    spectra = sorted(spectra, key=lambda s: s.d)
    n = spectra[0].n
    reports = []

    mins = []
    for s in spectra:
        v = min((x for x in s.values if x > 0), default=None)
        if v is not None and (not mins or v < mins[-1][1]):
            mins.append((f"min spectrum(n={n}, d={s.d})", v))
    if mins:
        reports.append(AccumulationReport(
            Fraction(0), "from-above", tuple(mins),
            f"smallest values in dimension {n} decrease toward 0 = lct(0); "
            f"0 is the only element of T_0", True))

    below = []
    for s in spectra:
        v = max((x for x in s.values if x < 1), default=None)
        if v is not None and (not below or v > below[-1][1]):
            below.append((f"max<1 spectrum(n={n}, d={s.d})", v))
    if below:
        if len(below) == 1:
            verdict = (f"values below 1 in dimension {n} stay at {below[0][1]} across "
                       f"d <= {spectra[-1].d}: no approach to 1 from below in this slice")
        else:
            verdict = (f"largest value below 1 in dimension {n} rises "
                       f"{' -> '.join(str(v) for _, v in below)} across d <= {spectra[-1].d}; "
                       f"finite slices cannot decide accumulation at 1")
        reports.append(AccumulationReport(Fraction(1), "from-below", tuple(below), verdict,
                                          len(below) == 1))
    return reports


def accumulation_scan(sequences: Iterable[ConstructedSequence],
                      spectra: Sequence[Spectrum]) -> list[AccumulationReport]:
    """Check each certified family's limit against lower-dimensional slices,
    then report accumulation behaviour of the supplied spectra per dimension."""
    spectra = list(spectra)
    reports = [_scan_sequence(s, spectra) for s in sequences]
    by_n: dict = {}
    for s in spectra:
        by_n.setdefault(s.n, []).append(s)
    for n in sorted(by_n):
        if n > 0:
            reports.extend(spectrum_accumulation(by_n[n]))
    return reports
