import itertools
from fractions import Fraction as F

import pytest

from lctlab.algebra import Ideal, monomials_of_degree
from lctlab.explore import (AccumulationReport, ConstructedSequence, UncertifiedSequenceError,
                            accumulation_scan, canonical_id, enumerate_antichains,
                            enumerate_monomial_ideals, lct_spectrum, t_power_family)
from lctlab.groebner import BudgetExceededError
from lctlab.newton import minimalize_generators


def brute_antichains(n, d):
    mons = [e for k in range(1, d + 1) for e in monomials_of_degree(n, k)]
    out = set()
    for r in range(1, len(mons) + 1):
        for S in itertools.combinations(mons, r):
            if len(minimalize_generators(S)) == r:
                out.add(canonical_id(S))
    return out


@pytest.mark.parametrize("n,d", [(1, 4), (2, 1), (2, 2), (2, 3), (3, 2)])
def test_enumeration_matches_brute_force(n, d):
    found = [canonical_id(g) for g in enumerate_antichains(n, d)]
    assert len(found) == len(set(found))
    assert set(found) == brute_antichains(n, d)


def test_known_counts_and_values():
    assert lct_spectrum(2, 2).values == (F(1, 2), F(1), F(3, 2), F(2))
    assert lct_spectrum(2, 2).count == 12
    assert lct_spectrum(2, 3).count == 40
    assert lct_spectrum(1, 6).values == tuple(F(1, k) for k in range(6, 0, -1))
    assert lct_spectrum(0, 3).values == (F(0),)


def test_spectrum_independent_of_jobs():
    one = lct_spectrum(2, 3, jobs=1, with_ideals=True)
    many = lct_spectrum(2, 3, jobs=3, with_ideals=True)
    assert one == many
    assert list(one[1]) == list(many[1])


def test_guards():
    with pytest.raises(BudgetExceededError):
        list(enumerate_monomial_ideals(4, 2))
    with pytest.raises(BudgetExceededError):
        lct_spectrum(2, 7)
    with pytest.raises(BudgetExceededError):
        list(enumerate_antichains(2, 3, max_ideals=5))


def test_t_power_family_and_scan():
    a = Ideal.parse("x0^2", 1)
    seq = t_power_family(a, 5)
    assert [v for _, v, _ in seq.values] == [F(1, 2) + F(1, m) for m in range(1, 6)]
    rep = accumulation_scan([seq], [lct_spectrum(1, 2)])[0]
    assert rep.confirmed and rep.target == F(1, 2) and rep.direction == "from-above"


def test_scan_rejects_uncertified():
    seq = ConstructedSequence("x", 2, ((1, F(1), True), (2, F(1, 2), False)), F(0))
    with pytest.raises(UncertifiedSequenceError):
        accumulation_scan([seq], [])


def test_scan_reports_missing_limit():
    seq = ConstructedSequence("x", 2, ((1, F(3), True), (2, F(2), True)),
                              F(7, 5))
    rep = accumulation_scan([seq], [lct_spectrum(1, 3)])[0]
    assert not rep.confirmed


def test_report_validates_direction():
    with pytest.raises(ValueError):
        AccumulationReport(F(0), "from-above", (("a", F(1, 2)), ("b", F(1))), "bad")
    with pytest.raises(ValueError):
        AccumulationReport(F(1), "from-below", (("a", F(2)),), "bad")
