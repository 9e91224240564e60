"""Non-monomial ideals: certified brackets from jets and degenerations.

Run: python3 demos/02_jets_and_brackets.py
"""

from lctlab import Ideal, estimate_lct, jet_profile, truncation_bracket

cusp = Ideal.parse("x0^2 + x1^3", 2)

# Upper bounds n - dim(jets over 0)/(m+1) decrease toward the threshold 5/6.
prof = jet_profile(cusp, 6)
for r in prof.records:
    print(f"m={r.m}: fiber dim {r.fiber_dim:>2}, bound {r.bound}")

b = estimate_lct(cusp, m_max=5)
print(f"bracket [{b.lower}, {b.upper}]  lower from {b.lower_provenance}, "
      f"upper from {b.upper_provenance}")
if b.candidate is not None:
    print(f"  uncertified candidate from repeated bounds: {b.candidate}")

# A series known only up to degree d: the truncation costs up to n/d in width.
series = Ideal.parse("x0^2 + x1^3 + x0*x1^5", 2)
for d in (4, 6, 8):
    tb = truncation_bracket(series, d)
    print(f"degree {d}: [{tb.lower}, {tb.upper}]")
