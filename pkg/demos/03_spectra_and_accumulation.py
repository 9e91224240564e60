"""Finite slices of the set of thresholds and where their values pile up.

Run: python3 demos/03_spectra_and_accumulation.py
"""

from lctlab import Ideal, accumulation_scan, lct_spectrum
from lctlab.explore import t_power_family

for n, d in [(1, 6), (2, 2), (2, 3), (3, 2)]:
    s = lct_spectrum(n, d, jobs=2)
    shown = ", ".join(str(v) for v in s.values[:12])
    more = " ..." if len(s.values) > 12 else ""
    print(f"n={n} d={d}: {s.count} ideals, {len(s.values)} values: {shown}{more}")

# Decreasing families in dimension 2 whose limits are thresholds in dimension 1.
families = [t_power_family(Ideal.parse(f"x0^{k}", 1), 6) for k in (1, 2, 3)]
spectra = [lct_spectrum(1, d) for d in range(1, 7)] + [lct_spectrum(2, d) for d in (1, 2, 3)]
for report in accumulation_scan(families, spectra):
    mark = "confirmed" if report.confirmed else "undecided"
    print(f"[{mark}] {report.verdict}")
