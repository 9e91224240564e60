"""Monomial ideals: the threshold is read off the Newton polyhedron.

Run: python3 demos/01_monomial_thresholds.py
"""

from fractions import Fraction

from lctlab import Ideal, monomial_lct, power_scale, t_power_shift

# (x0^3, x1^2): the diagonal meets the segment from (3,0) to (0,2) at (6/5, 6/5).
a = Ideal.parse("x0^3, x1^2", 2)
value, cert = monomial_lct(a)
print(f"lct({a.to_string()}) = {value}")
print(f"  certificate: mu = {cert.mu}, weights = {[str(w) for w in cert.weights]}, "
      f"verified = {cert.verify()}")

# Powers of the maximal ideal: lct(m^d) = n/d.
for n in (1, 2, 3):
    row = [str(monomial_lct(Ideal.maximal_power(n, d))[0]) for d in range(1, 7)]
    print(f"n={n}: lct(m^d), d=1..6 -> {', '.join(row)}")

# Scaling: lct(a^m) = lct(a)/m.
for m in (1, 2, 3):
    b, predicted = power_scale(a, m)
    print(f"lct(a^{m}) = {monomial_lct(b)[0]}  (predicted {predicted})")

# Adding a new variable to the m-th power pushes the threshold up by 1/m.
for m in (1, 2, 4, 8):
    b, predicted = t_power_shift(a, m)
    assert monomial_lct(b)[0] == predicted
    print(f"lct(a + (t^{m})) = {predicted} = {value} + {Fraction(1, m)}")
