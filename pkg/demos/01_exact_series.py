"""Exact q-series arithmetic: Puiseux series, eta, and serialization.

The workhorse of the whole project is a sparse truncated series in
fractional powers of q with exact rational (or cyclotomic) coefficients.
Every identity claim in the other demos reduces to "this series has no
nonzero coefficient below its truncation".
"""

from fractions import Fraction

from thetalab.series import PuiseuxSeries, eta_product_oracle, eta_series

# A geometric series, by inversion
g = PuiseuxSeries(1, {0: 1, 1: -1}, 12)
print("1/(1-q)      =", g.inverse())

# Fractional exponents: ramification indices combine by lcm
a = PuiseuxSeries.monomial(Fraction(1), 1, 4, 10)   # q^(1/4)
b = PuiseuxSeries.monomial(Fraction(1), 1, 8, 10)   # q^(1/8)
print("q^1/4 * q^1/8 =", a * b)

# Truncation is tracked, never extended: the product of two series is
# only known as deep as its inputs warrant
x = PuiseuxSeries(1, {0: 1, 1: 2}, 5)
y = PuiseuxSeries(1, {-2: 1}, 50)
print("precision of (1+2q)*q^-2 :", (x * y).known_order(), "(limited by the first factor)")

# The Dedekind eta expansion comes from the pentagonal-number sum; an
# independent brute-force partial product confirms every coefficient.
order = 40
eta = eta_series(order)
print("\neta * q^(-1/24) =", (eta * PuiseuxSeries(24, {-1: 1}, 24 * order + 1)).normalize())
oracle = eta_product_oracle(order)
diff = eta * PuiseuxSeries(24, {-1: 1}, 24 * order + 1) - oracle
print("matches the product oracle:", diff.is_zero())

# Series round-trip through the documented JSON schema
s = PuiseuxSeries(4, {1: Fraction(3, 2), 6: Fraction(-1)}, 20)
print("\nJSON:", s.to_json())
print("round-trip ok:", PuiseuxSeries.from_json(s.to_json()) == s)
