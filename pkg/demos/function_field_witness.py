"""
A relative quadratic map over Q(T)
===================================

q(F, G) = F'G - FG' scales by squares and is Q-bilinear after polarizing,
but T does not pass through the polarization.
"""

from qflab.exact import RatFuncField, Rationals
from qflab.quadmaps import axiom_check, constant_scalars, derivation_form, polarize

K = RatFuncField(Rationals(), ["T"])
T, one, zero = K.gen("T"), K.one(), K.zero()
q = derivation_form("T", K, constant_scalars(K, [1, 2, -1]))

print("q(T^2, 1/T) =", q((T * T, one / T)))
print("pol((T,0),(0,1)) =", polarize(q, (T, zero), (zero, one)))
print("T pol((1,0),(0,1)) =", T * polarize(q, (one, zero), (zero, one)))

# the checker finds the same witness on its own
samples = [(one, zero), (zero, one), (T, zero), (zero, T)]
rep = axiom_check(q, "S-bilinearity", "sampled", samples=samples, scalars=[T])
print(f"S-bilinearity: {rep.verdict} at {rep.witness.text}")
rep = axiom_check(q, "R-bilinearity", "sampled", samples=samples)
print(f"R-bilinearity: {rep.verdict}")
