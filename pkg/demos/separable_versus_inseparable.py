"""
When is relative quadratic the same as quadratic?
==================================================

Build Q = (S⊗S)⊗_Δ S for a few finite algebras and watch the kernel W of
the augmentation Q -> S.  W = 0 means every S/R-quadratic map is already
S-quadratic.
"""

from qflab.census import enumerate_quads
from qflab.kaehler import kaehler_module
from qflab.lab import q_phi
from qflab.scenarios import dual_numbers_char0, f4, f9, truncated_char2

# separable field extensions: W vanishes, and so does Omega
for label, carrier in [("F4/F2", f4), ("F9/F3", f9)]:
    A = carrier()
    q = q_phi(A.realization)
    print(f"{label}: dim S = {A.realization.dim}, dim Q = {q.dim}, dim W = {q.w_dim}, "
          f"dim Omega = {kaehler_module(A).dim}")

# a nilpotent extension in characteristic 0: W and Omega agree
A = dual_numbers_char0()
q = q_phi(A.realization)
print(f"Q[T]/T^3: dim W = {q.w_dim}, dim Omega = {kaehler_module(A).dim}")

# characteristic 2: squares generate a proper subalgebra and W is large
A = truncated_char2()
q = q_phi(A.realization)
print(f"F2[T]/T^4: dim W = {q.w_dim}")

# the census on S^2 -> S counts both kinds of maps
for label, carrier in [("F4/F2", f4), ("F2[T]/T^4", truncated_char2)]:
    c = enumerate_quads(carrier().realization, 2)
    print(f"{label}: {c.count_relative} relative, {c.count_absolute} absolute, ratio {c.ratio}")
