"""
Exotic cross forms over F2[T]/T^4
==================================

Every S-linear functional f on W gives a cross form that is quadratic over
F2 with S-scaling, but whose polarization is not S-bilinear unless f = 0.
"""

from qflab.lab import q_phi
from qflab.quadmaps import check_all, exotic_form, hom_s_elements
from qflab.scenarios import truncated_char2

q = q_phi(truncated_char2().realization)
fs = hom_s_elements(q)
print(f"dim W = {q.w_dim}, |Hom_S(W, S)| = {len(fs)}")

# zero first, then the nonzero functionals
for i, f in enumerate(fs[:4]):
    reps = check_all(exotic_form(q, f))
    verdicts = ", ".join(f"{ax} {r.verdict}" for ax, r in reps.items())
    print(f"f{i}: {verdicts}")
    w = reps["S-bilinearity"].witness
    if w is not None:
        print(f"    witness {w.text}: {w.lhs} != {w.rhs}")
