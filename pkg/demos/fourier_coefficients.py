"""
Eigenvalues of the three shuffles
=================================

Each shuffle acts on V(k) by the scalar f_k. The closed forms are checked
against a direct sum over the one-step moves out of the all-zero state.
"""

from ehrenfest import compositions, fourier_coefficient, fourier_coefficient_numeric

r, n = 4, 2
print(f"{'k':>14} {'any-other':>10} {'cyclic-left':>18} {'cyclic-bidir':>12}")
for k in compositions(r, n):
    a = fourier_coefficient("any-other", k).real
    left = fourier_coefficient("cyclic-left", k)
    bidir = fourier_coefficient("cyclic-bidir", k).real
    print(f"{str(k):>14} {a:10.4f} {left.real:8.4f}{left.imag:+8.4f}i {bidir:12.4f}")

# %%
# With r = 4, moving every ball two urns along the circle gives f = -1 for
# the bidirectional shuffle. The any-other formula would give -1/3 here.
k = (0, 0, n, 0)
print(fourier_coefficient("cyclic-bidir", k), fourier_coefficient_numeric("cyclic-bidir", k))
print(fourier_coefficient("any-other", k))
