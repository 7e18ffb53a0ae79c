"""
Two urns: periodicity of the classical model
============================================

With r = 2 the number of balls in urn 1 changes parity at every step, so
the chain never approaches the uniform law. Along even (or odd) steps it
converges to the uniform law on one parity class.
"""

from ehrenfest import distribution_after, limit_distribution, tv_curve, tv_distance, uniform

n = 5
for N in (10, 11, 100, 101):
    dist = distribution_after("any-other", N, 2, n)
    parity = "even" if N % 2 == 0 else "odd"
    print(
        f"N={N:3d}  tv to uniform={tv_distance(dist, uniform(2, n)):.4f}  "
        f"tv to {parity} limit={tv_distance(dist, limit_distribution(2, n, parity)):.2e}"
    )

# %%
# The curve exposes both views through the tv_parity_limit column.
for row in tv_curve("any-other", 2, n, range(0, 12)):
    print(row.N, round(row.tv_exact, 4), f"{row.tv_parity_limit:.3e}")
