"""
Checking the spectral formulas against brute force
==================================================

Exact rational powering of the transition kernel over all r**n
configurations, and a seeded Monte Carlo run.
"""

from ehrenfest import build_kernel, power_distribution, simulate, verify

report = verify("cyclic-left", 3, 3, 15)
print(report["status"], report["max_error"])

# %%
# The exact law is a vector of Fractions sharing one denominator.
dist = power_distribution(build_kernel("any-other", 3, 1), 2)
print([dist.probability((j,)) for j in range(3)])

# %%
# Monte Carlo with a fixed seed is reproducible bit for bit.
exact = power_distribution(build_kernel("any-other", 3, 3), 10).probabilities()
for trials in (1_000, 100_000):
    emp = simulate("any-other", 3, 3, 10, trials, seed=7)
    print(trials, emp.algorithm, round(emp.tv_to(exact), 4))
