"""
Total variation curve for three urns and twenty balls
=====================================================

Exact distance to uniform after N any-other shuffles, next to the spectral
upper bound. Everything is computed on the 231 configuration types instead
of the 3**20 configurations.
"""

from ehrenfest import cutoff_threshold, tv_curve

rows = tv_curve("any-other", 3, 20, range(301))
for row in rows[::25]:
    print(f"N={row.N:4d}  tv={row.tv_exact:.3e}  bound={row.tv_bound:.3e}")

# %%
# The cutoff threshold with c = 0 sits near N = 146.5.
cut = cutoff_threshold(3, 20, 0.0)
print(cut.steps, cut.whole_steps, rows[cut.whole_steps].tv_squared, "<=", cut.guarantee)

# %%
# Plot, if matplotlib is around.
try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    fig, ax = plt.subplots(figsize=(7, 4))
    ax.plot([r.N for r in rows], [r.tv_exact for r in rows], label="exact")
    ax.plot([r.N for r in rows], [min(r.tv_bound, 1.0) for r in rows], "--", label="upper bound (clipped at 1)")
    ax.axvline(cut.steps, color="grey", lw=0.8)
    ax.set_xlabel("N")
    ax.set_ylabel("total variation to uniform")
    ax.legend()
    fig.savefig("mixing_curve_r3_n20.png", dpi=120, bbox_inches="tight")
    print("wrote mixing_curve_r3_n20.png")
