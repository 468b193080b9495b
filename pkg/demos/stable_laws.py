# %% [markdown]
# # Stable laws and the characteristic functional equation
#
# A stable characteristic function `phi = exp(f)` obeys
# `n f(t) = f(a_n t) + i b_n t` with `a_n = n**k`, `k = 1/alpha`.

# %%
from goldie_lab.stable import (PitmanParams, chfe_residual, classify_triviality, from_pitman, identify_exponent,
                               log_cf, modulus_scale_invariance, norming)

# %% [markdown]
# Start from the familiar `(c, y, lambda, alpha)` parameters and convert to the
# canonical `(f1, kappa, gamma)` with `gamma = alpha - 1`.

# %%
p = from_pitman(PitmanParams(c=1.0, y=0.5, lam=1.0, alpha=1.7))
print(p)
print("f(1) =", log_cf(p, 1.0), " f(2) =", log_cf(p, 2.0))

# %% [markdown]
# The norming constants and the equation residual, evaluated with 50 digits.

# %%
for n in (2, 10, 50):
    c = norming(p, n)
    r = max(abs(chfe_residual(p, n, t)) for t in (0.1, 1.0, 10.0))
    print(f"n={n:2d}  a_n={c.a_n:.6g}  b_n={c.b_n:.6g}  residual={r:.1e}")

# %% [markdown]
# At `alpha = 1` the location term becomes `lam n log n`; nearby exponents
# approach it continuously.

# %%
for g in (1e-4, 1e-8, 0.0):
    q = from_pitman(PitmanParams(1.0, 0.0, 2.0, 1.0 + g))
    print(f"gamma={g:g}: b_10 = {norming(q, 10).b_n.real:.12f}")

# %% [markdown]
# From a sampled norming sequence the exponent is recovered, and the
# triviality classes separate.

# %%
print("k =", identify_exponent([n ** 0.6 for n in range(1, 31)]))
print(classify_triviality(p), classify_triviality(from_pitman(PitmanParams(1e-30, 0, 0, 1.2))))
print("|phi| invariant under t -> 1.1 t:", modulus_scale_invariance(p, 1.1, [0.1 * j for j in range(1, 50)]))
