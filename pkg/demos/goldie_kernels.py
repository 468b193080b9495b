# %% [markdown]
# # Goldie kernels
#
# A Goldie kernel solves `kappa(x + y) - kappa(x) = gamma(x) kappa(y)` with the
# auxiliary `gamma(x) = exp(gamma0 x)`. Every continuous solution is
# `kappa0 * h_gamma0(x)`, where `h_g(x) = (exp(g x) - 1)/g` and `h_0(x) = x`.

# %%
import math

from goldie_lab.goldie import GoldieParams, fit_goldie, gfe_residual, h_gamma, kappa_eval

# %% [markdown]
# `h_gamma` passes smoothly through `gamma0 = 0`; near zero a series is used
# so no digits are lost.

# %%
for g in (1e-3, 1e-7, 0.0, -1e-7):
    print(f"h_{g:g}(2) = {h_gamma(g, 2.0):.16g}")

# %% [markdown]
# The residual of the functional equation sits at rounding level.

# %%
p = GoldieParams(2 - 1j, 0.3 + 0.5j)
worst = max(abs(gfe_residual(p, x, y)) for x in range(-5, 6) for y in range(-5, 6))
print(f"max residual on the integer grid: {worst:.2e}")

# %% [markdown]
# Given samples on an equally spaced grid, the constants come back.

# %%
fit = fit_goldie([(x, kappa_eval(p, x)) for x in (0.5, 1.0, 1.5, 2.0)])
print(fit.params, f"max residual {fit.max_residual:.1e}")

# %% [markdown]
# Data outside the family are flagged by a large residual rather than
# silently fitted.

# %%
print(f"log1p samples: residual {fit_goldie([(t, math.log1p(t)) for t in (1, 2, 3, 4)]).max_residual:.3f}")
