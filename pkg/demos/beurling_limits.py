# %% [markdown]
# # Beurling kernels and circle groups
#
# `K(t) = lim (F(x + t phi(x)) - F(x))` along `x = 2**10 .. 2**40`, with
# `eta(t) = lim phi(x + t phi(x))/phi(x)`.

# %%
import math

from goldie_lab.beurling import (CircleRho, beurling_kernel, circle_inverse, circle_op, estimate_eta, eta_rho,
                                 fit_kernel, is_self_neglecting, named_phi)

# %% [markdown]
# The circle group `a o b = a + b + rho a b` is isomorphic to multiplication
# through `eta_rho(t) = 1 + rho t`.

# %%
g = CircleRho(1j)
a, b = 0.5 + 0.2j, -0.3 + 1j
print("a o b =", circle_op(g, a, b), " inverse of a:", circle_inverse(g, a))
print("isomorphism gap:", abs(eta_rho(1j, a) * eta_rho(1j, b) - eta_rho(1j, circle_op(g, a, b))))

# %% [markdown]
# Limits with their error bounds. A self-neglecting `phi` has `eta = 1`.

# %%
for name in ("sqrt", "x-over-log", "identity"):
    e = estimate_eta(named_phi(name), 1.0)
    print(f"eta for {name:10s}: {e.value.real:.10f} (+- {e.error_bound:.1e}, {e.method})")
print("sqrt self-neglecting:", is_self_neglecting(named_phi("sqrt"), [0.5, 1, 2]))

# %%
est = beurling_kernel(math.log, lambda x: x, 1.0)
print("K_log(1) =", est.value.real, " log 2 =", math.log(2))
lin = [beurling_kernel(lambda x: 3 * x, lambda x: 1.0, t) for t in (1, 2, 3)]
print("fitted linear kernel:", fit_kernel(lin).params)
