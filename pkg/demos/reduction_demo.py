# %% [markdown]
# # Reducing a stable law to a kernel pair
#
# Each stable law maps to a Goldie kernel `K` and a power `G(s) = s**gamma`.
# The map is invertible once `f1` is supplied.

# %%
from goldie_lab.reduction import Case, ReducedSystem, dagger_residual, h_tilde_gfe_check, reconstruct, reduce
from goldie_lab.stable import PitmanParams, from_pitman

# %%
p = from_pitman(PitmanParams(1.0, 0.0, 1.0, 0.5))
r = reduce(p)
print(r)
print("K(4) =", r.K(4.0), " G(4) =", r.G(4.0), " H~ constant =", r.h_tilde_const)

# %% [markdown]
# Round trip and the two residual checks.

# %%
print("round trip:", reconstruct(r, p.f1) == p)
print("dagger residual:", abs(dagger_residual(r, p.f1, 2.0, 3.0)))
print("H~ equation residual:", abs(h_tilde_gfe_check(r, 2.0, 3.0)))

# %% [markdown]
# In the degenerate case `K` vanishes and there is no unique law to return.

# %%
try:
    reconstruct(ReducedSystem(Case.CASE1, 0, 0.5), -1)
except Exception as exc:
    print(type(exc).__name__, exc)
