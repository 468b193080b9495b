# %% [markdown]
# # Damped oscillatory integrals
#
# `I(k, delta) = int_0^inf x**(-k) exp(-delta x) (cos x - i sin x) dx` has the closed form
# `Gamma(1 - k) (delta + i)**(k - 1)`. As `delta -> 0` the cosine part over the
# sine part tends to `tan(pi k/2)`, checked three ways.

# %%
import time

from goldie_lab.quadrature import abel_integral_closed, abel_integral_quad, abel_ratio, gamma_real

# %%
print("Gamma(0.75) =", gamma_real(0.75))
for delta in (1.0, 0.1):
    q = abel_integral_quad(0.5, delta)
    print(f"delta={delta}: closed {abel_integral_closed(0.5, delta):.12f}  quad {q.value:.12f}  "
          f"({q.evaluations} evaluations)")

# %%
for k in (0.25, 0.5, 0.75):
    for method in ("closed", "quad", "extrapolated"):
        start = time.perf_counter()
        r = abel_ratio(k, method)
        print(f"k={k} {method:12s} ratio={r.ratio:.12f} rel_err={r.rel_err:.1e} "
              f"{time.perf_counter() - start:.2f}s")
