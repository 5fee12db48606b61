"""Dimension vectors of G = C2 * S3 representations and their restriction to the modular group.

Run: python demos/04_quiver_bookkeeping.py
"""

# %%
from loopbraid.components import alpha_tuples, gamma_extends
from loopbraid.quiver import (
    enumerate_g_simple_components,
    g_component_of,
    gamma_condition_via_g,
    minimal_theta_stable_vectors,
    restrict_to_gamma,
)

# %% The five minimal theta-stable vectors (-1,-1;1,1,2 weighting)
for v in minimal_theta_stable_vectors():
    print(v)

# %% Simple local-quiver vectors at n = 6, their G-component and restriction
for g in enumerate_g_simple_components(6):
    print(tuple(g), g_component_of(g), "->", restrict_to_gamma(g), gamma_condition_via_g(g))

# %% Substituting u = r+s, v = p+q, w = t recovers the labels (v+w, u+w; u+v, w, w)
for n in range(1, 11):
    lhs = {restrict_to_gamma(g) for g in enumerate_g_simple_components(n) if gamma_condition_via_g(g)}
    rhs = {a for a in alpha_tuples(n) if gamma_extends(a)}
    print(n, lhs == rhs, sorted(map(str, lhs)))
