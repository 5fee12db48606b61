"""Build a seeded modular-group witness, extend it to LB3, and verify the relations.

Run: python demos/02_witness_to_lb3.py
"""

# %%
import numpy as np

from loopbraid import AlphaTuple, assemble_lb3, build_gamma_rep, burnside_dimension, verify_lb3_relations
from loopbraid.extend import RELATION_NAMES

# %% A generic point of the component (3,3;2,2,2); S is diagonal, T = C D C^-1
rep = build_gamma_rep(AlphaTuple(3, 3, 2, 2, 2), seed=7)
print("S^2 = I:", np.allclose(rep.S @ rep.S, np.eye(6)))
print("T^3 = I:", np.allclose(rep.T @ rep.T @ rep.T, np.eye(6)))
print("Burnside dimension:", burnside_dimension([rep.S, rep.T]), "of", 36)

# %% Scale by a unit lambda; s1 = Q swaps the rho and rho^2 eigenspaces of T
lam = np.exp(1j * np.pi / 7)
lb3 = assemble_lb3(rep, lam)
report = verify_lb3_relations(lb3)
for name, r in zip(RELATION_NAMES, report.residuals):
    print(f"{name:<45} {r:.2e}")
print("all relations hold:", report.passed)

# %% The four LB3 generators still generate the full matrix algebra
print("LB3 Burnside dimension:", burnside_dimension([lb3.sigma1, lb3.sigma2, lb3.s1, lb3.s2]))
