"""The n = 6 component (3,3;3,2,1): irreducible witnesses exist, the extension does not.

Run: python demos/03_obstruction_n6.py
"""

# %%
from loopbraid import AlphaTuple, MultiplicityMismatch, assemble_lb3, build_gamma_rep, is_irreducible
from loopbraid.components import b3_extends

alpha = AlphaTuple(3, 3, 3, 2, 1)
print("criterion:", b3_extends(alpha))

# %% Witnesses are irreducible, but T has 2 eigenvalues rho and 1 eigenvalue rho^2,
# so T is not conjugate to T^-1 and no involution Q with Q T Q = T^-1 exists.
for seed in range(5):
    rep = build_gamma_rep(alpha, seed)
    try:
        assemble_lb3(rep, 1.0)
    except MultiplicityMismatch as exc:
        print(f"seed {seed}: irreducible={is_irreducible(rep)}  {exc.certificate}")
