"""Components of the modular group and B3 representation varieties.

Run: python demos/01_component_tables.py
"""

# %%
from loopbraid import enumerate_b3_components, enumerate_gamma_components
from loopbraid.components import Density

# %% Modular group labels of dimension 3 that carry a dense set of irreducibles
for rec in enumerate_gamma_components(3):
    if rec.irreducible_dense is Density.YES:
        print(rec.alpha, "dim", rec.dim, "extends to G:", rec.gamma_extends)

# %% B3: one label per mu6-orbit, in normal form a >= b >= x = max(x,y,z)
for n in range(1, 8):
    recs = enumerate_b3_components(n)
    failing = [str(r.alpha) for r in recs if r.witness_alpha is None]
    print(f"n={n}: {len(recs)} components, not covered by the criterion: {failing or '-'}")

# %% The first failures appear at n = 6: (3,3;3,2,1) and its dual (3,3;3,1,2)
