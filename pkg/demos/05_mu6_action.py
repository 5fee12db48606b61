"""Scaling braid images by a sixth root of unity relabels the modular-group component.

Run: python demos/05_mu6_action.py
"""

# %%
import numpy as np

from loopbraid import AlphaTuple, braid_images, build_gamma_rep, mu6_generator_action
from loopbraid.reps import gamma_rep_from_braid

zeta = np.exp(1j * np.pi / 3)
alpha = AlphaTuple(3, 3, 3, 2, 1)
rep = build_gamma_rep(alpha, seed=1)

# %% Scale by zeta^k and compare with k applications of the closed form
predicted = alpha
for k in range(1, 7):
    predicted = mu6_generator_action(predicted)
    b3 = braid_images(rep, zeta ** k)
    got = gamma_rep_from_braid(b3.sigma1, b3.sigma2).alpha
    print(f"zeta^{k}: {got}   predicted {predicted}")
