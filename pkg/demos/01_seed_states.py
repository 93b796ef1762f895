"""
Encoding qutrit states in a polarization carrier
================================================

A qutrit written in the symmetric two-photon basis ``|HH>, |VV>, |psi+>`` is
a two-qubit state.  Its Schmidt form fixes one seed amplitude ``x`` and two
local unitaries, so every state comes from ``x|HH> + sqrt(1-x^2)|VV>`` after
one polarization transformation per photon.
"""

# %%
import numpy as np

from qudit_photonics import encode, fidelity, mub, qutrit_embed, xi_closed_form
from qudit_photonics.mub import qutrit_phases

# %%
# The v basis: equal weights with cube-root-of-unity phases.
family = mub.qutrit_mub_family()
for b in family:
    xs = [encode(s).x for s in b.carrier_states()]
    print(f"{b.label:>4}: x = " + ", ".join(f"{x:.6f}" for x in xs))

# %%
# Every v state shares the seed (sqrt2 + 1)/sqrt6; the two extra bases share
# sqrt((3 + sqrt2)/6).  Only the local unitaries change.
print((np.sqrt(2) + 1) / np.sqrt(6), np.sqrt((3 + np.sqrt(2)) / 6))

# %%
plan = encode(qutrit_embed(family[1].states[1]))
print(np.round(plan.u, 6))
print("fidelity:", fidelity(plan.state(), qutrit_embed(family[1].states[1])))

# %%
# Equal-weight qutrits also have a closed-form decomposition in their two
# relative phases.  It agrees with the numerical one up to local phases.
u, d, w = xi_closed_form(*qutrit_phases(1, 2))
print("closed-form singular values:", d)
