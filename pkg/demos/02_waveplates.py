"""
From local unitaries to waveplates
==================================

Any 2x2 unitary splits into phase shifts around one real rotation.  On the
bench a rotation is a half-wave plate followed by a fixed delay, so a plan
becomes a short list of optical elements.
"""

# %%
import math

import numpy as np

from qudit_photonics import encode, factorize_unitary, mub, synthesize_sequence, to_waveplates

# %%
for s in mub.qutrit_mub_family()[1].carrier_states():
    u = encode(s).u
    f = factorize_unitary(u)
    plates = to_waveplates(synthesize_sequence(f))
    print(f"theta = {math.degrees(f.theta):.1f} deg")
    for e in plates.elements:
        print("   ", e)
    print("    residual:", plates.residual(u))

# %%
# The first unitary is a Hadamard gate: a single half-wave plate at 22.5 deg.
# The other two add a delay of +-120 deg on the V component.

# %%
rng = np.random.default_rng(1)
q, r = np.linalg.qr(rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2)))
u = q * (np.diag(r) / abs(np.diag(r)))
print("random unitary residual:", to_waveplates(synthesize_sequence(factorize_unitary(u))).residual(u))
