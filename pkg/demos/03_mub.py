"""
Mutually unbiased bases
=======================

Four bases for a qutrit and five for a ququad.  Any two states from
different bases overlap with probability ``1/d``.  In the ququad family
three bases are products of single-photon Pauli eigenstates and two are
fully entangled.
"""

# %%
import numpy as np

from qudit_photonics import bell_check, mub, verify_mub

# %%
for family in (mub.qutrit_mub_family(), mub.ququad_mub_family()):
    report = verify_mub(family)
    print(f"d={report.dimension}: {len(family)} bases, overlap deviation {report.overlap_deviation:.1e},"
          f" passed={report.passed}")

# %%
bases = mub.ququad_mub_family()
for b in bases:
    print(b.label, "maximally entangled:", bell_check(b))

# %%
# Overlap probabilities between bases I and IV.
print(np.round(abs(bases[0].states.conj() @ bases[3].states.T) ** 2, 3))
