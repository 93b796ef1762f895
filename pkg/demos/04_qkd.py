"""
Key distribution with two Bell-type bases
=========================================

The sender encodes in one of the two entangled ququad bases, the receiver
measures in a random one, and rounds with matching bases form the key.  An
intercept-resend attacker guesses the basis and randomizes the outcome whenever
that guess is wrong.
"""

# %%
from qudit_photonics import simulate_two_basis_qkd

# %%
print(simulate_two_basis_qkd(100_000, eve=False, rng_seed=7).record())
print(simulate_two_basis_qkd(100_000, eve=True, rng_seed=7).record())

# %%
# With four outcomes a wrong guess randomizes the result, so the sifted
# error rate sits near 1/2 * 3/4 = 3/8.
for n in (1_000, 10_000, 100_000):
    print(n, simulate_two_basis_qkd(n, eve=True, rng_seed=1).qber)
