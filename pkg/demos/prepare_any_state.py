"""
Maximal coherence as a currency
===============================

From the uniform superposition (or any pure state with uniform amplitude
moduli) every same-dimension state can be prepared deterministically using
incoherent operations only.  This script builds the preparation channels
and verifies them by direct application.
"""

import numpy as np

from coherence_lab import (
    apply_channel,
    apply_selective,
    fidelity_pure,
    from_pure,
    is_incoherent_channel,
    random_density,
    random_pure,
    transform_mcs_to,
    transform_mcs_to_mixed,
    uniform_superposition,
)

dim = 4
source = from_pure(uniform_superposition(dim))

# --- pure target -----------------------------------------------------------
target = random_pure(dim, seed=42)
channel = transform_mcs_to(target)

print(f"pure target, d={dim}")
print("  Kraus operators:", channel.n_kraus)
print("  incoherent channel:", is_incoherent_channel(channel))
print("  fidelity of output:", fidelity_pure(apply_channel(channel, source), target))

# every measurement branch lands on the target individually: the conversion
# works even when the outcome is observed
branches = apply_selective(channel, source)
print("  branch probabilities:", np.round([p for p, _ in branches], 6))
print("  branch fidelities:   ", np.round([fidelity_pure(b, target) for _, b in branches], 12))

# --- mixed target ----------------------------------------------------------
mixed = random_density(dim, 3, seed=43)
mixed_channel = transform_mcs_to_mixed(mixed)
out = apply_channel(mixed_channel, source)

print(f"\nmixed rank-3 target, d={dim}")
print("  Kraus operators:", mixed_channel.n_kraus)
print("  incoherent channel:", is_incoherent_channel(mixed_channel))
print("  output error (max entry):", np.max(np.abs(out.matrix - mixed.matrix)))

# --- the reverse direction is impossible -----------------------------------
# no incoherent channel can create maximal coherence from a generic state;
# see criteria_fuzz.py (LEMMA2) for the randomized verification.
print("\nreverse direction: see the LEMMA2 fuzz in criteria_fuzz.py")
