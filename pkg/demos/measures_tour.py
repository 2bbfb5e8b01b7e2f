"""
Tour of the coherence measures
==============================

Every measure maps a density matrix to a non-negative number that is zero
exactly on states diagonal in the fixed basis.  This script evaluates all
of them on a few showcase states.
"""

import numpy as np

from coherence_lab import (
    DensityMatrix,
    OptimizerConfig,
    c_int_rand,
    c_l1,
    c_rel_ent,
    c_skew,
    c_trivial,
    default_observable,
    from_pure,
    random_density,
    uniform_superposition,
)

# the uniform superposition |Psi_3> = (|0> + |1> + |2>)/sqrt(3) is maximally
# coherent: it tops out every valid measure
psi3 = from_pure(uniform_superposition(3))

# a diagonal (incoherent) state scores zero everywhere
diagonal = DensityMatrix(np.diag([0.5, 0.3, 0.2]))

# something in between
generic = random_density(3, 2, seed=7)

k = default_observable(3)  # K = diag(0, 1, 2) for the skew information
opt = OptimizerConfig(restarts=16, seed=0)

print(f"{'state':<22}{'l1':>10}{'rel_ent':>10}{'int_rand':>10}{'skew':>10}{'trivial':>9}")
for name, rho in [("uniform superposition", psi3), ("diagonal", diagonal), ("generic rank-2", generic)]:
    row = (
        c_l1(rho),
        c_rel_ent(rho),
        c_int_rand(rho, opt),
        c_skew(rho, k),
        c_trivial(rho),
    )
    print(f"{name:<22}" + "".join(f"{v:>10.4f}" for v in row[:4]) + f"{row[4]:>9.0f}")

print()
print("maxima for dimension 3:  l1 -> d-1 = 2,  rel_ent -> log2(3) =", f"{np.log2(3):.4f}")
print("the trivial measure jumps straight to 1 on any coherent state, which is")
print("why the maximal-value criterion rejects it (see criteria_fuzz.py).")
