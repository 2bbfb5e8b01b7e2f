"""Toolkit for the resource theory of quantum coherence in a fixed basis.

Provides coherence measures (l1-norm, relative entropy, intrinsic
randomness, skew information, and a deliberately pathological 0/1
measure), incoherent CPTP channels with their single-entry-per-column
canonical form, the maximally coherent states and the channels that
prepare arbitrary states from them, plus a randomized harness that
fuzzes the standard quantifier criteria and hunts counterexamples.
"""

from .errors import (
    BadDimError,
    BadParamsError,
    BadRankError,
    CoherenceLabError,
    DimMismatchError,
    IncompleteChannelError,
    NonHermitianError,
    NonSquareError,
    NotIncoherentError,
    NotNormalizedError,
    NotPSDError,
    OptimizerFailedError,
)
from .numerics import HermitianEigen, hermitian_eigen, is_unitary, psd_sqrt
from .states import (
    DensityMatrix,
    PureState,
    dephase,
    fidelity_pure,
    from_pure,
    is_incoherent,
    random_density,
    random_pure,
    state_from_dict,
)
from .channels import (
    IncoherentKrausForm,
    IncoherentUnitary,
    KrausChannel,
    apply_channel,
    apply_selective,
    canonical_form,
    channel_from_dict,
    compose,
    is_cpo,
    is_incoherent_channel,
    random_incoherent_channel,
    random_incoherent_unitary,
    realize_unitary,
)
from .measures import (
    DiagonalObservable,
    Ensemble,
    Measure,
    OptimizerConfig,
    c_int_rand,
    c_l1,
    c_rel_ent,
    c_skew,
    c_skew_pure,
    c_trivial,
    convex_roof_ensemble,
    default_observable,
    measure_by_name,
)
from .mcs import (
    McsDescriptor,
    is_mcs,
    mcs_deviation,
    mcs_sample,
    transform_mcs_to,
    transform_mcs_to_mixed,
    uniform_superposition,
)
from .harness import (
    CriterionReport,
    TrialConfig,
    ViolationWitness,
    check_c1,
    check_c2,
    check_c3,
    check_c4,
    check_c5,
    check_lemma1,
    check_lemma2,
    check_theorem3,
    reevaluate_witness,
    report_from_dict,
    skew_violation_witness,
)

__version__ = "0.1.0"

__all__ = [
    "BadDimError",
    "BadParamsError",
    "BadRankError",
    "CoherenceLabError",
    "CriterionReport",
    "DensityMatrix",
    "DiagonalObservable",
    "DimMismatchError",
    "Ensemble",
    "HermitianEigen",
    "IncoherentKrausForm",
    "IncoherentUnitary",
    "IncompleteChannelError",
    "KrausChannel",
    "McsDescriptor",
    "Measure",
    "NonHermitianError",
    "NonSquareError",
    "NotIncoherentError",
    "NotNormalizedError",
    "NotPSDError",
    "OptimizerConfig",
    "OptimizerFailedError",
    "PureState",
    "TrialConfig",
    "ViolationWitness",
    "apply_channel",
    "apply_selective",
    "c_int_rand",
    "c_l1",
    "c_rel_ent",
    "c_skew",
    "c_skew_pure",
    "c_trivial",
    "canonical_form",
    "channel_from_dict",
    "check_c1",
    "check_c2",
    "check_c3",
    "check_c4",
    "check_c5",
    "check_lemma1",
    "check_lemma2",
    "check_theorem3",
    "compose",
    "convex_roof_ensemble",
    "default_observable",
    "dephase",
    "fidelity_pure",
    "from_pure",
    "hermitian_eigen",
    "is_cpo",
    "is_incoherent",
    "is_incoherent_channel",
    "is_mcs",
    "is_unitary",
    "mcs_deviation",
    "mcs_sample",
    "measure_by_name",
    "psd_sqrt",
    "random_density",
    "random_incoherent_channel",
    "random_incoherent_unitary",
    "random_pure",
    "realize_unitary",
    "reevaluate_witness",
    "report_from_dict",
    "skew_violation_witness",
    "state_from_dict",
    "transform_mcs_to",
    "transform_mcs_to_mixed",
    "uniform_superposition",
]
