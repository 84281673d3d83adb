//! Coherence and entanglement measures for two- and three-qubit states.
//!
//! The crate computes the l1-norm of coherence and Wootters' concurrence,
//! checks that coherence bounds concurrence on seeded random ensembles,
//! evaluates partial concurrences, reduced coherences and the three-tangle of
//! the canonical three-qubit family, and labels canonical states with the
//! coherence-difference GHZ/W criterion.
//!
//! Qubit ordering is `|q_A q_B q_C>` with A the most significant bit.

pub mod classifier;
pub mod error;
pub mod experiment;
pub mod linalg;
pub mod measures;
pub mod sampling;
pub mod states;

pub use num_complex::Complex64;

pub use classifier::{
    appendix_a_audit, coherence_difference, coherence_monogamy_check, discriminate,
    observables_expectations, parameter_witness, result1_check, result2_check, AuditReading,
    AuditRecord, Case, CaseLabel, ClassificationReport, ObservableTriple, WorstCase,
};
pub use error::{Error, Result};
pub use experiment::{fig1_scan, theorem_chain_audit, SampleRecord, SampleSummary};
pub use linalg::{
    hermitian_eigen, induced_one_norm, norm_candidates, psd_sqrt, singular_values,
    singular_values_one_sided, ComplexMatrix, HermitianEigenDecomposition, NormCandidates,
    PauliSet,
};
pub use measures::{
    bipartition_concurrence, canonical_measures_analytic, canonical_measures_numeric, ckw_residual,
    concurrence, l1_coherence, measure_report, partial_concurrences_analytic,
    reduced_coherences_analytic, spin_flip, tangle_analytic, tangle_residual, theorem1_chain,
    CanonicalMeasures, MeasureReport, TheoremChainReport,
};
pub use sampling::{EnsembleKind, EnsembleSpec, ThetaMode, GENERATOR_NAME};
pub use states::{
    bell_state, canonical_state, ghz_member, partial_trace, pure_to_density, reduce_qubits,
    w_member, werner_state, CanonicalThreeQubit, DensityMatrix, PureState,
};
