//! Fixtures shared by the criterion benches.

use cohere_core::{sampling, CanonicalThreeQubit, DensityMatrix};

/// Deterministic full-rank two-qubit states.
pub fn ginibre_states(n: u64) -> Vec<DensityMatrix> {
    (0..n)
        .map(|k| sampling::sample_density_at(7, 4, 4, k).expect("valid rank"))
        .collect()
}

/// Deterministic canonical parameters with theta = 0.
pub fn canonical_points(n: u64) -> Vec<CanonicalThreeQubit> {
    sampling::sample_canonical(7, n, sampling::ThetaMode::Zero).collect()
}
