use cohere_core::measures::{ckw_residual, wootters_roots_hermitian};
use cohere_core::sampling::{sample_canonical, sample_density_at, sample_pure_at};
use cohere_core::states::{reduce_qubits, werner_state};
use cohere_core::{
    canonical_measures_analytic, canonical_measures_numeric, canonical_state, concurrence,
    hermitian_eigen, l1_coherence, pure_to_density, tangle_analytic, tangle_residual,
    theorem1_chain, Complex64, ComplexMatrix, DensityMatrix, ThetaMode,
};

fn local_unitary(seed: u64) -> ComplexMatrix {
    let mut state = seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) | 1;
    let mut next = || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        (state >> 11) as f64 / (1u64 << 53) as f64 - 0.5
    };
    let g = ComplexMatrix::from_fn(2, 2, |_, _| Complex64::new(next(), next()));
    hermitian_eigen(&g.add(&g.adjoint()).unwrap(), 1e-10)
        .unwrap()
        .eigenvectors
}

#[test]
fn concurrence_is_bounded_by_l1_on_sampled_states() {
    for k in 0..5000u64 {
        let pure = pure_to_density(&sample_pure_at(42, 4, k).unwrap());
        let mixed = sample_density_at(42, 4, 4, k).unwrap();
        for rho in [pure, mixed] {
            let c = concurrence(&rho).unwrap();
            assert!((0.0..=1.0 + 1e-12).contains(&c));
            assert!(c <= l1_coherence(&rho) + 1e-9, "sample {k}");
            assert!(theorem1_chain(&rho).unwrap().end_to_end().holds);
        }
    }
}

#[test]
fn concurrence_is_invariant_under_local_unitaries() {
    for k in 0..500u64 {
        let rho = sample_density_at(8, 4, 1 + (k as usize % 4), k).unwrap();
        let u = local_unitary(2 * k + 1).kron(&local_unitary(2 * k + 2));
        let rotated = u
            .matmul(rho.matrix())
            .unwrap()
            .matmul(&u.adjoint())
            .unwrap();
        let rotated = DensityMatrix::new(rotated.hermitian_part()).unwrap();
        let (a, b) = (concurrence(&rho).unwrap(), concurrence(&rotated).unwrap());
        assert!((a - b).abs() <= 1e-10, "sample {k}: {a} vs {b}");
    }
}

#[test]
fn concurrence_of_pure_states_matches_determinant_formula() {
    for k in 0..1000u64 {
        let psi = sample_pure_at(77, 4, k).unwrap();
        let a = psi.amplitudes();
        let expected = 2.0 * (a[0] * a[3] - a[1] * a[2]).norm();
        let c = concurrence(&pure_to_density(&psi)).unwrap();
        assert!(
            (c - expected).abs() <= 1e-12,
            "sample {k}: {c} vs {expected}"
        );
    }
}

#[test]
fn wootters_routes_agree_on_full_rank_states() {
    for k in 0..500u64 {
        let rho = sample_density_at(13, 4, 4, k).unwrap();
        let mut hermitian = wootters_roots_hermitian(&rho).unwrap();
        hermitian.sort_by(|a, b| b.total_cmp(a));
        let c = concurrence(&rho).unwrap();
        let alt = (hermitian[0] - hermitian[1] - hermitian[2] - hermitian[3]).max(0.0);
        assert!((c - alt).abs() <= 1e-7);
    }
}

#[test]
fn werner_family_threshold() {
    for i in 0..=20 {
        let p = i as f64 / 20.0;
        let c = concurrence(&werner_state(p).unwrap()).unwrap();
        let expected = ((3.0 * p - 1.0) / 2.0).max(0.0);
        assert!((c - expected).abs() <= 1e-12, "p={p}: {c}");
    }
}

#[test]
fn canonical_closed_forms_hold_on_real_family() {
    for p in sample_canonical(31, 2000, ThetaMode::Zero) {
        let a = canonical_measures_analytic(&p).unwrap();
        let n = canonical_measures_numeric(&p).unwrap();
        assert!((a.c_ab - n.c_ab).abs() <= 1e-8);
        assert!((a.c_ac - n.c_ac).abs() <= 1e-8);
        assert!((a.coh_ab - n.coh_ab).abs() <= 1e-10);
        assert!((a.coh_ac - n.coh_ac).abs() <= 1e-10);
        assert!((a.coh_a - n.coh_a).abs() <= 1e-10);
        assert!((a.tangle - n.tangle).abs() <= 1e-8);
    }
}

#[test]
fn tangle_and_ckw_hold_for_any_phase() {
    for p in sample_canonical(32, 2000, ThetaMode::Uniform) {
        let psi = canonical_state(&p);
        assert!((tangle_residual(&psi).unwrap() - tangle_analytic(&p)).abs() <= 1e-8);
        assert!(ckw_residual(&psi).unwrap() >= -1e-8);
    }
}

#[test]
fn partial_concurrence_is_phase_independent() {
    // C_AB = 2 l0 l3 and C_AC = 2 l0 l2 do not depend on theta.
    for p in sample_canonical(33, 500, ThetaMode::Uniform) {
        let rho = pure_to_density(&canonical_state(&p));
        let c_ab = concurrence(&reduce_qubits(&rho, &[0, 1]).unwrap()).unwrap();
        let c_ac = concurrence(&reduce_qubits(&rho, &[0, 2]).unwrap()).unwrap();
        assert!((c_ab - 2.0 * p.lambda(0) * p.lambda(3)).abs() <= 1e-8);
        assert!((c_ac - 2.0 * p.lambda(0) * p.lambda(2)).abs() <= 1e-8);
    }
}
