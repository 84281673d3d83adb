//! Coherence, concurrence and tangle.
//!
//! Two routes exist for the canonical three-qubit family: matrix-based
//! evaluation on numerically reduced states, and the closed forms in the
//! state parameters. The test suites check one against the other.

use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{
    clamp_psd, hermitian_eigen, norm_candidates, psd_sqrt, singular_values,
    singular_values_one_sided, ComplexMatrix, NormCandidates, PauliSet, PSD_CLAMP,
};
use crate::states::{
    canonical_state, pure_to_density, reduce_qubits, CanonicalThreeQubit, DensityMatrix, PureState,
    QUBIT_A, QUBIT_B, QUBIT_C,
};

/// Slack for the end-to-end `C <= C_l1` check.
pub const THEOREM_TOL: f64 = 1e-9;
/// Slack for intermediate proof-chain links.
pub const LINK_TOL: f64 = 1e-12;
/// Negative residuals above this are rounding noise and clamp to zero.
pub const RESIDUAL_CLAMP: f64 = 1e-8;

/// l1-norm of coherence: sum of `|rho_ij|` over all ordered pairs `i != j`.
pub fn l1_coherence(rho: &DensityMatrix) -> f64 {
    l1_off_diagonal(rho.matrix())
}

pub(crate) fn l1_off_diagonal(m: &ComplexMatrix) -> f64 {
    let mut total = 0.0;
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            if i != j {
                total += m[(i, j)].norm();
            }
        }
    }
    total
}

fn sigma_yy() -> &'static ComplexMatrix {
    static YY: OnceLock<ComplexMatrix> = OnceLock::new();
    YY.get_or_init(|| {
        let p = PauliSet::new();
        p.sigma_y.kron(&p.sigma_y)
    })
}

fn require_two_qubits(op: &'static str, rho: &DensityMatrix) -> Result<()> {
    if rho.dim() != 4 {
        return Err(Error::WrongDimension {
            op,
            expected: 4,
            found: rho.dim(),
        });
    }
    Ok(())
}

/// `(sigma_y x sigma_y) rho^* (sigma_y x sigma_y)`.
pub fn spin_flip(rho: &DensityMatrix) -> Result<ComplexMatrix> {
    require_two_qubits("spin_flip", rho)?;
    let yy = sigma_yy();
    yy.matmul(&rho.matrix().conj())?.matmul(yy)
}

/// Square roots of the eigenvalues of `rho rho~`, descending.
///
/// With `rho = X X^dagger` (`X = V sqrt(W)` from the spectral decomposition),
/// these are the singular values of the symmetric matrix
/// `tau = X^dagger (sigma_y x sigma_y) conj(X)`. Taking them as singular values
/// avoids square-rooting the near-zero eigenvalues that rank-deficient states
/// produce.
pub fn wootters_roots(rho: &DensityMatrix) -> Result<[f64; 4]> {
    require_two_qubits("concurrence", rho)?;
    let eig = hermitian_eigen(rho.matrix(), PSD_CLAMP)?;
    let mut scales = [0.0; 4];
    for (slot, &w) in scales.iter_mut().zip(&eig.eigenvalues) {
        *slot = clamp_psd(w)?.sqrt();
    }
    let v = &eig.eigenvectors;
    let x = ComplexMatrix::from_fn(4, 4, |i, j| v[(i, j)] * scales[j]);
    let tau = x.adjoint().matmul(sigma_yy())?.matmul(&x.conj())?;
    let sv = singular_values_one_sided(&tau);
    Ok([sv[0], sv[1], sv[2], sv[3]])
}

/// Same spectrum as [`wootters_roots`], taken from the eigenvalues of the
/// Hermitian matrix `sqrt(rho) rho~ sqrt(rho)`. Kept as an independent route;
/// its small roots carry square-root amplified rounding of order 1e-8.
pub fn wootters_roots_hermitian(rho: &DensityMatrix) -> Result<[f64; 4]> {
    require_two_qubits("concurrence", rho)?;
    let root = psd_sqrt(rho.matrix())?;
    let flipped = spin_flip(rho)?;
    let r = root.matmul(&flipped)?.matmul(&root)?.hermitian_part();
    let eig = hermitian_eigen(&r, PSD_CLAMP)?;
    let mut roots = [0.0; 4];
    for (slot, &w) in roots.iter_mut().zip(eig.eigenvalues.iter().rev()) {
        *slot = clamp_psd(w)?.sqrt();
    }
    Ok(roots)
}

/// Wootters concurrence `max(0, r1 - r2 - r3 - r4)`.
pub fn concurrence(rho: &DensityMatrix) -> Result<f64> {
    let r = wootters_roots(rho)?;
    Ok((r[0] - r[1] - r[2] - r[3]).max(0.0))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MeasureReport {
    pub l1_coherence: f64,
    pub concurrence: f64,
    pub purity: f64,
}

pub fn measure_report(rho: &DensityMatrix) -> Result<MeasureReport> {
    Ok(MeasureReport {
        l1_coherence: l1_coherence(rho),
        concurrence: concurrence(rho)?,
        purity: rho.purity(),
    })
}

/// One inequality `lhs <= rhs` in the coherence-bounds-concurrence argument.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LinkVerdict {
    pub name: &'static str,
    pub lhs: f64,
    pub rhs: f64,
    /// `rhs - lhs`; negative means the link fails.
    pub margin: f64,
    pub holds: bool,
}

impl LinkVerdict {
    fn new(name: &'static str, lhs: f64, rhs: f64, tol: f64) -> Self {
        Self {
            name,
            lhs,
            rhs,
            margin: rhs - lhs,
            holds: lhs <= rhs + tol,
        }
    }
}

/// Names of the links in [`TheoremChainReport::links`], in order.
pub const CHAIN_LINKS: [&str; 11] = [
    "concurrence<=sqrt_lambda_max",
    "sqrt_lambda_max<=smax_product",
    "smax<=trace_of_square",
    "smax<=frobenius",
    "frobenius<=trace_norm",
    "trace_of_square<=trace_norm",
    "trace_norm<=l1",
    "induced_one<=l1",
    "induced_one<=2*l1",
    "smax_flipped<=1",
    "concurrence<=l1",
];

/// Every quantity of the chain `C <= sqrt(lambda_1) <= ... <= C_l1`, with each
/// link evaluated under each candidate reading of the norms.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TheoremChainReport {
    pub concurrence: f64,
    pub sqrt_lambda_max: f64,
    pub smax_rho: f64,
    pub smax_flipped: f64,
    pub smax_product: f64,
    pub frobenius_product: f64,
    pub trace_sq_product: f64,
    pub candidate_one_norms: NormCandidates,
    pub l1_coherence: f64,
    pub links: Vec<LinkVerdict>,
}

impl TheoremChainReport {
    pub fn link(&self, name: &str) -> Option<&LinkVerdict> {
        self.links.iter().find(|l| l.name == name)
    }

    /// The end-to-end claim, `C <= C_l1 + 1e-9`.
    pub fn end_to_end(&self) -> &LinkVerdict {
        self.links.last().expect("chain always has links")
    }
}

pub fn theorem1_chain(rho: &DensityMatrix) -> Result<TheoremChainReport> {
    let roots = wootters_roots(rho)?;
    let c = (roots[0] - roots[1] - roots[2] - roots[3]).max(0.0);
    let flipped = spin_flip(rho)?;
    let norms = norm_candidates(rho.matrix())?;
    let smax_rho = norms.max_singular;
    let smax_flipped = singular_values(&flipped)[0];
    let l1 = l1_coherence(rho);
    let smax_product = smax_rho * smax_flipped;

    let links = vec![
        LinkVerdict::new(CHAIN_LINKS[0], c, roots[0], LINK_TOL),
        LinkVerdict::new(CHAIN_LINKS[1], roots[0], smax_product, LINK_TOL),
        LinkVerdict::new(CHAIN_LINKS[2], smax_rho, norms.trace_of_square, LINK_TOL),
        LinkVerdict::new(CHAIN_LINKS[3], smax_rho, norms.frobenius, LINK_TOL),
        LinkVerdict::new(CHAIN_LINKS[4], norms.frobenius, norms.trace_norm, LINK_TOL),
        LinkVerdict::new(
            CHAIN_LINKS[5],
            norms.trace_of_square,
            norms.trace_norm,
            LINK_TOL,
        ),
        LinkVerdict::new(CHAIN_LINKS[6], norms.trace_norm, l1, LINK_TOL),
        LinkVerdict::new(CHAIN_LINKS[7], norms.induced_one, l1, LINK_TOL),
        LinkVerdict::new(CHAIN_LINKS[8], norms.induced_one, 2.0 * l1, LINK_TOL),
        LinkVerdict::new(CHAIN_LINKS[9], smax_flipped, 1.0, LINK_TOL),
        LinkVerdict::new(CHAIN_LINKS[10], c, l1, THEOREM_TOL),
    ];

    Ok(TheoremChainReport {
        concurrence: c,
        sqrt_lambda_max: roots[0],
        smax_rho,
        smax_flipped,
        smax_product,
        frobenius_product: norms.frobenius * smax_flipped,
        trace_sq_product: norms.trace_of_square * smax_flipped,
        candidate_one_norms: norms,
        l1_coherence: l1,
        links,
    })
}

/// Partial concurrences, reduced coherences and tangle of a canonical state.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CanonicalMeasures {
    pub c_ab: f64,
    pub c_ac: f64,
    pub coh_ab: f64,
    pub coh_ac: f64,
    pub coh_a: f64,
    pub tangle: f64,
}

fn require_real_family(op: &'static str, p: &CanonicalThreeQubit) -> Result<()> {
    if p.is_real_family() {
        Ok(())
    } else {
        Err(Error::OutOfFamily {
            op,
            theta: p.theta(),
        })
    }
}

/// `(C_AB, C_AC) = (2 l0 l3, 2 l0 l2)`.
pub fn partial_concurrences_analytic(p: &CanonicalThreeQubit) -> Result<(f64, f64)> {
    require_real_family("partial_concurrences_analytic", p)?;
    let [l0, _, l2, l3, _] = p.lambdas();
    Ok((2.0 * l0 * l3, 2.0 * l0 * l2))
}

/// l1-coherences of `rho_AB`, `rho_AC` and `rho_A` in closed form.
pub fn reduced_coherences_analytic(p: &CanonicalThreeQubit) -> Result<(f64, f64, f64)> {
    require_real_family("reduced_coherences_analytic", p)?;
    let [l0, l1, l2, l3, l4] = p.lambdas();
    Ok((
        2.0 * (l0 * l1 + l0 * l3 + l1 * l3 + l2 * l4),
        2.0 * (l0 * l1 + l0 * l2 + l1 * l2 + l3 * l4),
        2.0 * l0 * l1,
    ))
}

/// `tau = 4 l0^2 l4^2`, valid for every theta.
pub fn tangle_analytic(p: &CanonicalThreeQubit) -> f64 {
    let (l0, l4) = (p.lambda(0), p.lambda(4));
    4.0 * l0 * l0 * l4 * l4
}

pub fn canonical_measures_analytic(p: &CanonicalThreeQubit) -> Result<CanonicalMeasures> {
    let (c_ab, c_ac) = partial_concurrences_analytic(p)?;
    let (coh_ab, coh_ac, coh_a) = reduced_coherences_analytic(p)?;
    Ok(CanonicalMeasures {
        c_ab,
        c_ac,
        coh_ab,
        coh_ac,
        coh_a,
        tangle: tangle_analytic(p),
    })
}

/// Same quantities as [`canonical_measures_analytic`], computed from the
/// numerically reduced density matrices. Works for any theta.
pub fn canonical_measures_numeric(p: &CanonicalThreeQubit) -> Result<CanonicalMeasures> {
    let psi = canonical_state(p);
    let rho = pure_to_density(&psi);
    let ab = reduce_qubits(&rho, &[QUBIT_A, QUBIT_B])?;
    let ac = reduce_qubits(&rho, &[QUBIT_A, QUBIT_C])?;
    let a = reduce_qubits(&rho, &[QUBIT_A])?;
    Ok(CanonicalMeasures {
        c_ab: concurrence(&ab)?,
        c_ac: concurrence(&ac)?,
        coh_ab: l1_coherence(&ab),
        coh_ac: l1_coherence(&ac),
        coh_a: l1_coherence(&a),
        tangle: tangle_residual(&psi)?,
    })
}

fn require_three_qubits(op: &'static str, psi: &PureState) -> Result<()> {
    if psi.dim() != 8 {
        return Err(Error::WrongDimension {
            op,
            expected: 8,
            found: psi.dim(),
        });
    }
    Ok(())
}

/// `4 det(rho_A)`, the squared concurrence across the A | BC cut.
fn squared_bipartition_concurrence(psi: &PureState) -> Result<f64> {
    let a = reduce_qubits(&pure_to_density(psi), &[QUBIT_A])?;
    let m = a.matrix();
    let det = (m[(0, 0)] * m[(1, 1)] - m[(0, 1)] * m[(1, 0)]).re;
    Ok(4.0 * det.max(0.0))
}

/// `C_A(BC) = 2 sqrt(det rho_A)` for a three-qubit pure state.
pub fn bipartition_concurrence(psi: &PureState) -> Result<f64> {
    require_three_qubits("bipartition_concurrence", psi)?;
    Ok(squared_bipartition_concurrence(psi)?.sqrt().min(1.0))
}

/// `C_A(BC)^2 - C_AB^2 - C_AC^2`, the CKW residual.
///
/// Values in `[-1e-8, 0)` clamp to zero; anything lower is reported as a
/// numerical inconsistency.
pub fn tangle_residual(psi: &PureState) -> Result<f64> {
    require_three_qubits("tangle_residual", psi)?;
    let raw = ckw_residual(psi)?;
    if raw < -RESIDUAL_CLAMP {
        return Err(Error::NumericalInconsistency {
            quantity: "three-tangle",
            value: raw,
        });
    }
    Ok(raw.max(0.0))
}

/// Unclamped `C_A(BC)^2 - C_AB^2 - C_AC^2`.
pub fn ckw_residual(psi: &PureState) -> Result<f64> {
    require_three_qubits("ckw_residual", psi)?;
    let rho = pure_to_density(psi);
    let c_ab = concurrence(&reduce_qubits(&rho, &[QUBIT_A, QUBIT_B])?)?;
    let c_ac = concurrence(&reduce_qubits(&rho, &[QUBIT_A, QUBIT_C])?)?;
    Ok(squared_bipartition_concurrence(psi)? - c_ab * c_ab - c_ac * c_ac)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::PauliSet;
    use crate::states::{bell_state, werner_state, PureState};
    use num_complex::Complex64;

    const S2: f64 = std::f64::consts::FRAC_1_SQRT_2;

    fn close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b} (tol {tol})");
    }

    fn ghz() -> CanonicalThreeQubit {
        CanonicalThreeQubit::real([S2, 0.0, 0.0, 0.0, S2]).unwrap()
    }

    fn w() -> CanonicalThreeQubit {
        let t = 1.0 / 3f64.sqrt();
        CanonicalThreeQubit::real([t, 0.0, t, t, 0.0]).unwrap()
    }

    fn mixed_ghz_point() -> CanonicalThreeQubit {
        CanonicalThreeQubit::real([0.6, 0.2, 0.3, 0.5, 0.26f64.sqrt()]).unwrap()
    }

    fn regression_point() -> CanonicalThreeQubit {
        CanonicalThreeQubit::real([0.3, 0.2, 0.25, 0.35, 0.685f64.sqrt()]).unwrap()
    }

    fn diag(d: &[f64]) -> DensityMatrix {
        DensityMatrix::new(ComplexMatrix::from_real_diagonal(d)).unwrap()
    }

    #[test]
    fn l1_examples() {
        close(
            l1_coherence(&DensityMatrix::maximally_mixed(4).unwrap()),
            0.0,
            0.0,
        );
        close(l1_coherence(&bell_state()), 1.0, 1e-15);
        close(l1_coherence(&werner_state(0.9).unwrap()), 0.9, 1e-15);
    }

    #[test]
    fn l1_is_basis_dependent() {
        let p = PauliSet::new();
        let h = p.sigma_x.add(&p.sigma_z).unwrap().scale_real(S2);
        let u = h.kron(&p.identity);
        let rotated = u
            .matmul(bell_state().matrix())
            .unwrap()
            .matmul(&u.adjoint())
            .unwrap();
        let rotated = DensityMatrix::new(rotated).unwrap();
        assert!((l1_coherence(&rotated) - l1_coherence(&bell_state())).abs() > 1e-3);
        close(l1_coherence(&rotated), 3.0, 1e-12);
        // Concurrence is invariant under the local unitary.
        close(concurrence(&rotated).unwrap(), 1.0, 1e-12);
    }

    #[test]
    fn spin_flip_examples() {
        let bell = bell_state();
        assert!(spin_flip(&bell).unwrap().max_abs_diff(bell.matrix()) < 1e-15);

        let mixed = DensityMatrix::maximally_mixed(4).unwrap();
        assert!(spin_flip(&mixed).unwrap().max_abs_diff(mixed.matrix()) < 1e-15);

        let flipped = spin_flip(&diag(&[1.0, 0.0, 0.0, 0.0])).unwrap();
        assert!(
            flipped.max_abs_diff(&ComplexMatrix::from_real_diagonal(&[0.0, 0.0, 0.0, 1.0])) < 1e-15
        );

        assert!(matches!(
            spin_flip(&DensityMatrix::maximally_mixed(2).unwrap()),
            Err(Error::WrongDimension { .. })
        ));
    }

    #[test]
    fn concurrence_examples() {
        close(concurrence(&bell_state()).unwrap(), 1.0, 1e-12);
        let a = [Complex64::new(0.6, 0.0), Complex64::new(0.0, 0.8)];
        let b = [Complex64::new(S2, 0.0), Complex64::new(-S2, 0.0)];
        let product: Vec<Complex64> = a
            .iter()
            .flat_map(|x| b.iter().map(move |y| x * y))
            .collect();
        let psi = PureState::new(product).unwrap();
        close(concurrence(&pure_to_density(&psi)).unwrap(), 0.0, 1e-7);
        // (3p - 1) / 2 at p = 0.9.
        close(
            concurrence(&werner_state(0.9).unwrap()).unwrap(),
            0.85,
            1e-12,
        );
        close(concurrence(&werner_state(0.2).unwrap()).unwrap(), 0.0, 0.0);
    }

    #[test]
    fn chain_bell_equality() {
        let r = theorem1_chain(&bell_state()).unwrap();
        close(r.concurrence, 1.0, 1e-12);
        close(r.l1_coherence, 1.0, 1e-15);
        close(r.end_to_end().margin, 0.0, 1e-12);
        assert!(r.end_to_end().holds);
        assert_eq!(r.links.len(), CHAIN_LINKS.len());
    }

    #[test]
    fn chain_exposes_literal_trace_square_failure() {
        let r = theorem1_chain(&diag(&[0.5, 0.25, 0.25, 0.0])).unwrap();
        let literal = r.link("smax<=trace_of_square").unwrap();
        close(literal.lhs, 0.5, 1e-15);
        close(literal.rhs, 0.375, 1e-15);
        assert!(!literal.holds);
        let frob = r.link("smax<=frobenius").unwrap();
        close(frob.rhs, 0.6123724356957945, 1e-15);
        assert!(frob.holds);
    }

    #[test]
    fn chain_maximally_mixed() {
        let r = theorem1_chain(&DensityMatrix::maximally_mixed(4).unwrap()).unwrap();
        close(r.concurrence, 0.0, 0.0);
        close(r.l1_coherence, 0.0, 0.0);
        close(r.end_to_end().margin, 0.0, 1e-15);
        assert!(r.end_to_end().holds);
        assert!(!r.link("trace_norm<=l1").unwrap().holds);
    }

    #[test]
    fn partial_concurrence_examples() {
        let (ab, ac) = partial_concurrences_analytic(&w()).unwrap();
        close(ab, 2.0 / 3.0, 1e-15);
        close(ac, 2.0 / 3.0, 1e-15);
        assert_eq!(partial_concurrences_analytic(&ghz()).unwrap(), (0.0, 0.0));
        let (ab, ac) = partial_concurrences_analytic(&mixed_ghz_point()).unwrap();
        close(ab, 0.6, 1e-15);
        close(ac, 0.36, 1e-15);

        let twisted = CanonicalThreeQubit::new([0.6, 0.2, 0.3, 0.5, 0.26f64.sqrt()], 0.5).unwrap();
        assert!(matches!(
            partial_concurrences_analytic(&twisted),
            Err(Error::OutOfFamily { .. })
        ));
    }

    #[test]
    fn reduced_coherence_examples() {
        assert_eq!(
            reduced_coherences_analytic(&ghz()).unwrap(),
            (0.0, 0.0, 0.0)
        );
        let (ab, ac, a) = reduced_coherences_analytic(&mixed_ghz_point()).unwrap();
        close(ab, 1.345941, 1e-6);
        close(ac, 1.229902, 1e-6);
        close(a, 0.24, 1e-12);
        let (ab, ac, a) = reduced_coherences_analytic(&regression_point()).unwrap();
        close(ab, 0.883824, 1e-6);
        close(ac, 0.949353, 1e-6);
        close(a, 0.12, 1e-12);
    }

    #[test]
    fn bipartition_examples() {
        let product =
            canonical_state(&CanonicalThreeQubit::real([1.0, 0.0, 0.0, 0.0, 0.0]).unwrap());
        close(bipartition_concurrence(&product).unwrap(), 0.0, 0.0);
        close(
            bipartition_concurrence(&canonical_state(&ghz())).unwrap(),
            1.0,
            1e-12,
        );
        close(
            bipartition_concurrence(&canonical_state(&w())).unwrap(),
            2.0 * 2f64.sqrt() / 3.0,
            1e-12,
        );
        assert!(bipartition_concurrence(&PureState::basis(4, 0).unwrap()).is_err());
    }

    #[test]
    fn tangle_examples() {
        close(
            tangle_residual(&canonical_state(&ghz())).unwrap(),
            1.0,
            1e-12,
        );
        close(tangle_residual(&canonical_state(&w())).unwrap(), 0.0, 1e-8);
        close(
            tangle_residual(&canonical_state(&mixed_ghz_point())).unwrap(),
            0.3744,
            1e-8,
        );

        close(tangle_analytic(&ghz()), 1.0, 1e-15);
        close(tangle_analytic(&w()), 0.0, 0.0);
        close(tangle_analytic(&mixed_ghz_point()), 0.3744, 1e-15);
    }

    #[test]
    fn numeric_and_analytic_routes_agree() {
        for p in [ghz(), w(), mixed_ghz_point(), regression_point()] {
            let a = canonical_measures_analytic(&p).unwrap();
            let n = canonical_measures_numeric(&p).unwrap();
            close(a.c_ab, n.c_ab, 1e-8);
            close(a.c_ac, n.c_ac, 1e-8);
            close(a.coh_ab, n.coh_ab, 1e-12);
            close(a.coh_ac, n.coh_ac, 1e-12);
            close(a.coh_a, n.coh_a, 1e-12);
            close(a.tangle, n.tangle, 1e-8);
        }
    }

    #[test]
    fn singular_value_and_hermitian_routes_agree() {
        let states = (0..200u64)
            .map(|k| crate::sampling::sample_density_at(11, 4, 1 + (k as usize % 4), k).unwrap());
        for rho in states.chain([werner_state(0.9).unwrap(), bell_state()]) {
            let a = wootters_roots(&rho).unwrap();
            let b = wootters_roots_hermitian(&rho).unwrap();
            for (x, y) in a.iter().zip(&b) {
                close(*x, *y, 1e-7);
            }
        }
    }
}
