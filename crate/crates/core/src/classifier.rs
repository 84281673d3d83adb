//! GHZ/W discrimination by the sign of the reduced-coherence difference,
//! the two GHZ-class characterization results, the Pauli-observable witness,
//! and the norm-bound audit.

use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{induced_one_norm, ComplexMatrix, PauliSet};
use crate::measures::{
    canonical_measures_analytic, concurrence, l1_coherence, reduced_coherences_analytic,
    CanonicalMeasures,
};
use crate::sampling::{map_indexed, EnsembleSpec};
use crate::states::{canonical_state, CanonicalThreeQubit, DensityMatrix};

/// Factors within this distance of zero are treated as exactly zero.
pub const BOUNDARY_TOL: f64 = 1e-12;
/// Agreement tolerance for closed-form cross-checks.
pub const IDENTITY_TOL: f64 = 1e-10;

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

/// `lambda3 - lambda2` and `lambda0 + lambda1 - lambda4`.
pub fn difference_factors(p: &CanonicalThreeQubit) -> (f64, f64) {
    let [l0, l1, l2, l3, l4] = p.lambdas();
    (l3 - l2, l0 + l1 - l4)
}

/// `C_l1(rho_AB) - C_l1(rho_AC)` and its two factors.
pub fn coherence_difference(p: &CanonicalThreeQubit) -> Result<(f64, (f64, f64))> {
    require_real_family("coherence_difference", p)?;
    let (coh_ab, coh_ac, _) = reduced_coherences_analytic(p)?;
    Ok((coh_ab - coh_ac, difference_factors(p)))
}

/// Sign split on `lambda3 - lambda2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Case {
    /// `lambda3 - lambda2 >= 0`.
    CaseI,
    /// `lambda3 - lambda2 < 0`.
    CaseII,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CaseLabel {
    #[serde(rename = "CaseI-W-consistent")]
    CaseIWConsistent,
    #[serde(rename = "CaseI-GHZ-witness")]
    CaseIGhzWitness,
    #[serde(rename = "CaseII-W-consistent")]
    CaseIIWConsistent,
    #[serde(rename = "CaseII-GHZ-witness")]
    CaseIIGhzWitness,
    #[serde(rename = "boundary")]
    Boundary,
}

impl CaseLabel {
    pub fn as_str(&self) -> &'static str {
        match self {
            CaseLabel::CaseIWConsistent => "CaseI-W-consistent",
            CaseLabel::CaseIGhzWitness => "CaseI-GHZ-witness",
            CaseLabel::CaseIIWConsistent => "CaseII-W-consistent",
            CaseLabel::CaseIIGhzWitness => "CaseII-GHZ-witness",
            CaseLabel::Boundary => "boundary",
        }
    }

    pub fn is_ghz_witness(&self) -> bool {
        matches!(
            self,
            CaseLabel::CaseIGhzWitness | CaseLabel::CaseIIGhzWitness
        )
    }

    pub fn is_w_consistent(&self) -> bool {
        matches!(
            self,
            CaseLabel::CaseIWConsistent | CaseLabel::CaseIIWConsistent
        )
    }
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassificationReport {
    pub params: CanonicalThreeQubit,
    pub measures: CanonicalMeasures,
    pub coherence_difference: f64,
    pub factored_difference: (f64, f64),
    pub case: Case,
    pub case_label: CaseLabel,
    /// `4 l0^2 l4^2`; positive tangle with a W-consistent label shows the
    /// criterion is one-directional.
    pub tangle: f64,
    /// `coh_ab^2 + coh_ac^2 - 2 coh_a^2`.
    pub monogamy_margin: f64,
    pub observables: ObservableTriple,
}

/// Labels a `theta = 0` canonical state by the Case I / Case II table.
///
/// The W-consistent labels certify nothing; only the GHZ-witness labels are
/// conclusive.
pub fn discriminate(p: &CanonicalThreeQubit) -> Result<ClassificationReport> {
    let (difference, (f32_, f014)) = coherence_difference(p)?;
    let measures = canonical_measures_analytic(p)?;
    let case = if f32_ >= 0.0 {
        Case::CaseI
    } else {
        Case::CaseII
    };
    let case_label = if f32_.abs() <= BOUNDARY_TOL || f014.abs() <= BOUNDARY_TOL {
        CaseLabel::Boundary
    } else {
        match (case, difference >= 0.0) {
            (Case::CaseI, true) => CaseLabel::CaseIWConsistent,
            (Case::CaseI, false) => CaseLabel::CaseIGhzWitness,
            (Case::CaseII, false) => CaseLabel::CaseIIWConsistent,
            (Case::CaseII, true) => CaseLabel::CaseIIGhzWitness,
        }
    };
    Ok(ClassificationReport {
        params: *p,
        measures,
        coherence_difference: difference,
        factored_difference: (f32_, f014),
        case,
        case_label,
        tangle: measures.tangle,
        monogamy_margin: coherence_monogamy_check(p)?,
        observables: observables_expectations(p)?,
    })
}

/// `coh_ab^2 + coh_ac^2 - 2 coh_a^2`; non-negative on the `theta = 0` family.
pub fn coherence_monogamy_check(p: &CanonicalThreeQubit) -> Result<f64> {
    let (ab, ac, a) = reduced_coherences_analytic(p)?;
    Ok(ab * ab + ac * ac - 2.0 * a * a)
}

fn require_result_hypothesis(p: &CanonicalThreeQubit) -> Result<()> {
    require_real_family("result check", p)?;
    let [l0, _, _, _, l4] = p.lambdas();
    if l0 <= 0.0 {
        return Err(Error::Precondition("lambda0 > 0 fails".into()));
    }
    if l4 <= 0.0 {
        return Err(Error::Precondition(
            "lambda4 > 0 fails (state is not GHZ class)".into(),
        ));
    }
    let margin = difference_factors(p).1;
    if margin >= 0.0 {
        return Err(Error::Precondition(format!(
            "lambda0 + lambda1 - lambda4 < 0 fails: got {margin:.6}"
        )));
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Result1Record {
    /// `C_AB + C_AC`.
    pub lhs: f64,
    /// `2 C_l1(rho_AC)`.
    pub rhs: f64,
    pub holds: bool,
    pub coh_ab: f64,
    pub coh_ac: f64,
    /// `coh_ab < coh_ac`, the intermediate step of the argument.
    pub intermediate_holds: bool,
}

/// `C_AB + C_AC < 2 C_l1(rho_AC)` for GHZ-class states with
/// `l0 + l1 < l4`.
pub fn result1_check(p: &CanonicalThreeQubit) -> Result<Result1Record> {
    require_result_hypothesis(p)?;
    let m = canonical_measures_analytic(p)?;
    let lhs = m.c_ab + m.c_ac;
    let rhs = 2.0 * m.coh_ac;
    Ok(Result1Record {
        lhs,
        rhs,
        holds: lhs < rhs,
        coh_ab: m.coh_ab,
        coh_ac: m.coh_ac,
        intermediate_holds: m.coh_ab < m.coh_ac,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Result2Record {
    pub coh_a: f64,
    pub coh_ac: f64,
    /// `coh_ab * coh_ac - coh_a^2`, evaluated directly.
    pub product_minus_square: f64,
    /// The printed expansion
    /// `4 l0 l1 l2 (l0 + l1) + 4 l3 (l0 + l1)(l0 l1 + l0 l2 + l1 l2)`.
    pub printed_expansion: f64,
    /// Whether the two values above agree within `1e-10`.
    pub expansion_matches: bool,
    /// `coh_a < coh_ac`.
    pub holds: bool,
}

/// The printed expansion of `coh_ab * coh_ac - coh_a^2`. It is not the full
/// expansion of that product, but it is non-negative for any `lambda_i >= 0`.
pub fn printed_product_expansion(p: &CanonicalThreeQubit) -> f64 {
    let [l0, l1, l2, l3, _] = p.lambdas();
    4.0 * l0 * l1 * l2 * (l0 + l1) + 4.0 * l3 * (l0 + l1) * (l0 * l1 + l0 * l2 + l1 * l2)
}

/// `C_l1(rho_A) < C_l1(rho_AC)` under the same hypothesis as
/// [`result1_check`].
pub fn result2_check(p: &CanonicalThreeQubit) -> Result<Result2Record> {
    require_result_hypothesis(p)?;
    let (ab, ac, a) = reduced_coherences_analytic(p)?;
    let direct = ab * ac - a * a;
    let printed = printed_product_expansion(p);
    Ok(Result2Record {
        coh_a: a,
        coh_ac: ac,
        product_minus_square: direct,
        printed_expansion: printed,
        expansion_matches: (direct - printed).abs() <= IDENTITY_TOL,
        holds: a < ac,
    })
}

/// `O = 2 XXX`, `O1 = 2 XZZ`, `O2 = (I+Z)(I+Z)(I+Z) / 4`.
pub struct WitnessObservables {
    pub o: ComplexMatrix,
    pub o1: ComplexMatrix,
    pub o2: ComplexMatrix,
}

pub fn witness_observables() -> &'static WitnessObservables {
    static OPS: OnceLock<WitnessObservables> = OnceLock::new();
    OPS.get_or_init(|| {
        let p = PauliSet::new();
        let (x, z) = (&p.sigma_x, &p.sigma_z);
        let up = p.identity.add(z).expect("2x2");
        WitnessObservables {
            o: x.kron(x).kron(x).scale_real(2.0),
            o1: x.kron(z).kron(z).scale_real(2.0),
            o2: up.kron(&up).kron(&up).scale_real(0.25),
        }
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ObservableTriple {
    pub exp_o: f64,
    pub exp_o1: f64,
    pub exp_o2: f64,
    /// `<O> > <O1> + <O2>`.
    pub witness_holds: bool,
    /// Largest deviation from `(4 l0 l4, 4 l0 l1, 2 l0^2)`; present for
    /// `theta = 0` only.
    pub closed_form_residual: Option<f64>,
}

/// `(4 l0 l4, 4 l0 l1, 2 l0^2)`, the expectations on the `theta = 0` family.
pub fn observables_closed_form(p: &CanonicalThreeQubit) -> (f64, f64, f64) {
    let [l0, l1, _, _, l4] = p.lambdas();
    (4.0 * l0 * l4, 4.0 * l0 * l1, 2.0 * l0 * l0)
}

pub fn observables_expectations(p: &CanonicalThreeQubit) -> Result<ObservableTriple> {
    let psi = canonical_state(p);
    let ops = witness_observables();
    let exp_o = psi.expectation(&ops.o)?.re;
    let exp_o1 = psi.expectation(&ops.o1)?.re;
    let exp_o2 = psi.expectation(&ops.o2)?.re;
    let closed_form_residual = p.is_real_family().then(|| {
        let (a, b, c) = observables_closed_form(p);
        (exp_o - a)
            .abs()
            .max((exp_o1 - b).abs())
            .max((exp_o2 - c).abs())
    });
    Ok(ObservableTriple {
        exp_o,
        exp_o1,
        exp_o2,
        witness_holds: exp_o > exp_o1 + exp_o2,
        closed_form_residual,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WitnessRecord {
    /// `l0 + l1 - l4`.
    pub lambda_margin: f64,
    pub witness_holds: bool,
    /// `lambda_margin < 0` implies `witness_holds`. The converse is not checked.
    pub witness_implication_ok: bool,
}

pub fn parameter_witness(p: &CanonicalThreeQubit) -> Result<WitnessRecord> {
    if p.lambda(0) <= 0.0 {
        return Err(Error::Precondition(
            "parameter witness needs lambda0 > 0".into(),
        ));
    }
    let lambda_margin = difference_factors(p).1;
    let witness_holds = observables_expectations(p)?.witness_holds;
    Ok(WitnessRecord {
        lambda_margin,
        witness_holds,
        witness_implication_ok: lambda_margin >= 0.0 || witness_holds,
    })
}

/// Convention for `C_l1` when comparing against the induced 1-norm.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AuditReading {
    /// Ordered-pair sum, as used everywhere else in this crate.
    Eq1Convention,
    /// Twice the ordered-pair sum.
    AppendixFactor2,
}

impl AuditReading {
    fn coherence(&self, l1: f64) -> f64 {
        match self {
            AuditReading::Eq1Convention => l1,
            AuditReading::AppendixFactor2 => 2.0 * l1,
        }
    }
}

/// Worst violation of `||rho||_1 <= C_l1` found by an audit.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WorstCase {
    pub index: u64,
    /// `C_l1 - ||rho||_1` under the audited reading (negative).
    pub margin: f64,
    pub induced_one_norm: f64,
    pub l1_coherence: f64,
    pub concurrence: f64,
    /// Path of the serialized state, filled in by whoever writes it out.
    pub state_file: Option<String>,
    #[serde(skip)]
    pub state: DensityMatrix,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AuditRecord {
    pub reading: AuditReading,
    pub samples: u64,
    pub violations_found: u64,
    pub entangled_samples: u64,
    pub entangled_violations: u64,
    pub worst_case: Option<WorstCase>,
}

impl AuditRecord {
    fn empty(reading: AuditReading) -> Self {
        Self {
            reading,
            samples: 0,
            violations_found: 0,
            entangled_samples: 0,
            entangled_violations: 0,
            worst_case: None,
        }
    }

    fn absorb(&mut self, index: u64, point: &AuditPoint) {
        let margin = self.reading.coherence(point.l1) - point.induced_one;
        let entangled = point.concurrence > 0.0;
        self.samples += 1;
        self.entangled_samples += u64::from(entangled);
        if margin < 0.0 {
            self.violations_found += 1;
            self.entangled_violations += u64::from(entangled);
            let worse = self.worst_case.as_ref().is_none_or(|w| margin < w.margin);
            if worse {
                self.worst_case = Some(WorstCase {
                    index,
                    margin,
                    induced_one_norm: point.induced_one,
                    l1_coherence: point.l1,
                    concurrence: point.concurrence,
                    state_file: None,
                    state: point.state.clone(),
                });
            }
        }
    }
}

struct AuditPoint {
    induced_one: f64,
    l1: f64,
    concurrence: f64,
    state: DensityMatrix,
}

fn audit_point(rho: DensityMatrix) -> Result<AuditPoint> {
    Ok(AuditPoint {
        induced_one: induced_one_norm(rho.matrix()),
        l1: l1_coherence(&rho),
        concurrence: concurrence(&rho)?,
        state: rho,
    })
}

/// Audits one state under both readings.
pub fn appendix_a_audit_state(rho: &DensityMatrix) -> Result<(AuditRecord, AuditRecord)> {
    let point = audit_point(rho.clone())?;
    let mut a = AuditRecord::empty(AuditReading::Eq1Convention);
    let mut b = AuditRecord::empty(AuditReading::AppendixFactor2);
    a.absorb(0, &point);
    b.absorb(0, &point);
    Ok((a, b))
}

/// Compares the induced 1-norm with `C_l1` over a two-qubit ensemble under
/// both readings. Samples are evaluated in index order (optionally sharded)
/// and merged deterministically.
pub fn appendix_a_audit(
    ensemble: &EnsembleSpec,
    workers: Option<usize>,
) -> Result<(AuditRecord, AuditRecord)> {
    ensemble.validate(4)?;
    let points = map_indexed(ensemble.count, workers, |k| {
        ensemble.density_at(4, k).and_then(audit_point)
    });
    let mut a = AuditRecord::empty(AuditReading::Eq1Convention);
    let mut b = AuditRecord::empty(AuditReading::AppendixFactor2);
    for (k, point) in points.into_iter().enumerate() {
        let point = point?;
        a.absorb(k as u64, &point);
        b.absorb(k as u64, &point);
    }
    Ok((a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::werner_state;

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

    #[test]
    fn difference_examples() {
        let (d, (a, b)) = coherence_difference(&mixed_ghz_point()).unwrap();
        close(d, 0.116039, 1e-6);
        close(a, 0.2, 1e-15);
        close(b, 0.290098, 1e-6);

        let tied = CanonicalThreeQubit::real([0.5, 0.5, 0.5, 0.5, 0.0]).unwrap();
        assert_eq!(coherence_difference(&tied).unwrap().0, 0.0);

        let (d, (a, b)) = coherence_difference(&regression_point()).unwrap();
        close(d, -0.065529, 1e-6);
        close(a, 0.10, 1e-15);
        close(b, -0.327647, 1e-6);
        close(d, 2.0 * a * b, 1e-10);
    }

    #[test]
    fn difference_rejects_phase() {
        let p = CanonicalThreeQubit::new(regression_point().lambdas(), 0.3).unwrap();
        assert!(matches!(
            coherence_difference(&p),
            Err(Error::OutOfFamily { .. })
        ));
        assert!(discriminate(&p).is_err());
    }

    #[test]
    fn discriminate_examples() {
        let r = discriminate(&w()).unwrap();
        assert_eq!(r.case, Case::CaseI);
        assert_eq!(r.case_label, CaseLabel::Boundary);
        assert_eq!(r.coherence_difference, 0.0);
        assert!(!r.case_label.is_ghz_witness());

        let r = discriminate(&regression_point()).unwrap();
        assert_eq!(r.case_label, CaseLabel::CaseIGhzWitness);
        close(r.tangle, 0.2466, 1e-12);

        let r = discriminate(&mixed_ghz_point()).unwrap();
        assert_eq!(r.case_label, CaseLabel::CaseIWConsistent);
        close(r.tangle, 0.3744, 1e-12);

        // lambda3 < lambda2 with a W-class state: Case II, difference < 0.
        let p = CanonicalThreeQubit::real([0.5, 0.5, 0.6, 0.14f64.sqrt(), 0.0]).unwrap();
        assert_eq!(
            discriminate(&p).unwrap().case_label,
            CaseLabel::CaseIIWConsistent
        );
    }

    #[test]
    fn case_labels_serialize_with_stable_names() {
        let json = serde_json::to_string(&discriminate(&regression_point()).unwrap()).unwrap();
        assert!(
            json.contains(r#""case_label":"CaseI-GHZ-witness""#),
            "{json}"
        );
        assert!(
            json.contains(r#""params":{"lambdas":[0.3,0.2,0.25,0.35,"#),
            "{json}"
        );
    }

    #[test]
    fn monogamy_examples() {
        close(coherence_monogamy_check(&ghz()).unwrap(), 0.0, 0.0);
        close(
            coherence_monogamy_check(&mixed_ghz_point()).unwrap(),
            3.209015,
            1e-5,
        );
        let no_l1 = CanonicalThreeQubit::real([0.5, 0.0, 0.5, 0.5, 0.5]).unwrap();
        let (ab, ac, _) = reduced_coherences_analytic(&no_l1).unwrap();
        close(
            coherence_monogamy_check(&no_l1).unwrap(),
            ab * ab + ac * ac,
            1e-15,
        );
    }

    #[test]
    fn result1_examples() {
        let r = result1_check(&regression_point()).unwrap();
        close(r.lhs, 0.36, 1e-12);
        close(r.rhs, 1.898706, 1e-6);
        assert!(r.holds);
        close(r.coh_ab, 0.883824, 1e-6);
        close(r.coh_ac, 0.949353, 1e-6);
        assert!(r.intermediate_holds);

        match result1_check(&mixed_ghz_point()) {
            Err(Error::Precondition(msg)) => assert!(msg.contains("0.290098"), "{msg}"),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(result1_check(&w()), Err(Error::Precondition(_))));
    }

    #[test]
    fn result2_examples() {
        let r = result2_check(&regression_point()).unwrap();
        close(r.coh_a, 0.12, 1e-12);
        close(r.coh_ac, 0.949353, 1e-6);
        assert!(r.holds);
        close(r.printed_expansion, 0.1595, 1e-12);
        close(r.product_minus_square, 0.824661, 1e-6);
        assert!(!r.expansion_matches);
    }

    #[test]
    fn printed_expansion_vanishes_without_l1_l3() {
        let p = CanonicalThreeQubit::real([0.5, 0.0, 0.5, 0.0, 0.5f64.sqrt()]).unwrap();
        assert_eq!(printed_product_expansion(&p), 0.0);
        let (ab, ac, a) = reduced_coherences_analytic(&p).unwrap();
        assert!(ab * ac - a * a > 0.0);
    }

    #[test]
    fn observable_examples() {
        let t = observables_expectations(&ghz()).unwrap();
        close(t.exp_o, 2.0, 1e-12);
        close(t.exp_o1, 0.0, 1e-12);
        close(t.exp_o2, 1.0, 1e-12);
        assert!(t.witness_holds);

        let t = observables_expectations(&regression_point()).unwrap();
        close(t.exp_o, 4.0 * 0.3 * 0.685f64.sqrt(), 1e-12);
        close(t.exp_o, 0.993177, 1e-6);
        close(t.exp_o1, 0.24, 1e-12);
        close(t.exp_o2, 0.18, 1e-12);
        assert!(t.witness_holds);
        assert!(t.closed_form_residual.unwrap() < 1e-12);

        let zero = CanonicalThreeQubit::real([1.0, 0.0, 0.0, 0.0, 0.0]).unwrap();
        let t = observables_expectations(&zero).unwrap();
        assert_eq!((t.exp_o, t.exp_o1, t.exp_o2), (0.0, 0.0, 2.0));
        assert!(!t.witness_holds);
    }

    #[test]
    fn parameter_witness_examples() {
        let r = parameter_witness(&regression_point()).unwrap();
        close(r.lambda_margin, -0.327647, 1e-6);
        assert!(r.witness_holds && r.witness_implication_ok);

        let r = parameter_witness(&ghz()).unwrap();
        close(r.lambda_margin, 0.0, 1e-15);
        assert!(r.witness_implication_ok);

        let no_l0 = CanonicalThreeQubit::real([0.0, 0.0, 0.0, 0.0, 1.0]).unwrap();
        assert!(matches!(
            parameter_witness(&no_l0),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn werner_audit() {
        let (a, b) = appendix_a_audit_state(&werner_state(0.9).unwrap()).unwrap();
        assert_eq!(a.violations_found, 1);
        assert_eq!(a.entangled_violations, 1);
        let worst = a.worst_case.unwrap();
        close(worst.induced_one_norm, 0.925, 1e-12);
        close(worst.l1_coherence, 0.9, 1e-12);
        close(worst.concurrence, 0.85, 1e-12);
        assert_eq!(b.violations_found, 0);
        assert!(b.worst_case.is_none());
    }

    #[test]
    fn maximally_mixed_violates_both_readings() {
        let rho = DensityMatrix::maximally_mixed(4).unwrap();
        let (a, b) = appendix_a_audit_state(&rho).unwrap();
        assert_eq!((a.violations_found, b.violations_found), (1, 1));
        assert_eq!(a.entangled_violations, 0);
        close(a.worst_case.unwrap().margin, -0.25, 1e-15);
    }

    #[test]
    fn sampled_audit_is_worker_independent() {
        let spec = EnsembleSpec::ginibre(4, 17, 300);
        let serial = appendix_a_audit(&spec, Some(1)).unwrap();
        let sharded = appendix_a_audit(&spec, Some(3)).unwrap();
        assert_eq!(serial, sharded);
        let (a, _) = serial;
        assert_eq!(a.samples, 300);
        assert_eq!(a.worst_case.is_some(), a.violations_found > 0);
    }
}
