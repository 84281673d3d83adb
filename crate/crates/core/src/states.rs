//! Pure and mixed qubit states, partial traces, and the five-parameter
//! canonical family of three-qubit pure states.
//!
//! Basis ordering is `|q_A q_B q_C>` with qubit A the most significant bit,
//! so index `0b110` is `|110>` and subsystem 0 is A.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigen, ComplexMatrix, PSD_CLAMP};

/// Normalization tolerance for pure states.
pub const PURE_NORM_TOL: f64 = 1e-12;
/// Hermiticity and trace tolerance for density matrices.
pub const DENSITY_TOL: f64 = 1e-10;
/// Normalization tolerance for canonical parameters.
pub const CANONICAL_NORM_TOL: f64 = 1e-10;

/// Subsystem index of qubit A.
pub const QUBIT_A: usize = 0;
/// Subsystem index of qubit B.
pub const QUBIT_B: usize = 1;
/// Subsystem index of qubit C.
pub const QUBIT_C: usize = 2;

fn check_power_of_two(dim: usize) -> Result<()> {
    if dim >= 2 && dim.is_power_of_two() {
        Ok(())
    } else {
        Err(Error::NotQubitDimension { dim })
    }
}

/// Normalized state vector on `log2(dim)` qubits.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    amplitudes: Vec<Complex64>,
}

impl PureState {
    pub fn new(amplitudes: Vec<Complex64>) -> Result<Self> {
        check_power_of_two(amplitudes.len())?;
        if amplitudes
            .iter()
            .any(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(Error::NotNormalized {
                deviation: f64::NAN,
            });
        }
        let norm_sqr: f64 = amplitudes.iter().map(|z| z.norm_sqr()).sum();
        let deviation = (norm_sqr - 1.0).abs();
        if deviation > PURE_NORM_TOL {
            return Err(Error::NotNormalized { deviation });
        }
        Ok(Self { amplitudes })
    }

    /// Rescales an arbitrary non-zero vector to unit norm.
    pub fn normalized(mut amplitudes: Vec<Complex64>) -> Result<Self> {
        let norm = amplitudes.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if !(norm > 0.0 && norm.is_finite()) {
            return Err(Error::NotNormalized { deviation: 1.0 });
        }
        for z in &mut amplitudes {
            *z /= norm;
        }
        Self::new(amplitudes)
    }

    /// Computational basis state `|index>`.
    pub fn basis(dim: usize, index: usize) -> Result<Self> {
        check_power_of_two(dim)?;
        if index >= dim {
            return Err(Error::InvalidParameter {
                field: "index",
                reason: format!("{index} >= {dim}"),
            });
        }
        let mut amps = vec![Complex64::new(0.0, 0.0); dim];
        amps[index] = Complex64::new(1.0, 0.0);
        Ok(Self { amplitudes: amps })
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    /// `<psi| op |psi>`.
    pub fn expectation(&self, op: &ComplexMatrix) -> Result<Complex64> {
        let ket = ComplexMatrix::column(&self.amplitudes);
        let applied = op.matmul(&ket)?;
        Ok(self
            .amplitudes
            .iter()
            .zip(applied.as_slice())
            .map(|(a, b)| a.conj() * b)
            .sum())
    }
}

/// Validated density matrix: Hermitian, unit trace, positive semidefinite.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(into = "DensityMatrixFile", try_from = "DensityMatrixFile")]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
}

impl DensityMatrix {
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::NotSquare {
                rows: matrix.rows(),
                cols: matrix.cols(),
            });
        }
        check_power_of_two(matrix.rows())?;
        let residual = matrix.hermitian_residual();
        if residual > DENSITY_TOL {
            return Err(Error::NotHermitian {
                residual,
                tol: DENSITY_TOL,
            });
        }
        let trace = matrix.trace();
        let deviation = (trace - Complex64::new(1.0, 0.0)).norm();
        if deviation > DENSITY_TOL {
            return Err(Error::BadTrace { deviation });
        }
        let eig = hermitian_eigen(&matrix, DENSITY_TOL)?;
        if let Some(&w) = eig.eigenvalues.first() {
            if w < -PSD_CLAMP {
                return Err(Error::NotPsd { eigenvalue: w });
            }
        }
        Ok(Self { matrix })
    }

    /// `I / dim`.
    pub fn maximally_mixed(dim: usize) -> Result<Self> {
        check_power_of_two(dim)?;
        Ok(Self {
            matrix: ComplexMatrix::identity(dim).scale_real(1.0 / dim as f64),
        })
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.matrix
    }

    /// `Tr(rho^2)`.
    pub fn purity(&self) -> f64 {
        let m = &self.matrix;
        m.as_slice().iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("density matrix serializes")
    }

    /// Parses the `{dim, re, im}` file format and validates every invariant.
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))
    }
}

/// On-disk representation of a density matrix: row-major real and imaginary
/// parts of length `dim * dim`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DensityMatrixFile {
    pub dim: usize,
    pub re: Vec<f64>,
    pub im: Vec<f64>,
}

impl From<DensityMatrix> for DensityMatrixFile {
    fn from(rho: DensityMatrix) -> Self {
        let entries = rho.matrix.as_slice();
        Self {
            dim: rho.dim(),
            re: entries.iter().map(|z| z.re).collect(),
            im: entries.iter().map(|z| z.im).collect(),
        }
    }
}

impl TryFrom<DensityMatrixFile> for DensityMatrix {
    type Error = Error;

    fn try_from(file: DensityMatrixFile) -> Result<Self> {
        let n = file.dim * file.dim;
        if file.re.len() != n || file.im.len() != n {
            return Err(Error::Format(format!(
                "dim {} needs {n} entries, got re={} im={}",
                file.dim,
                file.re.len(),
                file.im.len()
            )));
        }
        let data = file
            .re
            .iter()
            .zip(&file.im)
            .map(|(&re, &im)| Complex64::new(re, im))
            .collect();
        DensityMatrix::new(ComplexMatrix::new(file.dim, file.dim, data)?)
    }
}

/// `|psi><psi|`.
pub fn pure_to_density(psi: &PureState) -> DensityMatrix {
    let a = psi.amplitudes();
    let n = a.len();
    DensityMatrix {
        matrix: ComplexMatrix::from_fn(n, n, |i, j| a[i] * a[j].conj()),
    }
}

/// Traces out every subsystem not listed in `keep`.
///
/// `subsystem_dims` lists local dimensions with subsystem 0 most
/// significant. Kept subsystems appear in their original order.
pub fn partial_trace(
    rho: &DensityMatrix,
    subsystem_dims: &[usize],
    keep: &[usize],
) -> Result<DensityMatrix> {
    let total: usize = subsystem_dims.iter().product();
    if subsystem_dims.is_empty() || total != rho.dim() {
        return Err(Error::InvalidSubsystems(format!(
            "dims {subsystem_dims:?} do not multiply to {}",
            rho.dim()
        )));
    }
    let parts = subsystem_dims.len();
    let mut kept = vec![false; parts];
    for &k in keep {
        if k >= parts || kept[k] {
            return Err(Error::InvalidSubsystems(format!(
                "keep set {keep:?} has an invalid or repeated index"
            )));
        }
        kept[k] = true;
    }
    if keep.is_empty() || keep.len() == parts {
        return Err(Error::InvalidSubsystems(format!(
            "keep set {keep:?} must be a non-empty proper subset of {parts} subsystems"
        )));
    }

    let keep_dims: Vec<usize> = (0..parts)
        .filter(|&k| kept[k])
        .map(|k| subsystem_dims[k])
        .collect();
    let trace_dims: Vec<usize> = (0..parts)
        .filter(|&k| !kept[k])
        .map(|k| subsystem_dims[k])
        .collect();
    let keep_total: usize = keep_dims.iter().product();
    let trace_total: usize = trace_dims.iter().product();

    // Full index from (kept index, traced index).
    let compose = |ki: usize, ti: usize| -> usize {
        let mut k_digits = digits(ki, &keep_dims);
        let mut t_digits = digits(ti, &trace_dims);
        k_digits.reverse();
        t_digits.reverse();
        let mut idx = 0;
        for (part, &dim) in subsystem_dims.iter().enumerate() {
            let d = if kept[part] {
                k_digits.pop().unwrap()
            } else {
                t_digits.pop().unwrap()
            };
            idx = idx * dim + d;
        }
        idx
    };

    let full: Vec<Vec<usize>> = (0..keep_total)
        .map(|ki| (0..trace_total).map(|ti| compose(ki, ti)).collect())
        .collect();
    let m = rho.matrix();
    let reduced = ComplexMatrix::from_fn(keep_total, keep_total, |i, j| {
        full[i].iter().zip(&full[j]).map(|(&a, &b)| m[(a, b)]).sum()
    });
    DensityMatrix::new(reduced)
}

/// Mixed-radix digits of `index`, most significant first.
fn digits(mut index: usize, dims: &[usize]) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for (slot, &d) in out.iter_mut().zip(dims).rev() {
        *slot = index % d;
        index /= d;
    }
    out
}

/// Reduced state of a state on `n` qubits, keeping the listed qubits.
pub fn reduce_qubits(rho: &DensityMatrix, keep: &[usize]) -> Result<DensityMatrix> {
    let n = rho.dim().trailing_zeros() as usize;
    partial_trace(rho, &vec![2; n], keep)
}

/// `(|00> + |11>) / sqrt(2)` as a density matrix.
pub fn bell_state() -> DensityMatrix {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let z = Complex64::new(0.0, 0.0);
    let psi = PureState::new(vec![Complex64::new(h, 0.0), z, z, Complex64::new(h, 0.0)])
        .expect("Bell state is normalized");
    pure_to_density(&psi)
}

/// Werner state `p |Phi+><Phi+| + (1 - p) I / 4`.
pub fn werner_state(p: f64) -> Result<DensityMatrix> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter {
            field: "p",
            reason: format!("{p} outside [0, 1]"),
        });
    }
    let m = bell_state()
        .matrix()
        .scale_real(p)
        .add(&ComplexMatrix::identity(4).scale_real((1.0 - p) / 4.0))?;
    DensityMatrix::new(m)
}

/// Parameters `(lambda_0..lambda_4, theta)` of the canonical three-qubit form
/// `l0|000> + l1 e^{i theta}|100> + l2|101> + l3|110> + l4|111>`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CanonicalThreeQubit {
    lambdas: [f64; 5],
    theta: f64,
}

impl CanonicalThreeQubit {
    pub fn new(lambdas: [f64; 5], theta: f64) -> Result<Self> {
        const NAMES: [&str; 5] = ["lambda0", "lambda1", "lambda2", "lambda3", "lambda4"];
        for (name, &l) in NAMES.iter().zip(&lambdas) {
            if !l.is_finite() || l < 0.0 {
                return Err(Error::InvalidParameter {
                    field: name,
                    reason: format!("{l} is not a non-negative real"),
                });
            }
        }
        if !(0.0..=std::f64::consts::PI).contains(&theta) {
            return Err(Error::InvalidParameter {
                field: "theta",
                reason: format!("{theta} outside [0, pi]"),
            });
        }
        let norm: f64 = lambdas.iter().map(|l| l * l).sum();
        if (norm - 1.0).abs() > CANONICAL_NORM_TOL {
            return Err(Error::InvalidParameter {
                field: "lambdas",
                reason: format!("sum of squares deviates from 1 by {:e}", norm - 1.0),
            });
        }
        Ok(Self { lambdas, theta })
    }

    /// Shorthand for the `theta = 0` family.
    pub fn real(lambdas: [f64; 5]) -> Result<Self> {
        Self::new(lambdas, 0.0)
    }

    pub fn lambdas(&self) -> [f64; 5] {
        self.lambdas
    }

    pub fn lambda(&self, i: usize) -> f64 {
        self.lambdas[i]
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn is_real_family(&self) -> bool {
        self.theta == 0.0
    }
}

/// Amplitude vector of the canonical form.
pub fn canonical_state(p: &CanonicalThreeQubit) -> PureState {
    let [l0, l1, l2, l3, l4] = p.lambdas;
    let mut amps = vec![Complex64::new(0.0, 0.0); 8];
    amps[0b000] = Complex64::new(l0, 0.0);
    amps[0b100] = Complex64::from_polar(l1, p.theta);
    amps[0b101] = Complex64::new(l2, 0.0);
    amps[0b110] = Complex64::new(l3, 0.0);
    amps[0b111] = Complex64::new(l4, 0.0);
    PureState::new(amps).expect("validated canonical parameters give a normalized state")
}

/// Canonical state restricted to the GHZ class (`theta = 0`, `l0, l4 > 0`).
pub fn ghz_member(p: &CanonicalThreeQubit) -> Result<PureState> {
    if !p.is_real_family() {
        return Err(Error::OutOfFamily {
            op: "ghz_member",
            theta: p.theta,
        });
    }
    if p.lambdas[0] <= 0.0 {
        return Err(Error::Precondition("GHZ class needs lambda0 > 0".into()));
    }
    if p.lambdas[4] <= 0.0 {
        return Err(Error::Precondition("GHZ class needs lambda4 > 0".into()));
    }
    Ok(canonical_state(p))
}

/// Canonical state restricted to the W class (`theta = 0`, `l4 = 0`, `l0 > 0`).
pub fn w_member(p: &CanonicalThreeQubit) -> Result<PureState> {
    if !p.is_real_family() {
        return Err(Error::OutOfFamily {
            op: "w_member",
            theta: p.theta,
        });
    }
    if p.lambdas[4] != 0.0 {
        return Err(Error::Precondition(format!(
            "W class needs lambda4 = 0, got {}",
            p.lambdas[4]
        )));
    }
    if p.lambdas[0] <= 0.0 {
        return Err(Error::Precondition(
            "W class needs lambda0 > 0 (lambda0 = 0 makes both partial concurrences vanish)".into(),
        ));
    }
    Ok(canonical_state(p))
}
